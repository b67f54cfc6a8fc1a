//! Labeled preordered sets of D-classes: the regularity/group labeling,
//! the rank-extended labeling attached to an action, and isomorphism of
//! labeled preorders.

use crate::action::SAction;
use crate::error::Result;
use crate::greens::{d_class_preorder_from, greens_data, Preorder};
use crate::localstruct::{schutzenberger_group_of_class, Side};
use crate::permgroup::{perm_groups_isomorphic, PermGroup};
use crate::semigroup::Semigroup;

/// Label of one D-class node: regularity bit, Schützenberger group of
/// the class, and (when attached to an action) the transformation rank
/// of its elements.
#[derive(Debug, Clone)]
pub struct NodeLabel {
    pub regular: bool,
    pub group: PermGroup,
    pub rank: Option<usize>,
}

/// A preordered set whose nodes carry labels. Isomorphisms must respect
/// the order in both directions and the labels (group components up to
/// group isomorphism).
#[derive(Debug, Clone)]
pub struct LabeledPreorder {
    pub order: Preorder,
    pub labels: Vec<NodeLabel>,
    /// The underlying D-classes (element sets); informational.
    pub classes: Vec<Vec<usize>>,
}

/// The labeled D-class order of a semigroup: nodes are D-classes with
/// the ⪯ order, label `(ε, H)` with `ε = 1` iff the class is regular and
/// `H` its Schützenberger group.
pub fn labeled_dl(sg: &Semigroup) -> LabeledPreorder {
    let g = greens_data(sg);
    let dcp = d_class_preorder_from(&g);
    let labels = dcp
        .classes
        .iter()
        .enumerate()
        .map(|(c, cls)| NodeLabel {
            regular: dcp.regular[c],
            group: schutzenberger_group_of_class(sg, g.h_class_of(cls[0]), Side::Left),
            rank: None,
        })
        .collect();
    LabeledPreorder {
        order: dcp.order,
        labels,
        classes: dcp.classes,
    }
}

/// The rank-extended labeling `(ε, H, r)` where `r = |Q·s|` for the
/// elements of the class acting on `Q`. Rank is constant on D-classes;
/// a violation trips an assertion.
pub fn labeled_dq(sg: &Semigroup, action: &SAction) -> LabeledPreorder {
    let mut lp = labeled_dl(sg);
    for (c, cls) in lp.classes.iter().enumerate() {
        let rank = action.image_of(cls[0]).len();
        for &s in &cls[1..] {
            assert_eq!(
                action.image_of(s).len(),
                rank,
                "rank is not constant on D-class {c}"
            );
        }
        lp.labels[c].rank = Some(rank);
    }
    lp
}

/// `labeled_dl` of the local-units subsemigroup `LU(S)`; the labeled
/// order of the empty semigroup is returned when `E(S)` is empty.
pub fn labeled_dl_of_lu(sg: &Semigroup) -> LabeledPreorder {
    match sg.local_units_subsemigroup() {
        Ok((lu, _)) => labeled_dl(&lu),
        Err(_) => LabeledPreorder {
            order: Preorder::new(0, Vec::new()),
            labels: Vec::new(),
            classes: Vec::new(),
        },
    }
}

/// `labeled_dq` for `LU(S)` with the action restricted to it.
pub fn labeled_dq_of_lu(sg: &Semigroup, action: &SAction) -> LabeledPreorder {
    match sg.local_units_subsemigroup() {
        Ok((lu, embedding)) => labeled_dq(&lu, &action.restrict_to(&embedding)),
        Err(_) => LabeledPreorder {
            order: Preorder::new(0, Vec::new()),
            labels: Vec::new(),
            classes: Vec::new(),
        },
    }
}

/// Backtracking order-isomorphism search with label compatibility:
/// ε and rank exact, groups up to isomorphism.
pub fn labeled_preorders_isomorphic(p: &LabeledPreorder, q: &LabeledPreorder) -> Result<bool> {
    let n = p.labels.len();
    if n != q.labels.len() {
        return Ok(false);
    }
    // Pairwise label compatibility, with group isomorphism memoized.
    let mut compatible = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            let a = &p.labels[i];
            let b = &q.labels[j];
            compatible[i][j] = a.regular == b.regular
                && a.rank == b.rank
                && a.group.order() == b.group.order()
                && perm_groups_isomorphic(&a.group, &b.group)?;
        }
    }
    // Multiset prefilter: every node needs at least one candidate.
    if (0..n).any(|i| compatible[i].iter().all(|&c| !c)) {
        return Ok(false);
    }
    let mut assignment = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(assign(p, q, &compatible, &mut assignment, &mut used, 0))
}

fn assign(
    p: &LabeledPreorder,
    q: &LabeledPreorder,
    compatible: &[Vec<bool>],
    assignment: &mut [usize],
    used: &mut [bool],
    node: usize,
) -> bool {
    let n = assignment.len();
    if node == n {
        return true;
    }
    for cand in 0..n {
        if used[cand] || !compatible[node][cand] {
            continue;
        }
        let ok = (0..node).all(|prev| {
            p.order.le(node, prev) == q.order.le(cand, assignment[prev])
                && p.order.le(prev, node) == q.order.le(assignment[prev], cand)
        }) && p.order.le(node, node) == q.order.le(cand, cand);
        if !ok {
            continue;
        }
        assignment[node] = cand;
        used[cand] = true;
        if assign(p, q, compatible, assignment, used, node + 1) {
            return true;
        }
        assignment[node] = usize::MAX;
        used[cand] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn labels_of_t2() {
        let lp = labeled_dl(&fixtures::t2());
        assert_eq!(lp.classes, vec![vec![0, 1], vec![2, 3]]);
        // D_const ⪯ D_id; labels (1, Z2) and (1, trivial).
        assert!(lp.order.le(1, 0));
        assert!(lp.labels.iter().all(|l| l.regular));
        assert_eq!(lp.labels[0].group.order(), 2);
        assert_eq!(lp.labels[1].group.order(), 1);
    }

    #[test]
    fn labels_of_n2() {
        let lp = labeled_dl(&fixtures::n2());
        assert_eq!(lp.labels.len(), 2);
        // {a} is not regular, {z} is; both groups trivial.
        assert!(!lp.labels[0].regular);
        assert!(lp.labels[1].regular);
        assert!(lp.labels.iter().all(|l| l.group.order() == 1));
    }

    #[test]
    fn ranked_labels_of_t2_point_action() {
        let lp = labeled_dq(&fixtures::t2(), &fixtures::t2_point_action());
        assert_eq!(lp.labels[0].rank, Some(2)); // {id, sigma}
        assert_eq!(lp.labels[1].rank, Some(1)); // constants
    }

    #[test]
    fn ranked_labels_of_u1_chain_action() {
        let lp = labeled_dq(&fixtures::u1(), &fixtures::u1_chain_action());
        assert!(lp.labels.iter().all(|l| l.regular && l.group.order() == 1));
        assert_eq!(lp.labels[0].rank, Some(2));
        assert_eq!(lp.labels[1].rank, Some(1));
    }

    #[test]
    fn triv_and_rb22_have_isomorphic_labeled_orders_after_lu() {
        let a = labeled_dl_of_lu(&fixtures::triv());
        let b = labeled_dl_of_lu(&fixtures::rb22());
        assert!(labeled_preorders_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn u1_and_rz2_are_distinguished() {
        let a = labeled_dl_of_lu(&fixtures::u1());
        let b = labeled_dl_of_lu(&fixtures::rz2());
        assert_eq!(a.labels.len(), 2);
        assert_eq!(b.labels.len(), 1);
        assert!(!labeled_preorders_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn every_labeled_order_is_self_isomorphic() {
        for sg in fixtures::all() {
            let lp = labeled_dl(&sg);
            assert!(labeled_preorders_isomorphic(&lp, &lp).unwrap());
        }
    }

    #[test]
    fn lu_restriction_removes_classes_outside_lu() {
        // The labeled order of LU(S) consists of the D-classes of S that
        // lie inside LU(S), with unchanged labels.
        for sg in fixtures::all() {
            if sg.idempotents().is_empty() {
                continue;
            }
            let (_, embedding) = sg.local_units_subsemigroup().unwrap();
            let full = labeled_dl(&sg);
            let lu = labeled_dl_of_lu(&sg);
            let kept: Vec<&Vec<usize>> = full
                .classes
                .iter()
                .filter(|cls| cls.iter().all(|s| embedding.contains(s)))
                .collect();
            assert_eq!(kept.len(), lu.classes.len());
            for (lu_cls, full_cls) in lu.classes.iter().zip(kept.iter()) {
                let mapped: Vec<usize> = lu_cls.iter().map(|&i| embedding[i]).collect();
                assert_eq!(&mapped, *full_cls);
            }
        }
    }
}
