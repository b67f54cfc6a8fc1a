//! Concrete permutation groups on small carriers.

use crate::error::{Error, Result};
use crate::iso;
use crate::semigroup::Semigroup;

/// A group of permutations of a fixed finite carrier.
///
/// `carrier` is a sorted list of ambient indices (for example an H-class
/// of a semigroup); each permutation maps carrier *positions* to carrier
/// positions. The permutation list is sorted and duplicate-free, so two
/// equal groups compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    carrier: Vec<usize>,
    perms: Vec<Vec<usize>>,
}

impl PermGroup {
    /// Builds a group from an explicit set of permutations, checking the
    /// group axioms (identity, closure, inverses).
    pub fn from_perms(carrier: Vec<usize>, mut perms: Vec<Vec<usize>>) -> Result<Self> {
        let k = carrier.len();
        perms.sort();
        perms.dedup();
        for p in &perms {
            if p.len() != k || !is_permutation(p) {
                return Err(Error::MalformedCategory(format!(
                    "not a permutation of {k} points: {p:?}"
                )));
            }
        }
        let id: Vec<usize> = (0..k).collect();
        if !perms.contains(&id) {
            return Err(Error::MalformedCategory(
                "permutation set lacks the identity".into(),
            ));
        }
        for p in &perms {
            for q in &perms {
                let pq = compose(p, q);
                if perms.binary_search(&pq).is_err() {
                    return Err(Error::MalformedCategory(
                        "permutation set not closed under composition".into(),
                    ));
                }
            }
            if perms.binary_search(&invert(p)).is_err() {
                return Err(Error::MalformedCategory(
                    "permutation set not closed under inversion".into(),
                ));
            }
        }
        Ok(PermGroup { carrier, perms })
    }

    /// The group generated by a set of permutations.
    pub fn generate(carrier: Vec<usize>, gens: &[Vec<usize>]) -> Result<Self> {
        let k = carrier.len();
        for g in gens {
            if g.len() != k || !is_permutation(g) {
                return Err(Error::MalformedCategory(format!(
                    "not a permutation of {k} points: {g:?}"
                )));
            }
        }
        let id: Vec<usize> = (0..k).collect();
        let mut elems = vec![id];
        let mut frontier = elems.clone();
        while let Some(p) = frontier.pop() {
            for g in gens {
                let pg = compose(&p, g);
                if !elems.contains(&pg) {
                    elems.push(pg.clone());
                    frontier.push(pg);
                }
            }
        }
        elems.sort();
        Ok(PermGroup {
            carrier,
            perms: elems,
        })
    }

    pub fn trivial(carrier: Vec<usize>) -> Self {
        let k = carrier.len();
        PermGroup {
            carrier,
            perms: vec![(0..k).collect()],
        }
    }

    /// The cyclic group generated by an n-cycle on `0..n`.
    pub fn cyclic(n: usize) -> Self {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        PermGroup::generate((0..n).collect(), &[rot]).expect("cycle is a permutation")
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn carrier(&self) -> &[usize] {
        &self.carrier
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn is_abelian(&self) -> bool {
        self.perms
            .iter()
            .all(|p| self.perms.iter().all(|q| compose(p, q) == compose(q, p)))
    }

    /// Multiplicative order of each permutation, sorted ascending.
    pub fn element_orders(&self) -> Vec<usize> {
        let k = self.carrier.len();
        let id: Vec<usize> = (0..k).collect();
        let mut orders: Vec<usize> = self
            .perms
            .iter()
            .map(|p| {
                let mut acc = p.clone();
                let mut ord = 1;
                while acc != id {
                    acc = compose(&acc, p);
                    ord += 1;
                }
                ord
            })
            .collect();
        orders.sort_unstable();
        orders
    }

    /// The Cayley table of the group as an abstract semigroup
    /// (element i = i-th permutation in sorted order).
    pub fn cayley_semigroup(&self) -> Semigroup {
        let n = self.perms.len();
        let mut table = vec![vec![0usize; n]; n];
        for (i, p) in self.perms.iter().enumerate() {
            for (j, q) in self.perms.iter().enumerate() {
                let pq = compose(p, q);
                table[i][j] = self.perms.binary_search(&pq).expect("closure");
            }
        }
        Semigroup::from_table(table, None).expect("group table is associative")
    }
}

/// `compose(p, q)` applies `p` first, then `q`.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&i| q[i]).collect()
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &v in p {
        if v >= p.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

pub const DEFAULT_ISO_CAP: usize = 256;

/// Decides whether two permutation groups are abstractly isomorphic.
///
/// Cheap invariants first (order, element-order multiset, abelianness),
/// then generator-image backtracking on the Cayley tables.
pub fn perm_groups_isomorphic(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    perm_groups_isomorphic_with_cap(g, h, DEFAULT_ISO_CAP)
}

pub fn perm_groups_isomorphic_with_cap(g: &PermGroup, h: &PermGroup, cap: usize) -> Result<bool> {
    if g.order() > cap || h.order() > cap {
        return Err(Error::SizeCapExceeded {
            order: g.order().max(h.order()),
            cap,
        });
    }
    if g.order() != h.order() {
        return Ok(false);
    }
    if g.element_orders() != h.element_orders() {
        return Ok(false);
    }
    if g.is_abelian() != h.is_abelian() {
        return Ok(false);
    }
    Ok(iso::find_isomorphism(&g.cayley_semigroup(), &h.cayley_semigroup()).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> PermGroup {
        PermGroup::cyclic(2)
    }

    fn z4() -> PermGroup {
        PermGroup::cyclic(4)
    }

    fn klein() -> PermGroup {
        PermGroup::generate(vec![0, 1, 2, 3], &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).unwrap()
    }

    #[test]
    fn generated_groups_have_expected_orders() {
        assert_eq!(z2().order(), 2);
        assert_eq!(z4().order(), 4);
        assert_eq!(klein().order(), 4);
    }

    #[test]
    fn z4_and_klein_differ_by_element_orders() {
        assert_eq!(z4().element_orders(), vec![1, 2, 4, 4]);
        assert_eq!(klein().element_orders(), vec![1, 2, 2, 2]);
        assert!(!perm_groups_isomorphic(&z4(), &klein()).unwrap());
    }

    #[test]
    fn a_group_is_isomorphic_to_itself() {
        for g in [z2(), z4(), klein()] {
            assert!(perm_groups_isomorphic(&g, &g).unwrap());
        }
    }

    #[test]
    fn size_cap_is_enforced() {
        let g = PermGroup::cyclic(5);
        assert!(matches!(
            perm_groups_isomorphic_with_cap(&g, &g, 4),
            Err(Error::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn from_perms_rejects_non_groups() {
        // Missing inverse/closure: {id, 3-cycle} without its square.
        let id = vec![0, 1, 2];
        let cyc = vec![1, 2, 0];
        assert!(PermGroup::from_perms(vec![0, 1, 2], vec![id, cyc]).is_err());
    }

    #[test]
    fn cayley_table_of_z2() {
        let t = z2().cayley_semigroup();
        assert_eq!(t.order(), 2);
        assert_eq!(t.identity(), Some(0));
        assert_eq!(t.mul(1, 1), 0);
    }
}
