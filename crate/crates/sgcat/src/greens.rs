//! Green's preorders and equivalences (R, L, J, H, D), principal
//! ideals, regularity of D-classes, and the ordered set of D-classes.

use crate::semigroup::Semigroup;

/// A reflexive transitive relation stored as a dense bit-matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    n: usize,
    le: Vec<bool>,
}

impl Preorder {
    pub fn new(n: usize, le: Vec<bool>) -> Self {
        assert_eq!(le.len(), n * n);
        Preorder { n, le }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `a ≤ b`.
    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a * self.n + b]
    }

    /// `a ≤ b` and `b ≤ a`.
    pub fn equivalent(&self, a: usize, b: usize) -> bool {
        self.le(a, b) && self.le(b, a)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.le(a, a))
    }

    pub fn is_transitive(&self) -> bool {
        for a in 0..self.n {
            for b in 0..self.n {
                if !self.le(a, b) {
                    continue;
                }
                for c in 0..self.n {
                    if self.le(b, c) && !self.le(a, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| a == b || !(self.le(a, b) && self.le(b, a))))
    }

    /// Covering pairs `(a, b)` with `a < b` and nothing strictly between.
    /// Only meaningful for antisymmetric relations.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let lt = |a: usize, b: usize| a != b && self.le(a, b);
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if lt(a, b) && !(0..self.n).any(|c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Groups elements by key, classes ordered by smallest contained index.
fn classes_from_keys<K: PartialEq>(keys: &[K]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = keys.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![i];
        class_of[i] = id;
        for j in i + 1..n {
            if class_of[j] == usize::MAX && keys[j] == keys[i] {
                class_of[j] = id;
                members.push(j);
            }
        }
        classes.push(members);
    }
    (class_of, classes)
}

impl Semigroup {
    /// The principal right ideal `sS¹ = {s} ∪ sS`, sorted.
    pub fn right_ideal(&self, s: usize) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[s] = true;
        for x in self.elements() {
            member[self.mul(s, x)] = true;
        }
        mask_to_sorted(&member)
    }

    /// The principal left ideal `S¹s = {s} ∪ Ss`, sorted.
    pub fn left_ideal(&self, s: usize) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[s] = true;
        for x in self.elements() {
            member[self.mul(x, s)] = true;
        }
        mask_to_sorted(&member)
    }

    /// The principal two-sided ideal `S¹sS¹`, sorted.
    pub fn two_sided_ideal(&self, s: usize) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[s] = true;
        for x in self.elements() {
            member[self.mul(s, x)] = true;
            member[self.mul(x, s)] = true;
            for y in self.elements() {
                member[self.mul(self.mul(x, s), y)] = true;
            }
        }
        mask_to_sorted(&member)
    }
}

fn mask_to_sorted(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}

/// All of Green's data for one semigroup.
#[derive(Debug, Clone)]
pub struct GreensData {
    pub le_r: Preorder,
    pub le_l: Preorder,
    pub le_j: Preorder,
    pub r_class: Vec<usize>,
    pub l_class: Vec<usize>,
    pub j_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub d_class: Vec<usize>,
    pub r_classes: Vec<Vec<usize>>,
    pub l_classes: Vec<Vec<usize>>,
    pub h_classes: Vec<Vec<usize>>,
    pub d_classes: Vec<Vec<usize>>,
    /// Per D-class: does it contain an idempotent?
    pub d_regular: Vec<bool>,
}

impl GreensData {
    /// The H-class of an element, sorted.
    pub fn h_class_of(&self, s: usize) -> &[usize] {
        &self.h_classes[self.h_class[s]]
    }
}

/// Computes ideals, preorders and all class structures.
///
/// `D` is obtained as the reflexive-transitive closure of `R ∪ L` and then
/// asserted equal to `J`; on finite semigroups the two always coincide, so
/// a mismatch can only mean an internal bug.
pub fn greens_data(sg: &Semigroup) -> GreensData {
    let n = sg.order();
    let right: Vec<Vec<usize>> = (0..n).map(|s| sg.right_ideal(s)).collect();
    let left: Vec<Vec<usize>> = (0..n).map(|s| sg.left_ideal(s)).collect();
    let two: Vec<Vec<usize>> = (0..n).map(|s| sg.two_sided_ideal(s)).collect();

    // s ≤_R t iff s ∈ tS¹, and dually.
    let mut le_r = vec![false; n * n];
    let mut le_l = vec![false; n * n];
    let mut le_j = vec![false; n * n];
    for s in 0..n {
        for t in 0..n {
            le_r[s * n + t] = right[t].binary_search(&s).is_ok();
            le_l[s * n + t] = left[t].binary_search(&s).is_ok();
            le_j[s * n + t] = two[t].binary_search(&s).is_ok();
        }
    }
    let le_r = Preorder::new(n, le_r);
    let le_l = Preorder::new(n, le_l);
    let le_j = Preorder::new(n, le_j);

    let (r_class, r_classes) = classes_from_keys(&right);
    let (l_class, l_classes) = classes_from_keys(&left);
    let (j_class, j_classes) = classes_from_keys(&two);
    let h_keys: Vec<(usize, usize)> = (0..n).map(|s| (r_class[s], l_class[s])).collect();
    let (h_class, h_classes) = classes_from_keys(&h_keys);

    // D = transitive closure of R ∪ L (union-find over the joint classes).
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for cls in r_classes.iter().chain(l_classes.iter()) {
        for &m in &cls[1..] {
            let a = find(&mut parent, cls[0]);
            let b = find(&mut parent, m);
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    let d_keys: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    let (d_class, d_classes) = classes_from_keys(&d_keys);

    // Tripwire: on finite semigroups D = J.
    assert_eq!(
        d_class, j_class,
        "internal error: D-equivalence differs from J-equivalence on a finite semigroup"
    );
    debug_assert_eq!(d_classes.len(), j_classes.len());

    let d_regular: Vec<bool> = d_classes
        .iter()
        .map(|cls| cls.iter().any(|&e| sg.is_idempotent(e)))
        .collect();

    GreensData {
        le_r,
        le_l,
        le_j,
        r_class,
        l_class,
        j_class,
        h_class,
        d_class,
        r_classes,
        l_classes,
        h_classes,
        d_classes,
        d_regular,
    }
}

/// The D-classes of a semigroup ordered by the J-order of their members.
#[derive(Debug, Clone)]
pub struct DClassPreorder {
    /// `order.le(c1, c2)` iff some `d1 ∈ D_{c1}`, `d2 ∈ D_{c2}` have `d1 ≤_J d2`.
    pub order: Preorder,
    pub classes: Vec<Vec<usize>>,
    pub regular: Vec<bool>,
}

pub fn d_class_preorder(sg: &Semigroup) -> DClassPreorder {
    let g = greens_data(sg);
    d_class_preorder_from(&g)
}

pub fn d_class_preorder_from(g: &GreensData) -> DClassPreorder {
    let k = g.d_classes.len();
    let mut le = vec![false; k * k];
    for (c1, cls1) in g.d_classes.iter().enumerate() {
        for (c2, cls2) in g.d_classes.iter().enumerate() {
            le[c1 * k + c2] = cls1
                .iter()
                .any(|&d1| cls2.iter().any(|&d2| g.le_j.le(d1, d2)));
        }
    }
    DClassPreorder {
        order: Preorder::new(k, le),
        classes: g.d_classes.clone(),
        regular: g.d_regular.clone(),
    }
}
