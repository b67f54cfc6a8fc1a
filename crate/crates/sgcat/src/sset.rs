//! Brute-force enumeration of S-set morphisms between principal right
//! ideals. This is the cross-checking oracle for the Schützenberger
//! category: it works directly on the multiplication table and never
//! touches the category machinery.

use crate::semigroup::{OneElt, Semigroup};

/// An equivariant map `sS¹ → tS¹`, tabulated on the sorted domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SSetMorphism {
    pub domain: Vec<usize>,
    pub codomain: Vec<usize>,
    /// `map[i]` is the image of `domain[i]`.
    pub map: Vec<usize>,
    /// The image of the generator `s`; the map is determined by it.
    pub value_at_base: usize,
}

impl SSetMorphism {
    pub fn apply(&self, x: usize) -> usize {
        let i = self.domain.binary_search(&x).expect("x in domain");
        self.map[i]
    }
}

/// All S-set morphisms `sS¹ → tS¹`, i.e. maps with `f(x·r) = f(x)·r`.
///
/// Every element of `sS¹` is `s·r` for some `r ∈ S¹`, so a morphism is
/// determined by `f(s) = y`; the choice is admissible iff `s·r₁ = s·r₂`
/// implies `y·r₁ = y·r₂`.
pub fn enumerate_sset_morphisms(sg: &Semigroup, s: usize, t: usize) -> Vec<SSetMorphism> {
    let domain = sg.right_ideal(s);
    let codomain = sg.right_ideal(t);
    let one: Vec<OneElt> = sg.one_elements().collect();
    let mut out = Vec::new();
    for &y in &codomain {
        let consistent = one.iter().all(|&r1| {
            one.iter().all(|&r2| {
                sg.mul_one(Some(s), r1) != sg.mul_one(Some(s), r2)
                    || sg.mul_one(Some(y), r1) == sg.mul_one(Some(y), r2)
            })
        });
        if !consistent {
            continue;
        }
        let map: Vec<usize> = domain
            .iter()
            .map(|&x| {
                let r = one
                    .iter()
                    .copied()
                    .find(|&r| sg.mul_one(Some(s), r) == Some(x))
                    .expect("x lies in sS¹");
                sg.mul_one(Some(y), r).unwrap()
            })
            .collect();
        // Tabulated images stay in tS¹ and the map is equivariant.
        debug_assert!(map.iter().all(|v| codomain.binary_search(v).is_ok()));
        out.push(SSetMorphism {
            domain: domain.clone(),
            codomain: codomain.clone(),
            map,
            value_at_base: y,
        });
    }
    out
}

/// The witnesses `u ∈ S¹` with `f(x) = u·x` for all `x` in the domain.
pub fn inner_witnesses(sg: &Semigroup, f: &SSetMorphism) -> Vec<OneElt> {
    sg.one_elements()
        .filter(|&u| {
            f.domain
                .iter()
                .enumerate()
                .all(|(i, &x)| sg.mul_one(u, Some(x)) == Some(f.map[i]))
        })
        .collect()
}

/// A morphism is inner if some left multiplication realizes it.
pub fn is_inner(sg: &Semigroup, f: &SSetMorphism) -> bool {
    !inner_witnesses(sg, f).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn c21_endomorphisms_of_x_ideal() {
        let c21 = fixtures::c21();
        let ms = enumerate_sset_morphisms(&c21, 0, 0);
        // Two morphisms, matching |xS¹ ∩ S¹x| = 2.
        assert_eq!(ms.len(), 2);
        let right = c21.right_ideal(0);
        let left = c21.left_ideal(0);
        let inter: Vec<usize> = right
            .iter()
            .copied()
            .filter(|u| left.binary_search(u).is_ok())
            .collect();
        assert_eq!(inter.len(), 2);
        assert!(ms.iter().all(|f| is_inner(&c21, f)));
    }

    #[test]
    fn t2_constant_to_identity_ideal() {
        let t2 = fixtures::t2();
        // Morphisms c0S¹ → idS¹ biject with idS¹ ∩ S¹c0 = {c0}.
        let ms = enumerate_sset_morphisms(&t2, 2, 0);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].value_at_base, 2);
        assert!(is_inner(&t2, &ms[0]));
    }

    #[test]
    fn identity_map_is_always_found() {
        for sg in fixtures::all() {
            for s in sg.elements() {
                let ms = enumerate_sset_morphisms(&sg, s, s);
                assert!(ms.iter().any(|f| f.value_at_base == s && f.domain == f.map));
            }
        }
    }

    #[test]
    fn abstract_morphisms_can_outnumber_inner_ones() {
        // Order-3 null semigroup {a, b, z}: f(a) = b is equivariant on
        // aS¹ = {a, z}, but b is not in S¹a, so no left multiplication
        // realizes it.
        let n3 = crate::semigroup::Semigroup::from_table(
            vec![vec![2, 2, 2], vec![2, 2, 2], vec![2, 2, 2]],
            None,
        )
        .unwrap();
        let ms = enumerate_sset_morphisms(&n3, 0, 1);
        assert_eq!(ms.len(), 2); // f(a) ∈ {b, z}
        let non_inner: Vec<_> = ms.iter().filter(|f| !is_inner(&n3, f)).collect();
        assert_eq!(non_inner.len(), 1);
        assert_eq!(non_inner[0].value_at_base, 1);
    }
}
