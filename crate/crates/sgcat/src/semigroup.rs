//! Finite semigroups as explicit multiplication tables.
//!
//! Elements are identified with their table index; optional names are
//! display-only. The adjoined identity of `S¹` is never materialized:
//! it is handled through [`OneElt`] (`None` is the formal identity) and
//! the [`Semigroup::mul_one`] view.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// An element of `S¹`: `None` is the adjoined formal identity, `Some(i)`
/// is the element with table index `i`.
pub type OneElt = Option<usize>;

/// A finite semigroup given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    order: usize,
    /// Row-major `order × order` table; `table[i * order + j] = i·j`.
    table: Vec<usize>,
    names: Option<Vec<String>>,
    identity: Option<usize>,
}

impl Semigroup {
    /// Validates and wraps a multiplication table.
    ///
    /// Checks squareness, entry range and associativity (all `n³`
    /// triples), and records a two-sided identity if one exists.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(Error::NotSquare {
                    row,
                    len: r.len(),
                    order,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(Error::OutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                flat.push(value);
            }
        }
        if let Some(ns) = &names {
            if ns.len() != order {
                return Err(Error::NotSquare {
                    row: 0,
                    len: ns.len(),
                    order,
                });
            }
        }
        let sg = Semigroup {
            order,
            table: flat,
            names,
            identity: None,
        };
        for i in 0..order {
            for j in 0..order {
                for k in 0..order {
                    if sg.mul(sg.mul(i, j), k) != sg.mul(i, sg.mul(j, k)) {
                        return Err(Error::NonAssociative { i, j, k });
                    }
                }
            }
        }
        let identity =
            (0..order).find(|&e| (0..order).all(|i| sg.mul(e, i) == i && sg.mul(i, e) == i));
        Ok(Semigroup { identity, ..sg })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `a·b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Product in the `S¹` view; `None` acts as a two-sided identity.
    pub fn mul_one(&self, a: OneElt, b: OneElt) -> OneElt {
        match (a, b) {
            (None, x) => x,
            (x, None) => x,
            (Some(a), Some(b)) => Some(self.mul(a, b)),
        }
    }

    /// Index of the two-sided identity, if the semigroup is a monoid.
    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Elements of `S¹`, the formal identity first.
    pub fn one_elements(&self) -> impl Iterator<Item = OneElt> + '_ {
        std::iter::once(None).chain((0..self.order).map(Some))
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of an element (falls back to the index).
    pub fn name(&self, i: usize) -> String {
        match &self.names {
            Some(ns) => ns[i].clone(),
            None => i.to_string(),
        }
    }

    /// Resolve an element selector: a decimal index or a display name.
    pub fn element_by_selector(&self, sel: &str) -> Result<usize> {
        if let Ok(ix) = sel.parse::<usize>() {
            if ix < self.order {
                return Ok(ix);
            }
            return Err(Error::UnknownElement(sel.to_string()));
        }
        if let Some(ns) = &self.names {
            if let Some(ix) = ns.iter().position(|n| n == sel) {
                return Ok(ix);
            }
        }
        Err(Error::UnknownElement(sel.to_string()))
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// `E(S)`, sorted ascending.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&e| self.is_idempotent(e)).collect()
    }

    /// `s` is regular iff `s·x·s = s` for some `x`.
    pub fn is_regular(&self, s: usize) -> bool {
        (0..self.order).any(|x| self.mul(self.mul(s, x), s) == s)
    }

    /// The opposite semigroup: `table[i][j] = j·i`.
    pub fn opposite(&self) -> Semigroup {
        let mut table = vec![0; self.order * self.order];
        for i in 0..self.order {
            for j in 0..self.order {
                table[i * self.order + j] = self.mul(j, i);
            }
        }
        Semigroup {
            order: self.order,
            table,
            names: self.names.clone(),
            identity: self.identity,
        }
    }

    /// The subsemigroup `LU(S) = E(S)·S·E(S)` of elements with local units,
    /// together with the embedding (sub index → parent index).
    pub fn local_units_subsemigroup(&self) -> Result<(Semigroup, Vec<usize>)> {
        let idem = self.idempotents();
        if idem.is_empty() {
            return Err(Error::EmptyLocalUnits);
        }
        let mut member = vec![false; self.order];
        for &e in &idem {
            for s in 0..self.order {
                for &f in &idem {
                    member[self.mul(self.mul(e, s), f)] = true;
                }
            }
        }
        let embedding: Vec<usize> = (0..self.order).filter(|&i| member[i]).collect();
        let index_of: HashMap<usize, usize> =
            embedding.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let m = embedding.len();
        let mut table = vec![0; m * m];
        for (a, &x) in embedding.iter().enumerate() {
            for (b, &y) in embedding.iter().enumerate() {
                // LU(S) is closed under the product of S.
                table[a * m + b] = index_of[&self.mul(x, y)];
            }
        }
        let names = self
            .names
            .as_ref()
            .map(|ns| embedding.iter().map(|&i| ns[i].clone()).collect());
        let identity = self
            .identity
            .and_then(|e| index_of.get(&e).copied())
            .filter(|&e| (0..m).all(|i| table[e * m + i] == i && table[i * m + e] == i));
        let sub = Semigroup {
            order: m,
            table,
            names,
            identity,
        };
        Ok((sub, embedding))
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "semigroup of order {}", self.order)?;
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|j| self.name(self.mul(i, j))).collect();
            writeln!(f, "  {} | {}", self.name(i), row.join(" "))?;
        }
        Ok(())
    }
}

/// A total map `{0, …, k−1} → {0, …, k−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        for &v in &images {
            if v >= degree {
                return Err(Error::BadTransformation { value: v, degree });
            }
        }
        Ok(Transformation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Transformation {
            images: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Right-action composite: `self·other` applies `self` first,
    /// then `other`, so `p·(s·t) = (p·s)·t`.
    pub fn then(&self, other: &Transformation) -> Transformation {
        Transformation {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    /// Cardinality of the image.
    pub fn rank(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        for &v in &self.images {
            seen[v] = true;
        }
        seen.iter().filter(|&&b| b).count()
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.images
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        )
    }
}

/// Closes a set of transformations under composition (breadth-first,
/// elements numbered in discovery order: generators first, then their
/// products) and returns the abstract semigroup together with the
/// transformation realizing each element.
pub fn generate_from_transformations(
    gens: &[Transformation],
) -> Result<(Semigroup, Vec<Transformation>)> {
    if gens.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    let degree = gens[0].degree();
    for (index, g) in gens.iter().enumerate() {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                index,
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let mut elements: Vec<Transformation> = Vec::new();
    let mut index_of: HashMap<Transformation, usize> = HashMap::new();
    for g in gens {
        if !index_of.contains_key(g) {
            index_of.insert(g.clone(), elements.len());
            elements.push(g.clone());
        }
    }
    let mut frontier: Vec<usize> = (0..elements.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for g in gens {
                let prod = elements[i].then(g);
                if !index_of.contains_key(&prod) {
                    index_of.insert(prod.clone(), elements.len());
                    next.push(elements.len());
                    elements.push(prod);
                }
            }
        }
        frontier = next;
    }
    let n = elements.len();
    let mut table = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = index_of[&elements[i].then(&elements[j])];
        }
    }
    let sg = Semigroup {
        order: n,
        table,
        names: None,
        identity: None,
    };
    // Closure of transformations is associative by construction; locate
    // the identity the same way from_table does.
    let identity = (0..n).find(|&e| (0..n).all(|i| sg.mul(e, i) == i && sg.mul(i, e) == i));
    Ok((Semigroup { identity, ..sg }, elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn u1_table_is_a_monoid_with_identity_zero() {
        let sg = Semigroup::from_table(vec![vec![0, 1], vec![1, 1]], None).unwrap();
        assert_eq!(sg.order(), 2);
        assert_eq!(sg.identity(), Some(0));
        assert_eq!(sg.idempotents(), vec![0, 1]);
    }

    #[test]
    fn non_associative_table_is_rejected_with_witness() {
        // 0·0 = 0 but 0·(0·0) routed through 1 breaks associativity:
        // (0·0)·0 = 0·0 = 1, 0·(0·0) = 0·1 = 0.
        let err = Semigroup::from_table(vec![vec![1, 0], vec![0, 0]], None).unwrap_err();
        match err {
            Error::NonAssociative { .. } => {}
            other => panic!("expected NonAssociative, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_entry_is_rejected() {
        let err = Semigroup::from_table(vec![vec![0, 2], vec![0, 0]], None).unwrap_err();
        assert!(matches!(err, Error::OutOfRange { value: 2, .. }));
        assert!(matches!(
            Semigroup::from_table(vec![], None),
            Err(Error::EmptyTable)
        ));
    }

    #[test]
    fn c21_is_valid_and_has_no_identity() {
        // Oracle: all 8 triples of the 2-element table [[1,1],[1,1]].
        let table = vec![vec![1, 1], vec![1, 1]];
        for i in 0..2usize {
            for j in 0..2usize {
                for k in 0..2usize {
                    let ij = table[i][j];
                    let jk = table[j][k];
                    assert_eq!(table[ij][k], table[i][jk]);
                }
            }
        }
        let sg = Semigroup::from_table(table, None).unwrap();
        assert_eq!(sg.identity(), None);
        assert_eq!(sg.idempotents(), vec![1]);
    }

    #[test]
    fn t2_generated_from_swap_and_constant() {
        let swap = Transformation::new(vec![1, 0]).unwrap();
        let c0 = Transformation::new(vec![0, 0]).unwrap();
        let (sg, reps) = generate_from_transformations(&[swap, c0]).unwrap();
        assert_eq!(sg.order(), 4);
        assert_eq!(reps.len(), 4);
        // Table consistent with composing the stored representatives.
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(reps[sg.mul(i, j)], reps[i].then(&reps[j]));
            }
        }
        // Idempotents of T2: identity and both constants.
        assert_eq!(sg.idempotents().len(), 3);
    }

    #[test]
    fn trivial_generator_sets() {
        let id3 = Transformation::identity(3);
        let (sg, _) = generate_from_transformations(&[id3]).unwrap();
        assert_eq!(sg.order(), 1);
        let c0 = Transformation::new(vec![0, 0]).unwrap();
        let (sg, _) = generate_from_transformations(&[c0]).unwrap();
        assert_eq!(sg.order(), 1);
        assert!(matches!(
            generate_from_transformations(&[]),
            Err(Error::EmptyGeneratorSet)
        ));
    }

    #[test]
    fn t2_idempotents_by_scan() {
        let t2 = fixtures::t2();
        // Oracle: scan x·x = x.
        let scanned: Vec<usize> = t2.elements().filter(|&x| t2.mul(x, x) == x).collect();
        assert_eq!(t2.idempotents(), scanned);
        assert_eq!(scanned, vec![0, 2, 3]); // id, c0, c1
    }

    #[test]
    fn local_units_of_null_semigroup_is_the_zero() {
        let n2 = fixtures::n2();
        let (lu, embedding) = n2.local_units_subsemigroup().unwrap();
        assert_eq!(lu.order(), 1);
        assert_eq!(embedding, vec![1]); // z
    }

    #[test]
    fn local_units_of_a_monoid_is_everything() {
        let t2 = fixtures::t2();
        let (lu, embedding) = t2.local_units_subsemigroup().unwrap();
        assert_eq!(lu.order(), 4);
        assert_eq!(embedding, vec![0, 1, 2, 3]);
    }

    #[test]
    fn local_units_of_c21_is_the_idempotent() {
        let c21 = fixtures::c21();
        let (lu, embedding) = c21.local_units_subsemigroup().unwrap();
        assert_eq!(lu.order(), 1);
        assert_eq!(embedding, vec![1]); // x²
    }

    #[test]
    fn regularity_examples() {
        let c21 = fixtures::c21();
        assert!(!c21.is_regular(0)); // x·x·x = x² ≠ x and x·x²·x = x²
        assert!(c21.is_regular(1));
        let b2 = fixtures::b2();
        assert!(b2.is_regular(1)); // e12·e21·e12 = e12
    }

    #[test]
    fn opposite_of_right_zero_is_left_zero() {
        let rz2 = fixtures::rz2();
        let op = rz2.opposite();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(op.mul(i, j), i);
            }
        }
        assert_eq!(op.opposite(), rz2);
    }

    #[test]
    fn lu_is_idempotent_as_an_operator() {
        for sg in fixtures::all() {
            if sg.idempotents().is_empty() {
                continue;
            }
            let (lu, _) = sg.local_units_subsemigroup().unwrap();
            let (lu2, emb2) = lu.local_units_subsemigroup().unwrap();
            assert_eq!(lu2.order(), lu.order());
            assert_eq!(emb2, (0..lu.order()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn one_view_products() {
        let c21 = fixtures::c21();
        assert_eq!(c21.mul_one(None, Some(0)), Some(0));
        assert_eq!(c21.mul_one(Some(0), None), Some(0));
        assert_eq!(c21.mul_one(Some(0), Some(0)), Some(1));
        assert_eq!(c21.mul_one(None, None), None);
    }

    #[test]
    fn selector_by_index_and_name() {
        let t2 = fixtures::t2();
        assert_eq!(t2.element_by_selector("1").unwrap(), 1);
        assert_eq!(t2.element_by_selector("sigma").unwrap(), 1);
        assert_eq!(t2.element_by_selector("c0").unwrap(), 2);
        assert!(t2.element_by_selector("nope").is_err());
        assert!(t2.element_by_selector("9").is_err());
    }
}
