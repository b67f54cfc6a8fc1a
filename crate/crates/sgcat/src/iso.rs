//! Isomorphism testing for small semigroups and monoids.
//!
//! The search assigns images to a greedy generating sequence and
//! propagates products, backtracking on any clash. Per-element
//! invariants (idempotency, regularity, index/period of the generated
//! cyclic subsemigroup, ideal sizes) prune the candidate images.

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

pub const DEFAULT_ISO_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct ElementProfile {
    idempotent: bool,
    regular: bool,
    /// (index, period) of the cyclic subsemigroup ⟨s⟩.
    index: usize,
    period: usize,
    right_ideal_size: usize,
    left_ideal_size: usize,
}

fn profile(sg: &Semigroup, s: usize) -> ElementProfile {
    // Walk powers of s until the first repeat.
    let mut seen = vec![usize::MAX; sg.order()];
    let mut pow = s;
    let mut step = 1usize;
    let (index, period) = loop {
        if seen[pow] != usize::MAX {
            let first = seen[pow];
            break (first, step - first);
        }
        seen[pow] = step;
        pow = sg.mul(pow, s);
        step += 1;
    };
    ElementProfile {
        idempotent: sg.is_idempotent(s),
        regular: sg.is_regular(s),
        index,
        period,
        right_ideal_size: sg.right_ideal(s).len(),
        left_ideal_size: sg.left_ideal(s).len(),
    }
}

/// Greedy generating sequence: repeatedly adjoin the least element not
/// generated by the elements chosen so far.
fn generating_sequence(sg: &Semigroup) -> Vec<usize> {
    let n = sg.order();
    let mut gens = Vec::new();
    let mut generated = vec![false; n];
    while let Some(next) = (0..n).find(|&i| !generated[i]) {
        gens.push(next);
        // Close under products.
        generated[next] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for a in 0..n {
                if !generated[a] {
                    continue;
                }
                for b in 0..n {
                    if !generated[b] {
                        continue;
                    }
                    let c = sg.mul(a, b);
                    if !generated[c] {
                        generated[c] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    gens
}

struct Search<'a> {
    a: &'a Semigroup,
    b: &'a Semigroup,
    prof_a: Vec<ElementProfile>,
    prof_b: Vec<ElementProfile>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    /// Defines `map[x] = y`, propagating all forced products. Returns the
    /// trail of assignments made (for undo), or None on contradiction.
    fn assign(&mut self, x: usize, y: usize) -> Option<Vec<usize>> {
        let mut trail = Vec::new();
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match self.map[x] {
                Some(prev) => {
                    if prev != y {
                        self.undo(&trail);
                        return None;
                    }
                    continue;
                }
                None => {
                    if self.used[y] || self.prof_a[x] != self.prof_b[y] {
                        self.undo(&trail);
                        return None;
                    }
                    self.map[x] = Some(y);
                    self.used[y] = true;
                    trail.push(x);
                }
            }
            // Products with every already-defined element (including x itself).
            for w in 0..self.a.order() {
                if let Some(wy) = self.map[w] {
                    queue.push((self.a.mul(x, w), self.b.mul(y, wy)));
                    queue.push((self.a.mul(w, x), self.b.mul(wy, y)));
                }
            }
        }
        Some(trail)
    }

    fn undo(&mut self, trail: &[usize]) {
        for &x in trail {
            if let Some(y) = self.map[x].take() {
                self.used[y] = false;
            }
        }
    }

    fn solve(&mut self, gens: &[usize], depth: usize) -> bool {
        // Skip generators already forced by propagation.
        let mut depth = depth;
        while depth < gens.len() && self.map[gens[depth]].is_some() {
            depth += 1;
        }
        if depth == gens.len() {
            return self.finished();
        }
        let g = gens[depth];
        for y in 0..self.b.order() {
            if self.used[y] || self.prof_a[g] != self.prof_b[y] {
                continue;
            }
            if let Some(trail) = self.assign(g, y) {
                if self.solve(gens, depth + 1) {
                    return true;
                }
                self.undo(&trail);
            }
        }
        false
    }

    fn finished(&self) -> bool {
        let n = self.a.order();
        if self.map.iter().any(|m| m.is_none()) {
            return false;
        }
        let f: Vec<usize> = self.map.iter().map(|m| m.unwrap()).collect();
        for x in 0..n {
            for y in 0..n {
                if f[self.a.mul(x, y)] != self.b.mul(f[x], f[y]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Finds an isomorphism between two semigroup tables, if any.
pub fn find_isomorphism(a: &Semigroup, b: &Semigroup) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let prof_a: Vec<ElementProfile> = a.elements().map(|s| profile(a, s)).collect();
    let prof_b: Vec<ElementProfile> = b.elements().map(|s| profile(b, s)).collect();
    let mut sorted_a = prof_a.clone();
    let mut sorted_b = prof_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let gens = generating_sequence(a);
    let mut search = Search {
        a,
        b,
        prof_a,
        prof_b,
        map: vec![None; a.order()],
        used: vec![false; b.order()],
    };
    if search.solve(&gens, 0) {
        Some(search.map.iter().map(|m| m.unwrap()).collect())
    } else {
        None
    }
}

/// Isomorphism test for small semigroups with a size cap.
pub fn semigroups_isomorphic_with_cap(a: &Semigroup, b: &Semigroup, cap: usize) -> Result<bool> {
    if a.order() > cap || b.order() > cap {
        return Err(Error::SizeCapExceeded {
            order: a.order().max(b.order()),
            cap,
        });
    }
    Ok(find_isomorphism(a, b).is_some())
}

pub fn semigroups_isomorphic(a: &Semigroup, b: &Semigroup) -> Result<bool> {
    semigroups_isomorphic_with_cap(a, b, DEFAULT_ISO_CAP)
}

/// Isomorphism test for small monoids. Identical invariants to the
/// semigroup test; kept as a named entry point because callers compare
/// local monoids and divisors, which always carry identities.
pub fn monoids_isomorphic(a: &Semigroup, b: &Semigroup) -> Result<bool> {
    if a.identity().is_some() != b.identity().is_some() {
        return Ok(false);
    }
    semigroups_isomorphic(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn isomorphic_to_itself() {
        for sg in fixtures::all() {
            let f = find_isomorphism(&sg, &sg).unwrap();
            // The found map really is an isomorphism.
            for x in sg.elements() {
                for y in sg.elements() {
                    assert_eq!(f[sg.mul(x, y)], sg.mul(f[x], f[y]));
                }
            }
        }
    }

    #[test]
    fn n2_and_c21_are_the_same_abstract_semigroup() {
        assert!(semigroups_isomorphic(&fixtures::n2(), &fixtures::c21()).unwrap());
    }

    #[test]
    fn right_zero_is_not_left_zero() {
        let rz = fixtures::rz2();
        let lz = rz.opposite();
        assert!(!semigroups_isomorphic(&rz, &lz).unwrap());
        assert!(semigroups_isomorphic(&rz, &rz).unwrap());
    }

    #[test]
    fn u1_is_not_z2() {
        let z2 = Semigroup::from_table(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert!(!semigroups_isomorphic(&fixtures::u1(), &z2).unwrap());
    }

    #[test]
    fn relabeled_t2_is_isomorphic() {
        let t2 = fixtures::t2();
        let n = t2.order();
        // Conjugate the table by the permutation swapping the two constants.
        let p = [0usize, 1, 3, 2];
        let mut table = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                table[p[i]][p[j]] = p[t2.mul(i, j)];
            }
        }
        let relabeled = Semigroup::from_table(table, None).unwrap();
        assert!(semigroups_isomorphic(&t2, &relabeled).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let t2 = fixtures::t2();
        assert!(matches!(
            semigroups_isomorphic_with_cap(&t2, &t2, 2),
            Err(Error::SizeCapExceeded { .. })
        ));
    }
}
