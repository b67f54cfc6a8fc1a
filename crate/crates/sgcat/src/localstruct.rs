//! Schützenberger groups, local monoids `eSe`, and local divisors.

use crate::error::{Error, Result};
use crate::greens::greens_data;
use crate::permgroup::PermGroup;
use crate::semigroup::{OneElt, Semigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The least `x ∈ S¹` with `x·t = u` (the formal identity counts as least).
pub fn least_left_witness(sg: &Semigroup, t: usize, u: usize) -> Option<OneElt> {
    sg.one_elements()
        .find(|&x| sg.mul_one(x, Some(t)) == Some(u))
}

/// The least `y ∈ S¹` with `t·y = u`.
pub fn least_right_witness(sg: &Semigroup, t: usize, u: usize) -> Option<OneElt> {
    sg.one_elements()
        .find(|&y| sg.mul_one(Some(t), y) == Some(u))
}

/// The Schützenberger group of the H-class of `h`, as a permutation
/// group of that H-class.
///
/// For `Side::Left` these are the maps `x ↦ u·x` (`u ∈ S¹`) that
/// stabilize the H-class setwise, deduplicated by their restriction;
/// `Side::Right` is the mirror image.
pub fn schutzenberger_group(sg: &Semigroup, h: usize, side: Side) -> PermGroup {
    let g = greens_data(sg);
    schutzenberger_group_of_class(sg, g.h_class_of(h), side)
}

/// Same, but taking the H-class carrier directly (it must be one).
pub fn schutzenberger_group_of_class(sg: &Semigroup, class: &[usize], side: Side) -> PermGroup {
    let carrier: Vec<usize> = class.to_vec();
    let pos = |v: usize| carrier.binary_search(&v).ok();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    for u in sg.one_elements() {
        let mut images = Vec::with_capacity(carrier.len());
        let mut ok = true;
        for &x in &carrier {
            let y = match side {
                Side::Left => sg.mul_one(u, Some(x)),
                Side::Right => sg.mul_one(Some(x), u),
            };
            match y.and_then(pos) {
                Some(p) => images.push(p),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        // Setwise stabilizer: translations of an H-class into itself are
        // injective, but check anyway so malformed inputs fail loudly.
        let mut seen = vec![false; carrier.len()];
        if images
            .iter()
            .all(|&p| !std::mem::replace(&mut seen[p], true))
        {
            perms.push(images);
        }
    }
    PermGroup::from_perms(carrier, perms).expect("translations stabilizing an H-class form a group")
}

/// The local monoid `eSe` at an idempotent `e`, with the embedding
/// (local index → ambient index). The identity of the result is `e`.
pub fn local_monoid(sg: &Semigroup, e: usize) -> Result<(Semigroup, Vec<usize>)> {
    if !sg.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let mut member = vec![false; sg.order()];
    for s in sg.elements() {
        member[sg.mul(sg.mul(e, s), e)] = true;
    }
    let carrier: Vec<usize> = (0..sg.order()).filter(|&i| member[i]).collect();
    let m = carrier.len();
    let mut table = vec![vec![0usize; m]; m];
    for (a, &x) in carrier.iter().enumerate() {
        for (b, &y) in carrier.iter().enumerate() {
            let prod = sg.mul(x, y);
            table[a][b] = carrier.binary_search(&prod).expect("eSe is closed");
        }
    }
    let names = sg
        .names()
        .map(|ns| carrier.iter().map(|&i| ns[i].clone()).collect());
    let local = Semigroup::from_table(table, names)?;
    debug_assert_eq!(local.identity(), carrier.binary_search(&e).ok());
    Ok((local, carrier))
}

/// The local divisor at an arbitrary element `s`: the monoid on
/// `sS¹ ∩ S¹s` with identity `s` and product `(x·s) ∘ (s·y) = x·s·y`.
#[derive(Debug, Clone)]
pub struct LocalDivisor {
    /// Sorted ambient carrier `sS¹ ∩ S¹s`.
    pub carrier: Vec<usize>,
    /// The base element `s`, the identity of the divisor.
    pub base: usize,
    /// The divisor as an abstract monoid on carrier positions.
    pub monoid: Semigroup,
}

pub fn local_divisor(sg: &Semigroup, s: usize) -> LocalDivisor {
    let right = sg.right_ideal(s);
    let left = sg.left_ideal(s);
    let carrier: Vec<usize> = right
        .iter()
        .copied()
        .filter(|v| left.binary_search(v).is_ok())
        .collect();
    let m = carrier.len();
    let mut table = vec![vec![0usize; m]; m];
    for (a, &u) in carrier.iter().enumerate() {
        for (b, &v) in carrier.iter().enumerate() {
            let prod = divisor_product(sg, s, u, v);
            table[a][b] = carrier
                .binary_search(&prod)
                .expect("divisor product stays in the carrier");
        }
    }
    let names = sg
        .names()
        .map(|ns| carrier.iter().map(|&i| ns[i].clone()).collect());
    let monoid = Semigroup::from_table(table, names).expect("divisor product is associative");
    debug_assert_eq!(monoid.identity(), carrier.binary_search(&s).ok());
    LocalDivisor {
        carrier,
        base: s,
        monoid,
    }
}

/// `u ∘ v` computed with the least factorization witness `x·s = u`.
pub fn divisor_product(sg: &Semigroup, s: usize, u: usize, v: usize) -> usize {
    let x = least_left_witness(sg, s, u).expect("u lies in S¹s");
    sg.mul_one(x, Some(v)).expect("v is a semigroup element")
}

/// Every valid witness `x·s = u` yields the same `x·v`; used by tests to
/// confirm the product is independent of the chosen factorization.
pub fn divisor_product_witness_sweep(sg: &Semigroup, s: usize, u: usize, v: usize) -> Vec<usize> {
    let mut outcomes: Vec<usize> = sg
        .one_elements()
        .filter(|&x| sg.mul_one(x, Some(s)) == Some(u))
        .map(|x| sg.mul_one(x, Some(v)).unwrap())
        .collect();
    outcomes.sort_unstable();
    outcomes.dedup();
    outcomes
}

impl LocalDivisor {
    /// The group of units, as permutations of the divisor carrier acting
    /// by left `∘`-translation.
    pub fn unit_group(&self) -> PermGroup {
        let id = self.monoid.identity().expect("divisor has identity s");
        let m = self.monoid.order();
        let units: Vec<usize> = (0..m)
            .filter(|&u| (0..m).any(|v| self.monoid.mul(u, v) == id && self.monoid.mul(v, u) == id))
            .collect();
        let perms: Vec<Vec<usize>> = units
            .iter()
            .map(|&u| (0..m).map(|v| self.monoid.mul(u, v)).collect())
            .collect();
        PermGroup::from_perms((0..m).collect(), perms).expect("unit translations form a group")
    }
}
