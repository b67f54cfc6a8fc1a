//! Right actions of a semigroup on a finite set, the induced presheaves
//! on `K(S)` and `D(S)`, equivalence of actions, and the poset of an
//! action.

use std::collections::HashMap;

use crate::cat::{FiniteCategory, MorIx, ObIx, Payload};
use crate::error::{Error, Result};
use crate::functor::{enumerate_equivalences, Functor};
use crate::greens::Preorder;
use crate::semigroup::Semigroup;

/// A right action of a semigroup on states `0..states`.
///
/// `table[q * order + s]` is `q·s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SAction {
    states: usize,
    order: usize,
    table: Vec<usize>,
}

impl SAction {
    /// Wraps rows without the associativity check; row `q` lists `q·s`
    /// for every element `s`. Use [`validate_action`] for checked input.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> SAction {
        let states = rows.len();
        let order = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut table = Vec::with_capacity(states * order);
        for r in &rows {
            assert_eq!(r.len(), order, "ragged action table");
            table.extend_from_slice(r);
        }
        SAction {
            states,
            order,
            table,
        }
    }

    pub fn states(&self) -> usize {
        self.states
    }

    #[inline]
    pub fn apply(&self, q: usize, s: usize) -> usize {
        self.table[q * self.order + s]
    }

    /// The orbit set `Q·s`, sorted.
    pub fn image_of(&self, s: usize) -> Vec<usize> {
        let mut member = vec![false; self.states];
        for q in 0..self.states {
            member[self.apply(q, s)] = true;
        }
        (0..self.states).filter(|&q| member[q]).collect()
    }

    /// Restricts the action along a subsemigroup embedding.
    pub fn restrict_to(&self, embedding: &[usize]) -> SAction {
        let order = embedding.len();
        let mut table = Vec::with_capacity(self.states * order);
        for q in 0..self.states {
            for &s in embedding {
                table.push(self.apply(q, s));
            }
        }
        SAction {
            states: self.states,
            order,
            table,
        }
    }
}

/// Validates totality, ranges and `(q·s)·t = q·(s·t)`.
pub fn validate_action(sg: &Semigroup, rows: Vec<Vec<usize>>) -> Result<SAction> {
    let states = rows.len();
    for (q, r) in rows.iter().enumerate() {
        if r.len() != sg.order() {
            return Err(Error::NotSquare {
                row: q,
                len: r.len(),
                order: sg.order(),
            });
        }
        for (s, &v) in r.iter().enumerate() {
            if v >= states {
                return Err(Error::OutOfRange {
                    row: q,
                    col: s,
                    value: v,
                    order: states,
                });
            }
        }
    }
    let action = SAction::from_rows(rows);
    for q in 0..states {
        for s in sg.elements() {
            for t in sg.elements() {
                if action.apply(action.apply(q, s), t) != action.apply(q, sg.mul(s, t)) {
                    return Err(Error::ActionAxiomViolation { q, s, t });
                }
            }
        }
    }
    Ok(action)
}

/// Faithful iff distinct elements act as distinct maps on the states.
pub fn action_is_faithful(sg: &Semigroup, a: &SAction) -> bool {
    let maps: Vec<Vec<usize>> = sg
        .elements()
        .map(|s| (0..a.states()).map(|q| a.apply(q, s)).collect())
        .collect();
    for i in 0..maps.len() {
        for j in i + 1..maps.len() {
            if maps[i] == maps[j] {
                return false;
            }
        }
    }
    true
}

/// A contravariant set-valued functor on a finite category, with values
/// in subsets of a fixed state set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presheaf {
    /// Per object: a sorted subset of the states.
    pub sets: Vec<Vec<usize>>,
    /// Per morphism `m`: images (raw states) aligned with `sets[cod(m)]`.
    pub maps: Vec<Vec<usize>>,
}

impl Presheaf {
    /// Applies the function at morphism `m` to a raw state of its
    /// codomain set.
    pub fn map_at(&self, c: &FiniteCategory, m: MorIx, q: usize) -> usize {
        let set = &self.sets[c.morphism(m).cod];
        let i = set.binary_search(&q).expect("state in presheaf set");
        self.maps[m][i]
    }

    /// Contravariant functor laws plus range checks.
    pub fn check(&self, c: &FiniteCategory) -> Result<()> {
        if self.sets.len() != c.object_count() || self.maps.len() != c.morphism_count() {
            return Err(Error::MalformedCategory(
                "presheaf arrays do not match the category".into(),
            ));
        }
        for (m, data) in c.morphisms().iter().enumerate() {
            if self.maps[m].len() != self.sets[data.cod].len() {
                return Err(Error::MalformedCategory(format!(
                    "presheaf map at morphism {m} has wrong arity"
                )));
            }
            for v in &self.maps[m] {
                if self.sets[data.dom].binary_search(v).is_err() {
                    return Err(Error::MalformedCategory(format!(
                        "presheaf map at morphism {m} leaves the stated subset"
                    )));
                }
            }
        }
        for ob in c.objects() {
            let id = c.identity_at(ob);
            if self.maps[id] != self.sets[ob] {
                return Err(Error::MalformedCategory(format!(
                    "presheaf does not send the identity at {ob} to the identity map"
                )));
            }
        }
        for m1 in 0..c.morphism_count() {
            for m2 in 0..c.morphism_count() {
                if let Some(m12) = c.compose(m1, m2) {
                    // Contravariance: value of m1∘m2 is map(m2) ∘ map(m1).
                    for &q in &self.sets[c.morphism(m1).cod] {
                        let via = self.map_at(c, m2, self.map_at(c, m1, q));
                        if self.map_at(c, m12, q) != via {
                            return Err(Error::MalformedCategory(format!(
                                "presheaf is not functorial on ({m1}, {m2})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Distinct coterminal morphisms act as distinct functions.
    pub fn is_faithful(&self, c: &FiniteCategory) -> bool {
        for a in c.objects() {
            for b in c.objects() {
                let hom = c.hom(a, b);
                for (i, &m1) in hom.iter().enumerate() {
                    for &m2 in &hom[i + 1..] {
                        if self.maps[m1] == self.maps[m2] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// The presheaf `A_Q` on `K(S)`: object `e ↦ Q·e`, morphism
/// `(e, s, f)` acting as `Q·e → Q·f`, `q ↦ q·s`.
pub fn presheaf_on_karoubi(k: &FiniteCategory, a: &SAction) -> Presheaf {
    let sets: Vec<Vec<usize>> = k.objects().map(|ob| a.image_of(k.object_tag(ob))).collect();
    let maps: Vec<Vec<usize>> = k
        .morphisms()
        .iter()
        .map(|m| {
            let Payload::Triple(_, s, _) = m.payload else {
                unreachable!("karoubi morphisms are triples")
            };
            sets[m.cod].iter().map(|&q| a.apply(q, s)).collect()
        })
        .collect();
    Presheaf { sets, maps }
}

/// The presheaf `B_Q` on `D(S)`: object `s ↦ Q·s`, morphism `(s, u, t)`
/// acting as `Q·s → Q·t`, `q·s ↦ q·u`.
///
/// Well-definedness (`q₁·s = q₂·s` implies `q₁·u = q₂·u`) is checked by
/// sweeping all preimages; a failure would contradict `u ∈ sS¹` and
/// trips an assertion.
pub fn presheaf_on_schutzcat(d: &FiniteCategory, a: &SAction) -> Presheaf {
    let sets: Vec<Vec<usize>> = d.objects().map(|ob| a.image_of(d.object_tag(ob))).collect();
    let maps: Vec<Vec<usize>> = d
        .morphisms()
        .iter()
        .map(|m| {
            let Payload::Triple(s, u, _) = m.payload else {
                unreachable!("schutzenberger morphisms are triples")
            };
            sets[m.cod]
                .iter()
                .map(|&y| {
                    let mut images = (0..a.states())
                        .filter(|&q| a.apply(q, s) == y)
                        .map(|q| a.apply(q, u));
                    let first = images.next().expect("y lies in Q·s");
                    assert!(
                        images.all(|v| v == first),
                        "B_Q is not well defined: preimages of {y} under ·{s} disagree on ·{u}"
                    );
                    first
                })
                .collect()
        })
        .collect();
    Presheaf { sets, maps }
}

/// A natural transformation between set-valued presheaves `A` on `C`
/// and `B ∘ F` for a functor `F: C → D` with `B` a presheaf on `D`.
/// Component at object `c`: a map `A(c) → B(F(c))`, tabulated against
/// the sorted set `A(c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresheafTransformation {
    pub components: Vec<Vec<usize>>,
}

impl PresheafTransformation {
    pub fn apply(&self, a: &Presheaf, ob: ObIx, q: usize) -> usize {
        let i = a.sets[ob].binary_search(&q).expect("state in set");
        self.components[ob][i]
    }

    /// The identity transformation on a presheaf.
    pub fn identity(a: &Presheaf) -> Self {
        PresheafTransformation {
            components: a.sets.clone(),
        }
    }

    /// Is every component a bijection onto `B(F(c))`?
    pub fn is_iso(&self, f: &Functor, b: &Presheaf) -> bool {
        self.components.iter().enumerate().all(|(c, comp)| {
            let target = &b.sets[f.ob_map[c]];
            let mut values = comp.clone();
            values.sort_unstable();
            values.dedup();
            values.len() == comp.len() && values == *target
        })
    }
}

/// Checks components and all naturality squares of
/// `eta: A ⇒ B ∘ F`.
pub fn check_presheaf_transformation(
    src: &FiniteCategory,
    f: &Functor,
    a: &Presheaf,
    b: &Presheaf,
    eta: &PresheafTransformation,
) -> Result<()> {
    if eta.components.len() != src.object_count() {
        return Err(Error::InvalidNaturalTransformation(
            "one component per object required".into(),
        ));
    }
    for c in src.objects() {
        if eta.components[c].len() != a.sets[c].len() {
            return Err(Error::InvalidNaturalTransformation(format!(
                "component at object {c} has wrong arity"
            )));
        }
        for v in &eta.components[c] {
            if b.sets[f.ob_map[c]].binary_search(v).is_err() {
                return Err(Error::InvalidNaturalTransformation(format!(
                    "component at object {c} leaves the target subset"
                )));
            }
        }
    }
    for (m, data) in src.morphisms().iter().enumerate() {
        for &q in &a.sets[data.cod] {
            let down = eta.apply(a, data.dom, a.map_at(src, m, q));
            let over = {
                let im = eta.apply(a, data.cod, q);
                let fm = f.mor_map[m];
                let set = &b.sets[f.ob_map[data.cod]];
                let i = set.binary_search(&im).expect("component lands in set");
                b.maps[fm][i]
            };
            if down != over {
                return Err(Error::InvalidNaturalTransformation(format!(
                    "naturality square fails at morphism {m}, state {q}"
                )));
            }
        }
    }
    Ok(())
}

/// A witness that two category actions are equivalent.
#[derive(Debug, Clone)]
pub struct ActionEquivalence {
    pub functor: Functor,
    pub eta: PresheafTransformation,
}

/// Searches for an equivalence `F: C → D` and a natural isomorphism
/// `η: A ⇒ B ∘ F`. Complete within the node budget; `Ok(None)` means
/// the whole space was exhausted.
pub fn actions_equivalent(
    c: &FiniteCategory,
    a: &Presheaf,
    d: &FiniteCategory,
    b: &Presheaf,
    budget: u64,
) -> Result<Option<ActionEquivalence>> {
    let functors = enumerate_equivalences(c, d, budget, usize::MAX)?;
    let mut nodes: u64 = 0;
    for f in functors {
        if c.objects()
            .any(|ob| a.sets[ob].len() != b.sets[f.ob_map[ob]].len())
        {
            continue;
        }
        let mut components: Vec<Option<Vec<usize>>> = vec![None; c.object_count()];
        if let Some(eta) = search_components(c, a, b, &f, &mut components, 0, &mut nodes, budget)? {
            return Ok(Some(ActionEquivalence { functor: f, eta }));
        }
    }
    Ok(None)
}

fn search_components(
    c: &FiniteCategory,
    a: &Presheaf,
    b: &Presheaf,
    f: &Functor,
    components: &mut Vec<Option<Vec<usize>>>,
    ob: ObIx,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<PresheafTransformation>> {
    if ob == c.object_count() {
        let eta = PresheafTransformation {
            components: components.iter().map(|c| c.clone().unwrap()).collect(),
        };
        if check_presheaf_transformation(c, f, a, b, &eta).is_ok() {
            return Ok(Some(eta));
        }
        return Ok(None);
    }
    let source = &a.sets[ob];
    let target = &b.sets[f.ob_map[ob]];
    for perm in bijections(source.len()) {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::SearchBudgetExceeded { budget });
        }
        let comp: Vec<usize> = perm.iter().map(|&i| target[i]).collect();
        components[ob] = Some(comp);
        // Prune on naturality squares whose endpoints are both assigned.
        if squares_ok(c, a, b, f, components) {
            if let Some(found) = search_components(c, a, b, f, components, ob + 1, nodes, budget)? {
                return Ok(Some(found));
            }
        }
        components[ob] = None;
    }
    Ok(None)
}

fn squares_ok(
    c: &FiniteCategory,
    a: &Presheaf,
    b: &Presheaf,
    f: &Functor,
    components: &[Option<Vec<usize>>],
) -> bool {
    for (m, data) in c.morphisms().iter().enumerate() {
        let (Some(at_cod), Some(at_dom)) = (&components[data.cod], &components[data.dom]) else {
            continue;
        };
        for (i, &q) in a.sets[data.cod].iter().enumerate() {
            let moved = a.map_at(c, m, q);
            let j = a.sets[data.dom].binary_search(&moved).unwrap();
            let down = at_dom[j];
            let im = at_cod[i];
            let set = &b.sets[f.ob_map[data.cod]];
            let k = set.binary_search(&im).unwrap();
            let over = b.maps[f.mor_map[m]][k];
            if down != over {
                return false;
            }
        }
    }
    true
}

/// All permutations of `0..n` in lexicographic order.
fn bijections(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    permute(&mut current, &mut used, 0, n, &mut out);
    out
}

fn permute(
    current: &mut Vec<usize>,
    used: &mut Vec<bool>,
    depth: usize,
    n: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if depth == n {
        out.push(current.clone());
        return;
    }
    for v in 0..n {
        if !used[v] {
            used[v] = true;
            current[depth] = v;
            permute(current, used, depth + 1, n, out);
            used[v] = false;
        }
    }
}

/// The poset `P(Q)` of an action: cyclic `LU(S)`-subsets of
/// `I = Q·E(S)`, ordered by reverse inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionPoset {
    /// Distinct cyclic subsets `q·LU(S)` as sorted state lists, in
    /// lexicographic order.
    pub cyclic_sets: Vec<Vec<usize>>,
    /// Per class: the sorted states `q ∈ I` whose cyclic set is that one.
    pub members: Vec<Vec<usize>>,
    /// `order.le(i, j)` iff `cyclic_sets[j] ⊆ cyclic_sets[i]`.
    pub order: Preorder,
}

impl ActionPoset {
    pub fn class_of(&self, q: usize) -> Option<usize> {
        self.members
            .iter()
            .position(|m| m.binary_search(&q).is_ok())
    }

    pub fn is_empty(&self) -> bool {
        self.cyclic_sets.is_empty()
    }
}

/// Computes `P(Q)`. An idempotent-free semigroup yields the empty poset.
pub fn action_poset(sg: &Semigroup, a: &SAction) -> ActionPoset {
    let idem = sg.idempotents();
    if idem.is_empty() {
        return ActionPoset {
            cyclic_sets: Vec::new(),
            members: Vec::new(),
            order: Preorder::new(0, Vec::new()),
        };
    }
    let (_, lu_elements) = sg.local_units_subsemigroup().expect("idempotents exist");
    let mut in_i = vec![false; a.states()];
    for q in 0..a.states() {
        for &e in &idem {
            in_i[a.apply(q, e)] = true;
        }
    }
    let mut cyclic_sets: Vec<Vec<usize>> = Vec::new();
    let mut members_map: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for q in (0..a.states()).filter(|&q| in_i[q]) {
        let mut set: Vec<usize> = lu_elements.iter().map(|&s| a.apply(q, s)).collect();
        set.sort_unstable();
        set.dedup();
        if !members_map.contains_key(&set) {
            cyclic_sets.push(set.clone());
        }
        members_map.entry(set).or_default().push(q);
    }
    cyclic_sets.sort();
    let members: Vec<Vec<usize>> = cyclic_sets
        .iter()
        .map(|s| {
            let mut m = members_map[s].clone();
            m.sort_unstable();
            m
        })
        .collect();
    let k = cyclic_sets.len();
    let mut le = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            le[i * k + j] = cyclic_sets[j]
                .iter()
                .all(|v| cyclic_sets[i].binary_search(v).is_ok());
        }
    }
    ActionPoset {
        cyclic_sets,
        members,
        order: Preorder::new(k, le),
    }
}

/// Builds and validates the poset isomorphism `f(q·LU(S)) = η_e(q)·LU(T)`
/// induced by an action-equivalence witness. Returns, per class of the
/// source poset, the class index in the target poset.
pub fn induced_poset_iso(
    src_k: &FiniteCategory,
    src_presheaf: &Presheaf,
    witness: &ActionEquivalence,
    src_poset: &ActionPoset,
    dst_poset: &ActionPoset,
) -> Result<Vec<usize>> {
    let mut map: Vec<Option<usize>> = vec![None; src_poset.cyclic_sets.len()];
    for (class, members) in src_poset.members.iter().enumerate() {
        for &q in members {
            // Every idempotent object fixing q gives a candidate value.
            for ob in src_k.objects() {
                if src_presheaf.sets[ob].binary_search(&q).is_err() {
                    continue;
                }
                let image = witness.eta.apply(src_presheaf, ob, q);
                let target = dst_poset.class_of(image).ok_or_else(|| {
                    Error::WitnessInvalid(format!(
                        "image state {image} lies outside the target poset"
                    ))
                })?;
                match map[class] {
                    None => map[class] = Some(target),
                    Some(prev) if prev != target => {
                        return Err(Error::WitnessInvalid(format!(
                            "induced map is not well defined on class {class}"
                        )))
                    }
                    _ => {}
                }
            }
        }
    }
    let map: Vec<usize> = map
        .into_iter()
        .enumerate()
        .map(|(class, m)| {
            m.ok_or_else(|| {
                Error::WitnessInvalid(format!("class {class} has no idempotent-fixed member"))
            })
        })
        .collect::<Result<_>>()?;
    // Order embedding.
    for i in 0..map.len() {
        for j in 0..map.len() {
            if src_poset.order.le(i, j) != dst_poset.order.le(map[i], map[j]) {
                return Err(Error::WitnessInvalid(format!(
                    "induced map does not preserve and reflect order at ({i}, {j})"
                )));
            }
        }
    }
    // Surjectivity.
    for t in 0..dst_poset.cyclic_sets.len() {
        if !map.contains(&t) {
            return Err(Error::WitnessInvalid(format!(
                "induced map misses target class {t}"
            )));
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{build_karoubi, build_schutzcat};
    use crate::fixtures;
    use crate::functor::DEFAULT_SEARCH_BUDGET;

    #[test]
    fn t2_point_action_is_valid_and_faithful() {
        let t2 = fixtures::t2();
        let a = validate_action(&t2, vec![vec![0, 1, 0, 1], vec![1, 0, 0, 1]]).unwrap();
        assert!(action_is_faithful(&t2, &a));
    }

    #[test]
    fn u1_chain_action_is_valid() {
        let u1 = fixtures::u1();
        let a = validate_action(&u1, vec![vec![0, 1], vec![1, 1]]).unwrap();
        assert!(action_is_faithful(&u1, &a));
    }

    #[test]
    fn trivial_u1_action_is_not_faithful() {
        let u1 = fixtures::u1();
        let a = validate_action(&u1, vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert!(!action_is_faithful(&u1, &a));
    }

    #[test]
    fn action_axiom_violation_is_reported() {
        let u1 = fixtures::u1();
        // q·s tables that break (q·0)·0 = q·(0·0) for the zero element.
        let err = validate_action(&u1, vec![vec![0, 1], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, Error::ActionAxiomViolation { .. }));
    }

    #[test]
    fn karoubi_presheaf_of_t2_point_action() {
        let t2 = fixtures::t2();
        let k = build_karoubi(&t2);
        let a = fixtures::t2_point_action();
        let p = presheaf_on_karoubi(&k, &a);
        p.check(&k).unwrap();
        // A(id) = {0, 1}, A(c0) = {0}, A(c1) = {1}.
        assert_eq!(p.sets[k.object_by_tag(0).unwrap()], vec![0, 1]);
        assert_eq!(p.sets[k.object_by_tag(2).unwrap()], vec![0]);
        assert_eq!(p.sets[k.object_by_tag(3).unwrap()], vec![1]);
        // (id, c0, c0): both points to 0.
        let m = k.by_triple(0, 2, 2).unwrap();
        assert_eq!(p.maps[m], vec![0, 0]);
    }

    #[test]
    fn schutz_presheaf_restricts_to_karoubi_presheaf() {
        for (_, sg) in fixtures::all_named() {
            let k = build_karoubi(&sg);
            let d = build_schutzcat(&sg);
            // Natural self-action by right multiplication.
            let rows: Vec<Vec<usize>> = (0..sg.order())
                .map(|q| sg.elements().map(|s| sg.mul(q, s)).collect())
                .collect();
            let a = validate_action(&sg, rows).unwrap();
            let pa = presheaf_on_karoubi(&k, &a);
            let pb = presheaf_on_schutzcat(&d, &a);
            pa.check(&k).unwrap();
            pb.check(&d).unwrap();
            for ob in k.objects() {
                let dob = d.object_by_tag(k.object_tag(ob)).unwrap();
                assert_eq!(pa.sets[ob], pb.sets[dob]);
            }
            for m in 0..k.morphism_count() {
                let dm = d.by_payload(&k.morphism(m).payload).unwrap();
                assert_eq!(pa.maps[m], pb.maps[dm]);
            }
        }
    }

    #[test]
    fn b_presheaf_of_c21_self_action() {
        let c21 = fixtures::c21();
        let d = build_schutzcat(&c21);
        let rows: Vec<Vec<usize>> = (0..2)
            .map(|q| (0..2).map(|s| c21.mul(q, s)).collect())
            .collect();
        let a = validate_action(&c21, rows).unwrap();
        let p = presheaf_on_schutzcat(&d, &a);
        assert_eq!(p.sets[0], vec![1]); // B(x) = Qx = {x²}
    }

    #[test]
    fn faithful_action_gives_faithful_presheaves() {
        let t2 = fixtures::t2();
        let a = fixtures::t2_point_action();
        assert!(action_is_faithful(&t2, &a));
        let k = build_karoubi(&t2);
        let d = build_schutzcat(&t2);
        assert!(presheaf_on_karoubi(&k, &a).is_faithful(&k));
        assert!(presheaf_on_schutzcat(&d, &a).is_faithful(&d));
    }

    #[test]
    fn relabeled_action_is_equivalent() {
        let u1 = fixtures::u1();
        let k = build_karoubi(&u1);
        let a = fixtures::u1_chain_action();
        // The chain action with the two states swapped.
        let relabeled = validate_action(&u1, vec![vec![0, 0], vec![1, 0]]).unwrap();
        let pa = presheaf_on_karoubi(&k, &a);
        let pb = presheaf_on_karoubi(&k, &relabeled);
        let w = actions_equivalent(&k, &pa, &k, &pb, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .expect("equivalent");
        check_presheaf_transformation(&k, &w.functor, &pa, &pb, &w.eta).unwrap();
        assert!(w.eta.is_iso(&w.functor, &pb));
    }

    #[test]
    fn action_equivalence_is_reflexive_and_symmetric() {
        let u1 = fixtures::u1();
        let ku = build_karoubi(&u1);
        let chain = presheaf_on_karoubi(&ku, &fixtures::u1_chain_action());
        let swapped = presheaf_on_karoubi(
            &ku,
            &validate_action(&u1, vec![vec![0, 0], vec![1, 0]]).unwrap(),
        );
        let kt = build_karoubi(&fixtures::triv());
        let point = presheaf_on_karoubi(&kt, &fixtures::triv_point_action());
        let kr = build_karoubi(&fixtures::rb22());
        let column = presheaf_on_karoubi(&kr, &fixtures::rb22_column_action());
        // Reflexive: each action is equivalent to itself.
        for (k, p) in [
            (&ku, &chain),
            (&ku, &swapped),
            (&kt, &point),
            (&kr, &column),
        ] {
            assert!(actions_equivalent(k, p, k, p, DEFAULT_SEARCH_BUDGET)
                .unwrap()
                .is_some());
        }
        // Symmetric: a found witness in one direction implies one back.
        for ((ka, pa), (kb, pb)) in [
            ((&ku, &chain), (&ku, &swapped)),
            ((&kr, &column), (&kt, &point)),
        ] {
            let fwd = actions_equivalent(ka, pa, kb, pb, DEFAULT_SEARCH_BUDGET).unwrap();
            let back = actions_equivalent(kb, pb, ka, pa, DEFAULT_SEARCH_BUDGET).unwrap();
            assert_eq!(fwd.is_some(), back.is_some());
            assert!(fwd.is_some());
        }
    }

    #[test]
    fn t2_and_u1_actions_are_not_equivalent() {
        let t2 = fixtures::t2();
        let u1 = fixtures::u1();
        let kt = build_karoubi(&t2);
        let ku = build_karoubi(&u1);
        let pa = presheaf_on_karoubi(&kt, &fixtures::t2_point_action());
        let pb = presheaf_on_karoubi(&ku, &fixtures::u1_chain_action());
        let w = actions_equivalent(&kt, &pa, &ku, &pb, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(w.is_none());
    }

    #[test]
    fn action_poset_of_u1_chain_is_a_two_chain() {
        let u1 = fixtures::u1();
        let p = action_poset(&u1, &fixtures::u1_chain_action());
        assert_eq!(p.cyclic_sets, vec![vec![0, 1], vec![1]]);
        // class(p) < class(q) under reverse inclusion.
        let cp = p.class_of(0).unwrap();
        let cq = p.class_of(1).unwrap();
        assert!(p.order.le(cp, cq));
        assert!(!p.order.le(cq, cp));
    }

    #[test]
    fn action_poset_of_t2_points_is_a_single_class() {
        let t2 = fixtures::t2();
        let p = action_poset(&t2, &fixtures::t2_point_action());
        assert_eq!(p.cyclic_sets.len(), 1);
        assert_eq!(p.members[0], vec![0, 1]);
    }

    #[test]
    fn action_poset_of_triv_point() {
        let p = action_poset(&fixtures::triv(), &fixtures::triv_point_action());
        assert_eq!(p.cyclic_sets.len(), 1);
    }

    #[test]
    fn identity_witness_induces_identity_poset_map() {
        let u1 = fixtures::u1();
        let k = build_karoubi(&u1);
        let a = fixtures::u1_chain_action();
        let pa = presheaf_on_karoubi(&k, &a);
        let w = ActionEquivalence {
            functor: Functor::identity(&k),
            eta: PresheafTransformation::identity(&pa),
        };
        let poset = action_poset(&u1, &a);
        let map = induced_poset_iso(&k, &pa, &w, &poset, &poset).unwrap();
        assert_eq!(map, vec![0, 1]);
    }
}
