//! Explicit finite categories, and the two categories the crate is
//! about: the Karoubi envelope `K(S)` (objects the idempotents,
//! morphisms the triples `(e, s, f)` with `s ∈ eSf`) and the
//! Schützenberger category `D(S)` (objects all of `S`, morphisms the
//! triples `(s, u, t)` with `u ∈ sS¹ ∩ S¹t`).
//!
//! A triple `(a, u, b)` is a morphism *from* `b` *to* `a`; the stored
//! `dom`/`cod` follow the usual category-theoretic convention, the
//! reversed drawing is presentation only. `compose(m1, m2)` is `m1 ∘ m2`
//! (apply `m2` first), defined when `dom(m1) = cod(m2)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::localstruct::least_left_witness;
use crate::permgroup::PermGroup;
use crate::semigroup::Semigroup;

pub type ObIx = usize;
pub type MorIx = usize;

/// Morphism payload. `K(S)` and `D(S)` keep their defining triples
/// verbatim; hand-built categories use opaque tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Payload {
    Triple(usize, usize, usize),
    Tag(usize),
}

impl Payload {
    pub fn middle(&self) -> Option<usize> {
        match self {
            Payload::Triple(_, m, _) => Some(*m),
            Payload::Tag(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorData {
    pub dom: ObIx,
    pub cod: ObIx,
    pub payload: Payload,
}

#[derive(Debug, Clone)]
pub struct FiniteCategory {
    object_names: Vec<String>,
    /// Ambient label per object (element index for `D(S)`, idempotent
    /// element index for `K(S)`).
    object_tags: Vec<usize>,
    morphisms: Vec<MorData>,
    identities: Vec<MorIx>,
    compose: HashMap<(MorIx, MorIx), MorIx>,
    by_payload: HashMap<Payload, MorIx>,
    hom: HashMap<(ObIx, ObIx), Vec<MorIx>>,
}

/// A full subcategory together with the index maps back into its parent.
#[derive(Debug, Clone)]
pub struct Subcategory {
    pub category: FiniteCategory,
    /// Subcategory object → parent object.
    pub object_of: Vec<ObIx>,
    /// Subcategory morphism → parent morphism.
    pub morphism_of: Vec<MorIx>,
}

/// A skeleton: one least-index object per isomorphism class, plus the
/// chosen isomorphisms between each object and its representative.
#[derive(Debug, Clone)]
pub struct Skeleton {
    pub sub: Subcategory,
    /// Parent object → its representative (a parent object).
    pub rep_of: Vec<ObIx>,
    /// Parent object → skeleton object index of its representative.
    pub rep_class: Vec<usize>,
    /// Parent object a → an isomorphism a → rep(a) in the parent.
    pub to_rep: Vec<MorIx>,
    /// Parent object a → the inverse isomorphism rep(a) → a.
    pub from_rep: Vec<MorIx>,
}

impl FiniteCategory {
    /// Assembles a category, computing composites with `compose_fn`
    /// (given `m1 ∘ m2`, return the payload of the composite).
    pub fn assemble(
        object_names: Vec<String>,
        object_tags: Vec<usize>,
        morphisms: Vec<MorData>,
        identities: Vec<MorIx>,
        compose_fn: impl Fn(&MorData, &MorData) -> Payload,
    ) -> Result<Self> {
        let n_obj = object_names.len();
        if object_tags.len() != n_obj || identities.len() != n_obj {
            return Err(Error::MalformedCategory(
                "object arrays have mismatched lengths".into(),
            ));
        }
        let mut by_payload = HashMap::new();
        for (ix, m) in morphisms.iter().enumerate() {
            if m.dom >= n_obj || m.cod >= n_obj {
                return Err(Error::MalformedCategory(format!(
                    "morphism {ix} has out-of-range endpoints"
                )));
            }
            if by_payload.insert(m.payload, ix).is_some() {
                return Err(Error::MalformedCategory(format!(
                    "duplicate payload {:?}",
                    m.payload
                )));
            }
        }
        for (ob, &id) in identities.iter().enumerate() {
            let m = &morphisms[id];
            if m.dom != ob || m.cod != ob {
                return Err(Error::MalformedCategory(format!(
                    "identity of object {ob} is not an endomorphism of it"
                )));
            }
        }
        let mut hom: HashMap<(ObIx, ObIx), Vec<MorIx>> = HashMap::new();
        for (ix, m) in morphisms.iter().enumerate() {
            hom.entry((m.dom, m.cod)).or_default().push(ix);
        }
        let mut incoming: Vec<Vec<MorIx>> = vec![Vec::new(); n_obj];
        let mut outgoing: Vec<Vec<MorIx>> = vec![Vec::new(); n_obj];
        for (ix, m) in morphisms.iter().enumerate() {
            incoming[m.cod].push(ix);
            outgoing[m.dom].push(ix);
        }
        let mut compose = HashMap::new();
        for b in 0..n_obj {
            for &m1 in &outgoing[b] {
                for &m2 in &incoming[b] {
                    let p = compose_fn(&morphisms[m1], &morphisms[m2]);
                    let &target = by_payload.get(&p).ok_or_else(|| {
                        Error::MalformedCategory(format!(
                            "composite payload {p:?} is not a morphism"
                        ))
                    })?;
                    let t = &morphisms[target];
                    if t.dom != morphisms[m2].dom || t.cod != morphisms[m1].cod {
                        return Err(Error::MalformedCategory(format!(
                            "composite of {m1} and {m2} has wrong endpoints"
                        )));
                    }
                    compose.insert((m1, m2), target);
                }
            }
        }
        Ok(FiniteCategory {
            object_names,
            object_tags,
            morphisms,
            identities,
            compose,
            by_payload,
            hom,
        })
    }

    pub fn object_count(&self) -> usize {
        self.object_names.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObIx> {
        0..self.object_names.len()
    }

    pub fn object_name(&self, ob: ObIx) -> &str {
        &self.object_names[ob]
    }

    pub fn object_tag(&self, ob: ObIx) -> usize {
        self.object_tags[ob]
    }

    pub fn object_by_tag(&self, tag: usize) -> Option<ObIx> {
        self.object_tags.iter().position(|&t| t == tag)
    }

    pub fn morphism(&self, m: MorIx) -> &MorData {
        &self.morphisms[m]
    }

    pub fn morphisms(&self) -> &[MorData] {
        &self.morphisms
    }

    pub fn identity_at(&self, ob: ObIx) -> MorIx {
        self.identities[ob]
    }

    pub fn is_identity(&self, m: MorIx) -> bool {
        self.identities[self.morphisms[m].dom] == m
    }

    pub fn by_payload(&self, p: &Payload) -> Option<MorIx> {
        self.by_payload.get(p).copied()
    }

    pub fn by_triple(&self, left: usize, mid: usize, right: usize) -> Result<MorIx> {
        self.by_payload(&Payload::Triple(left, mid, right))
            .ok_or(Error::NoSuchMorphism(left, mid, right))
    }

    /// `m1 ∘ m2` (apply `m2` first); defined iff `dom(m1) = cod(m2)`.
    pub fn compose(&self, m1: MorIx, m2: MorIx) -> Option<MorIx> {
        self.compose.get(&(m1, m2)).copied()
    }

    /// Morphisms with `dom = from` and `cod = to`, in index order.
    pub fn hom(&self, from: ObIx, to: ObIx) -> &[MorIx] {
        self.hom.get(&(from, to)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Full category-axiom check: identity laws and associativity on
    /// every composable pair/triple.
    pub fn validate(&self) -> Result<()> {
        for (ix, m) in self.morphisms.iter().enumerate() {
            let lid = self.identities[m.cod];
            let rid = self.identities[m.dom];
            if self.compose(lid, ix) != Some(ix) || self.compose(ix, rid) != Some(ix) {
                return Err(Error::MalformedCategory(format!(
                    "identity law fails at morphism {ix}"
                )));
            }
        }
        for m1 in 0..self.morphisms.len() {
            for m2 in 0..self.morphisms.len() {
                let expect = self.morphisms[m1].dom == self.morphisms[m2].cod;
                let got = self.compose.contains_key(&(m1, m2));
                if expect != got {
                    return Err(Error::MalformedCategory(format!(
                        "composition defined on wrong pair ({m1}, {m2})"
                    )));
                }
            }
        }
        for (&(m1, m2), &m12) in &self.compose {
            for m3 in 0..self.morphisms.len() {
                if self.morphisms[m2].dom != self.morphisms[m3].cod {
                    continue;
                }
                let m23 = self.compose(m2, m3).unwrap();
                if self.compose(m12, m3) != self.compose(m1, m23) {
                    return Err(Error::MalformedCategory(format!(
                        "associativity fails at ({m1}, {m2}, {m3})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn inverse_of(&self, m: MorIx) -> Option<MorIx> {
        let data = &self.morphisms[m];
        let id_dom = self.identities[data.dom];
        let id_cod = self.identities[data.cod];
        self.hom(data.cod, data.dom)
            .iter()
            .copied()
            .find(|&w| self.compose(w, m) == Some(id_dom) && self.compose(m, w) == Some(id_cod))
    }

    /// Two-sided-inverse search.
    pub fn is_isomorphism(&self, m: MorIx) -> bool {
        self.inverse_of(m).is_some()
    }

    pub fn objects_isomorphic(&self, a: ObIx, b: ObIx) -> bool {
        self.hom(a, b).iter().any(|&m| self.is_isomorphism(m))
    }

    /// The endomorphism monoid at an object: an abstract monoid whose
    /// element `i` is the `i`-th endomorphism, with `i·j = m_i ∘ m_j`.
    pub fn endomorphism_monoid_at(&self, ob: ObIx) -> (Semigroup, Vec<MorIx>) {
        let endos: Vec<MorIx> = self.hom(ob, ob).to_vec();
        let k = endos.len();
        let mut table = vec![vec![0usize; k]; k];
        for (i, &mi) in endos.iter().enumerate() {
            for (j, &mj) in endos.iter().enumerate() {
                let c = self.compose(mi, mj).expect("endomorphisms compose");
                table[i][j] = endos.iter().position(|&m| m == c).unwrap();
            }
        }
        let sg = Semigroup::from_table(table, None).expect("composition is associative");
        (sg, endos)
    }

    /// The group of invertible endomorphisms at an object, presented as
    /// permutations. The carrier is the set of middle components when
    /// the endomorphisms are triples (as in `K(S)` and `D(S)`, where the
    /// left action by composition is then literally the Schützenberger
    /// action), and the morphism indices otherwise.
    pub fn automorphism_group_at(&self, ob: ObIx) -> PermGroup {
        let autos: Vec<MorIx> = self
            .hom(ob, ob)
            .iter()
            .copied()
            .filter(|&m| self.is_isomorphism(m))
            .collect();
        let middles: Vec<Option<usize>> = autos
            .iter()
            .map(|&m| self.morphisms[m].payload.middle())
            .collect();
        let use_middles = middles.iter().all(|m| m.is_some()) && {
            let mut ms: Vec<usize> = middles.iter().map(|m| m.unwrap()).collect();
            ms.sort_unstable();
            ms.windows(2).all(|w| w[0] != w[1])
        };
        let label = |m: MorIx| -> usize {
            if use_middles {
                self.morphisms[m].payload.middle().unwrap()
            } else {
                m
            }
        };
        let mut carrier: Vec<usize> = autos.iter().map(|&m| label(m)).collect();
        carrier.sort_unstable();
        let perms: Vec<Vec<usize>> = autos
            .iter()
            .map(|&g| {
                let mut images = vec![0; autos.len()];
                for &x in &autos {
                    let gx = self.compose(g, x).expect("automorphisms compose");
                    let from = carrier.binary_search(&label(x)).unwrap();
                    let to = carrier.binary_search(&label(gx)).unwrap();
                    images[from] = to;
                }
                images
            })
            .collect();
        PermGroup::from_perms(carrier, perms).expect("automorphisms form a group")
    }

    /// The full subcategory on a subset of objects.
    pub fn full_subcategory(&self, objects: &[ObIx]) -> Subcategory {
        let object_of = objects.to_vec();
        let new_obj: HashMap<ObIx, usize> =
            object_of.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        let mut morphism_of = Vec::new();
        let mut new_mor_of: HashMap<MorIx, usize> = HashMap::new();
        let mut morphisms = Vec::new();
        for (ix, m) in self.morphisms.iter().enumerate() {
            if let (Some(&d), Some(&c)) = (new_obj.get(&m.dom), new_obj.get(&m.cod)) {
                new_mor_of.insert(ix, morphisms.len());
                morphism_of.push(ix);
                morphisms.push(MorData {
                    dom: d,
                    cod: c,
                    payload: m.payload,
                });
            }
        }
        let mut compose = HashMap::new();
        for (n1, &p1) in morphism_of.iter().enumerate() {
            for (n2, &p2) in morphism_of.iter().enumerate() {
                if morphisms[n1].dom == morphisms[n2].cod {
                    let target = self.compose(p1, p2).expect("parent composes");
                    compose.insert((n1, n2), new_mor_of[&target]);
                }
            }
        }
        let mut by_payload = HashMap::new();
        for (ix, m) in morphisms.iter().enumerate() {
            by_payload.insert(m.payload, ix);
        }
        let mut hom: HashMap<(ObIx, ObIx), Vec<MorIx>> = HashMap::new();
        for (ix, m) in morphisms.iter().enumerate() {
            hom.entry((m.dom, m.cod)).or_default().push(ix);
        }
        let category = FiniteCategory {
            object_names: object_of
                .iter()
                .map(|&o| self.object_names[o].clone())
                .collect(),
            object_tags: object_of.iter().map(|&o| self.object_tags[o]).collect(),
            morphisms,
            identities: object_of
                .iter()
                .map(|&o| new_mor_of[&self.identities[o]])
                .collect(),
            compose,
            by_payload,
            hom,
        };
        Subcategory {
            category,
            object_of,
            morphism_of,
        }
    }

    /// The opposite category. Triple payloads get the canonical
    /// relabeling `(a, u, b) ↦ (b, u, a)`; tags are unchanged.
    pub fn opposite(&self) -> FiniteCategory {
        let morphisms: Vec<MorData> = self
            .morphisms
            .iter()
            .map(|m| MorData {
                dom: m.cod,
                cod: m.dom,
                payload: match m.payload {
                    Payload::Triple(a, u, b) => Payload::Triple(b, u, a),
                    t => t,
                },
            })
            .collect();
        let mut compose = HashMap::new();
        for (&(m1, m2), &m12) in &self.compose {
            compose.insert((m2, m1), m12);
        }
        let mut by_payload = HashMap::new();
        for (ix, m) in morphisms.iter().enumerate() {
            by_payload.insert(m.payload, ix);
        }
        let mut hom: HashMap<(ObIx, ObIx), Vec<MorIx>> = HashMap::new();
        for (ix, m) in morphisms.iter().enumerate() {
            hom.entry((m.dom, m.cod)).or_default().push(ix);
        }
        FiniteCategory {
            object_names: self.object_names.clone(),
            object_tags: self.object_tags.clone(),
            morphisms,
            identities: self.identities.clone(),
            compose,
            by_payload,
            hom,
        }
    }

    /// One least-index object per isomorphism class, with the chosen
    /// isomorphisms to the representatives.
    pub fn skeleton(&self) -> Skeleton {
        let n = self.object_count();
        let mut reps: Vec<ObIx> = Vec::new();
        let mut rep_of = vec![0; n];
        let mut rep_class = vec![0; n];
        for a in 0..n {
            match reps.iter().position(|&r| self.objects_isomorphic(a, r)) {
                Some(k) => {
                    rep_of[a] = reps[k];
                    rep_class[a] = k;
                }
                None => {
                    rep_of[a] = a;
                    rep_class[a] = reps.len();
                    reps.push(a);
                }
            }
        }
        let mut to_rep = vec![0; n];
        let mut from_rep = vec![0; n];
        for a in 0..n {
            let r = rep_of[a];
            let iso = self
                .hom(a, r)
                .iter()
                .copied()
                .find(|&m| self.is_isomorphism(m))
                .expect("object is isomorphic to its representative");
            to_rep[a] = iso;
            from_rep[a] = self.inverse_of(iso).expect("isomorphism has an inverse");
        }
        let sub = self.full_subcategory(&reps);
        Skeleton {
            sub,
            rep_of,
            rep_class,
            to_rep,
            from_rep,
        }
    }

    /// `f ≤_J g`: some `a ∘ g ∘ b = f` with matching endpoints.
    pub fn j_order_arrows(&self, f: MorIx, g: MorIx) -> bool {
        let fd = &self.morphisms[f];
        let gd = &self.morphisms[g];
        for &a in self.hom(gd.cod, fd.cod) {
            for &b in self.hom(fd.dom, gd.dom) {
                let gb = self.compose(g, b).expect("endpoints match");
                if self.compose(a, gb) == Some(f) {
                    return true;
                }
            }
        }
        false
    }
}

/// Structural equality up to payload matching: same objects (by tag),
/// same morphism payload sets with matching endpoints, identities and
/// composition tables. Used for the duality checks.
pub fn categories_payload_equal(c: &FiniteCategory, d: &FiniteCategory) -> bool {
    if c.object_count() != d.object_count() || c.morphism_count() != d.morphism_count() {
        return false;
    }
    // Objects must match tag-for-tag.
    let mut ob_map = vec![0; c.object_count()];
    for a in c.objects() {
        match d.object_by_tag(c.object_tag(a)) {
            Some(b) => ob_map[a] = b,
            None => return false,
        }
    }
    let mut mor_map = vec![0; c.morphism_count()];
    for (ix, m) in c.morphisms().iter().enumerate() {
        match d.by_payload(&m.payload) {
            Some(other) => {
                let o = d.morphism(other);
                if o.dom != ob_map[m.dom] || o.cod != ob_map[m.cod] {
                    return false;
                }
                mor_map[ix] = other;
            }
            None => return false,
        }
    }
    for a in c.objects() {
        if mor_map[c.identity_at(a)] != d.identity_at(ob_map[a]) {
            return false;
        }
    }
    for m1 in 0..c.morphism_count() {
        for m2 in 0..c.morphism_count() {
            if let Some(m12) = c.compose(m1, m2) {
                if d.compose(mor_map[m1], mor_map[m2]) != Some(mor_map[m12]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Builds the Karoubi envelope `K(S)`.
///
/// Objects are the idempotents of `S`; a morphism from `f` to `e` is a
/// triple `(e, s, f)` with `s ∈ eSf`; composition is
/// `(e, s, f)(f, t, g) = (e, st, g)`; the identity at `e` is `(e, e, e)`.
/// If `S` has no idempotents the empty category is returned.
pub fn build_karoubi(sg: &Semigroup) -> FiniteCategory {
    let idem = sg.idempotents();
    let mut morphisms = Vec::new();
    for (ci, &e) in idem.iter().enumerate() {
        for (di, &f) in idem.iter().enumerate() {
            let mut mids = vec![false; sg.order()];
            for s in sg.elements() {
                mids[sg.mul(sg.mul(e, s), f)] = true;
            }
            for s in sg.elements().filter(|&s| mids[s]) {
                morphisms.push(MorData {
                    dom: di,
                    cod: ci,
                    payload: Payload::Triple(e, s, f),
                });
            }
        }
    }
    let identities: Vec<MorIx> = idem
        .iter()
        .map(|&e| {
            morphisms
                .iter()
                .position(|m| m.payload == Payload::Triple(e, e, e))
                .expect("identity triple present")
        })
        .collect();
    let names = idem.iter().map(|&e| sg.name(e)).collect();
    FiniteCategory::assemble(names, idem.clone(), morphisms, identities, |m1, m2| {
        let (Payload::Triple(e, s, _f), Payload::Triple(_f2, t, g)) = (m1.payload, m2.payload)
        else {
            unreachable!("karoubi morphisms are triples")
        };
        Payload::Triple(e, sg.mul(s, t), g)
    })
    .expect("karoubi envelope is a category")
}

/// Builds the Schützenberger category `D(S)`.
///
/// Objects are the elements of `S`; a morphism from `t` to `s` is a
/// triple `(s, u, t)` with `u ∈ sS¹ ∩ S¹t`; to compose `(s, u, t)` with
/// `(t, v, r)`, pick the least `x ∈ S¹` with `x·t = u` and return
/// `(s, x·v, r)`; the identity at `s` is `(s, s, s)`.
pub fn build_schutzcat(sg: &Semigroup) -> FiniteCategory {
    let n = sg.order();
    let right: Vec<Vec<usize>> = (0..n).map(|s| sg.right_ideal(s)).collect();
    let left: Vec<Vec<usize>> = (0..n).map(|s| sg.left_ideal(s)).collect();
    let mut morphisms = Vec::new();
    for s in 0..n {
        for t in 0..n {
            for &u in &right[s] {
                if left[t].binary_search(&u).is_ok() {
                    morphisms.push(MorData {
                        dom: t,
                        cod: s,
                        payload: Payload::Triple(s, u, t),
                    });
                }
            }
        }
    }
    let identities: Vec<MorIx> = (0..n)
        .map(|s| {
            morphisms
                .iter()
                .position(|m| m.payload == Payload::Triple(s, s, s))
                .expect("identity triple present")
        })
        .collect();
    let names = (0..n).map(|s| sg.name(s)).collect();
    let tags = (0..n).collect();
    FiniteCategory::assemble(names, tags, morphisms, identities, |m1, m2| {
        let (Payload::Triple(s, u, t), Payload::Triple(_t2, v, r)) = (m1.payload, m2.payload)
        else {
            unreachable!("schutzenberger morphisms are triples")
        };
        let x = least_left_witness(sg, t, u).expect("u ∈ S¹t");
        Payload::Triple(s, sg.mul_one(x, Some(v)).unwrap(), r)
    })
    .expect("schutzenberger category is a category")
}

/// A semigroup bundled with both of its derived categories.
#[derive(Debug, Clone)]
pub struct SemigroupCategories {
    pub semigroup: Semigroup,
    pub karoubi: FiniteCategory,
    pub schutzcat: FiniteCategory,
}

impl SemigroupCategories {
    pub fn build(semigroup: Semigroup) -> Self {
        let karoubi = build_karoubi(&semigroup);
        let schutzcat = build_schutzcat(&semigroup);
        SemigroupCategories {
            semigroup,
            karoubi,
            schutzcat,
        }
    }
}
