//! Functors between finite categories, natural transformations,
//! equivalence checking, and equivalence search.

use crate::cat::{categories_payload_equal, FiniteCategory, MorIx, ObIx};
use crate::error::{Error, Result};

/// A functor stored as its object and morphism maps (indices into the
/// target category). Source and target are passed alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub ob_map: Vec<ObIx>,
    pub mor_map: Vec<MorIx>,
}

impl Functor {
    pub fn identity(c: &FiniteCategory) -> Functor {
        Functor {
            ob_map: c.objects().collect(),
            mor_map: (0..c.morphism_count()).collect(),
        }
    }

    /// `then ∘ self` (apply `self` first).
    pub fn and_then(&self, then: &Functor) -> Functor {
        Functor {
            ob_map: self.ob_map.iter().map(|&o| then.ob_map[o]).collect(),
            mor_map: self.mor_map.iter().map(|&m| then.mor_map[m]).collect(),
        }
    }
}

/// Checks the functor laws, reporting the first violation.
pub fn check_functor(src: &FiniteCategory, dst: &FiniteCategory, f: &Functor) -> Result<()> {
    if f.ob_map.len() != src.object_count() || f.mor_map.len() != src.morphism_count() {
        return Err(Error::InvalidFunctor(
            "map sizes do not match source".into(),
        ));
    }
    if f.ob_map.iter().any(|&o| o >= dst.object_count())
        || f.mor_map.iter().any(|&m| m >= dst.morphism_count())
    {
        return Err(Error::InvalidFunctor("image out of range".into()));
    }
    for (ix, m) in src.morphisms().iter().enumerate() {
        let img = dst.morphism(f.mor_map[ix]);
        if img.dom != f.ob_map[m.dom] || img.cod != f.ob_map[m.cod] {
            return Err(Error::InvalidFunctor(format!(
                "morphism {ix} maps to one with wrong endpoints"
            )));
        }
    }
    for a in src.objects() {
        if f.mor_map[src.identity_at(a)] != dst.identity_at(f.ob_map[a]) {
            return Err(Error::InvalidFunctor(format!(
                "identity at object {a} is not preserved"
            )));
        }
    }
    check_semifunctor(src, dst, f)
}

/// The composition half of the functor laws (identity preservation is
/// not required).
pub fn check_semifunctor(src: &FiniteCategory, dst: &FiniteCategory, f: &Functor) -> Result<()> {
    for m1 in 0..src.morphism_count() {
        for m2 in 0..src.morphism_count() {
            if let Some(m12) = src.compose(m1, m2) {
                if dst.compose(f.mor_map[m1], f.mor_map[m2]) != Some(f.mor_map[m12]) {
                    return Err(Error::InvalidFunctor(format!(
                        "composition of {m1} and {m2} is not preserved"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Bijective on every hom-set.
pub fn is_fully_faithful(src: &FiniteCategory, dst: &FiniteCategory, f: &Functor) -> bool {
    for a in src.objects() {
        for b in src.objects() {
            let from = src.hom(a, b);
            let to = dst.hom(f.ob_map[a], f.ob_map[b]);
            if from.len() != to.len() {
                return false;
            }
            let mut images: Vec<MorIx> = from.iter().map(|&m| f.mor_map[m]).collect();
            images.sort_unstable();
            images.dedup();
            if images.len() != from.len() {
                return false;
            }
        }
    }
    true
}

/// Every target object is isomorphic to some image object.
pub fn is_essentially_surjective(src: &FiniteCategory, dst: &FiniteCategory, f: &Functor) -> bool {
    dst.objects().all(|d| {
        src.objects()
            .any(|a| dst.objects_isomorphic(d, f.ob_map[a]))
    })
}

/// Fully faithful and essentially surjective (and a functor at all).
pub fn is_equivalence(src: &FiniteCategory, dst: &FiniteCategory, f: &Functor) -> bool {
    check_functor(src, dst, f).is_ok()
        && is_fully_faithful(src, dst, f)
        && is_essentially_surjective(src, dst, f)
}

/// A natural transformation between functors `F, G: src → dst`,
/// stored as one `dst`-morphism `F(a) → G(a)` per source object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalTransformation {
    pub components: Vec<MorIx>,
}

/// Checks component endpoints and every naturality square
/// `η_b ∘ F(m) = G(m) ∘ η_a`.
pub fn check_natural_transformation(
    src: &FiniteCategory,
    dst: &FiniteCategory,
    f: &Functor,
    g: &Functor,
    eta: &NaturalTransformation,
) -> Result<()> {
    if eta.components.len() != src.object_count() {
        return Err(Error::InvalidNaturalTransformation(
            "one component per source object required".into(),
        ));
    }
    for a in src.objects() {
        let comp = dst.morphism(eta.components[a]);
        if comp.dom != f.ob_map[a] || comp.cod != g.ob_map[a] {
            return Err(Error::InvalidNaturalTransformation(format!(
                "component at object {a} has wrong endpoints"
            )));
        }
    }
    for (ix, m) in src.morphisms().iter().enumerate() {
        let lhs = dst.compose(eta.components[m.cod], f.mor_map[ix]);
        let rhs = dst.compose(g.mor_map[ix], eta.components[m.dom]);
        if lhs != rhs || lhs.is_none() {
            return Err(Error::InvalidNaturalTransformation(format!(
                "naturality square fails at morphism {ix}"
            )));
        }
    }
    Ok(())
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

struct EquivalenceSearch<'a> {
    src: &'a FiniteCategory,
    dst: &'a FiniteCategory,
    budget: u64,
    nodes: u64,
    limit: usize,
    found: Vec<Functor>,
}

impl<'a> EquivalenceSearch<'a> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn hom_profile_ok(&self, ob_map: &[Option<ObIx>], a: ObIx, img: ObIx) -> bool {
        for b in self.src.objects() {
            if let Some(bi) = ob_map[b] {
                if self.src.hom(a, b).len() != self.dst.hom(img, bi).len()
                    || self.src.hom(b, a).len() != self.dst.hom(bi, img).len()
                {
                    return false;
                }
            }
        }
        self.src.hom(a, a).len() == self.dst.hom(img, img).len()
    }

    fn assign_objects(&mut self, ob_map: &mut Vec<Option<ObIx>>, a: ObIx) -> Result<()> {
        if a == self.src.object_count() {
            let full: Vec<ObIx> = ob_map.iter().map(|o| o.unwrap()).collect();
            // Essential surjectivity before descending into morphisms.
            let es = self
                .dst
                .objects()
                .all(|d| full.iter().any(|&i| self.dst.objects_isomorphic(d, i)));
            if !es {
                return Ok(());
            }
            let mut mor_map: Vec<Option<MorIx>> = vec![None; self.src.morphism_count()];
            for ob in self.src.objects() {
                mor_map[self.src.identity_at(ob)] = Some(self.dst.identity_at(full[ob]));
            }
            let free: Vec<MorIx> = (0..self.src.morphism_count())
                .filter(|&m| mor_map[m].is_none())
                .collect();
            return self.assign_morphisms(&full, &mut mor_map, &free, 0);
        }
        for img in self.dst.objects() {
            self.tick()?;
            if self.hom_profile_ok(ob_map, a, img) {
                ob_map[a] = Some(img);
                self.assign_objects(ob_map, a + 1)?;
                ob_map[a] = None;
                if self.found.len() >= self.limit {
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    fn consistent(&self, mor_map: &[Option<MorIx>], m: MorIx, w: MorIx) -> bool {
        // Every composition involving m whose factors and composite are
        // all assigned must be preserved.
        for other in 0..self.src.morphism_count() {
            let Some(ow) = mor_map[other] else { continue };
            if let Some(c) = self.src.compose(m, other) {
                if let Some(cw) = mor_map[c] {
                    if self.dst.compose(w, ow) != Some(cw) {
                        return false;
                    }
                }
            }
            if let Some(c) = self.src.compose(other, m) {
                if let Some(cw) = mor_map[c] {
                    if self.dst.compose(ow, w) != Some(cw) {
                        return false;
                    }
                }
            }
        }
        if let Some(c) = self.src.compose(m, m) {
            if let Some(cw) = mor_map[c] {
                if self.dst.compose(w, w) != Some(cw) {
                    return false;
                }
            }
        }
        true
    }

    fn assign_morphisms(
        &mut self,
        ob_map: &[ObIx],
        mor_map: &mut Vec<Option<MorIx>>,
        free: &[MorIx],
        depth: usize,
    ) -> Result<()> {
        if depth == free.len() {
            let full = Functor {
                ob_map: ob_map.to_vec(),
                mor_map: mor_map.iter().map(|m| m.unwrap()).collect(),
            };
            if is_equivalence(self.src, self.dst, &full) {
                self.found.push(full);
            }
            return Ok(());
        }
        let m = free[depth];
        let data = self.src.morphism(m);
        let candidates: Vec<MorIx> = self.dst.hom(ob_map[data.dom], ob_map[data.cod]).to_vec();
        for w in candidates {
            self.tick()?;
            // Injectivity within the hom-set keeps the map fully faithful.
            let clash = self
                .src
                .hom(data.dom, data.cod)
                .iter()
                .any(|&m2| m2 != m && mor_map[m2] == Some(w));
            if clash || !self.consistent(mor_map, m, w) {
                continue;
            }
            mor_map[m] = Some(w);
            self.assign_morphisms(ob_map, mor_map, free, depth + 1)?;
            mor_map[m] = None;
            if self.found.len() >= self.limit {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Enumerates equivalences `src → dst` by backtracking over object
/// images and hom-set bijections, up to `limit` results.
pub fn enumerate_equivalences(
    src: &FiniteCategory,
    dst: &FiniteCategory,
    budget: u64,
    limit: usize,
) -> Result<Vec<Functor>> {
    let mut search = EquivalenceSearch {
        src,
        dst,
        budget,
        nodes: 0,
        limit,
        found: Vec::new(),
    };
    let mut ob_map = vec![None; src.object_count()];
    search.assign_objects(&mut ob_map, 0)?;
    Ok(search.found)
}

/// Decides whether two finite categories are equivalent and produces a
/// witness functor.
///
/// Payload-identical categories short-circuit to the identity functor.
/// Otherwise both categories are reduced to skeletons; the categories
/// are equivalent iff the skeletons are isomorphic, and a skeleton
/// isomorphism composed with the retraction data gives the returned
/// equivalence.
pub fn find_equivalence(
    src: &FiniteCategory,
    dst: &FiniteCategory,
    budget: u64,
) -> Result<Option<Functor>> {
    if categories_payload_equal(src, dst) {
        return Ok(Some(Functor::identity(src)));
    }
    let sk_src = src.skeleton();
    let sk_dst = dst.skeleton();
    if sk_src.sub.category.object_count() != sk_dst.sub.category.object_count()
        || sk_src.sub.category.morphism_count() != sk_dst.sub.category.morphism_count()
    {
        return Ok(None);
    }
    let isos = enumerate_equivalences(&sk_src.sub.category, &sk_dst.sub.category, budget, 1)?;
    let Some(iso) = isos.into_iter().next() else {
        return Ok(None);
    };
    // Reverse map: src morphism index → skeleton morphism index.
    let mut into_sk = vec![usize::MAX; src.morphism_count()];
    for (skm, &parent) in sk_src.sub.morphism_of.iter().enumerate() {
        into_sk[parent] = skm;
    }
    let ob_map: Vec<ObIx> = src
        .objects()
        .map(|a| sk_dst.sub.object_of[iso.ob_map[sk_src.rep_class[a]]])
        .collect();
    let mor_map: Vec<MorIx> = src
        .morphisms()
        .iter()
        .enumerate()
        .map(|(ix, m)| {
            let lifted = src
                .compose(sk_src.to_rep[m.cod], ix)
                .and_then(|x| src.compose(x, sk_src.from_rep[m.dom]))
                .expect("endpoints match by construction");
            sk_dst.sub.morphism_of[iso.mor_map[into_sk[lifted]]]
        })
        .collect();
    let functor = Functor { ob_map, mor_map };
    debug_assert!(is_equivalence(src, dst, &functor));
    Ok(Some(functor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{build_karoubi, build_schutzcat};
    use crate::fixtures;

    #[test]
    fn identity_functor_is_an_equivalence() {
        for sg in fixtures::all() {
            let k = build_karoubi(&sg);
            if k.object_count() == 0 {
                continue;
            }
            let id = Functor::identity(&k);
            assert!(check_functor(&k, &k, &id).is_ok());
            assert!(is_equivalence(&k, &k, &id));
        }
    }

    #[test]
    fn inclusion_of_karoubi_in_schutzcat_is_an_equivalence_iff_regular() {
        // Regular fixtures: TRIV, U1, RZ2, T2, RB22, B2. Non-regular: N2, C21.
        let regular = ["triv", "u1", "rz2", "t2", "rb22", "b2"];
        for (name, sg) in fixtures::all_named() {
            let k = build_karoubi(&sg);
            let d = build_schutzcat(&sg);
            let ob_map: Vec<usize> = (0..k.object_count())
                .map(|o| d.object_by_tag(k.object_tag(o)).unwrap())
                .collect();
            let mor_map: Vec<usize> = k
                .morphisms()
                .iter()
                .map(|m| d.by_payload(&m.payload).unwrap())
                .collect();
            let inclusion = Functor { ob_map, mor_map };
            assert!(check_functor(&k, &d, &inclusion).is_ok(), "{name}");
            assert!(is_fully_faithful(&k, &d, &inclusion), "{name}");
            let expect = regular.contains(&name);
            assert_eq!(is_equivalence(&k, &d, &inclusion), expect, "{name}");
        }
    }

    #[test]
    fn karoubi_of_triv_and_rb22_are_equivalent() {
        let kt = build_karoubi(&fixtures::triv());
        let kr = build_karoubi(&fixtures::rb22());
        let f = find_equivalence(&kt, &kr, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .expect("equivalent");
        assert!(is_equivalence(&kt, &kr, &f));
        let g = find_equivalence(&kr, &kt, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .expect("equivalent");
        assert!(is_equivalence(&kr, &kt, &g));
    }

    #[test]
    fn karoubi_of_u1_is_not_equivalent_to_triv() {
        let ku = build_karoubi(&fixtures::u1());
        let kt = build_karoubi(&fixtures::triv());
        // Skeleton of K(U1) keeps two non-isomorphic objects.
        assert_eq!(ku.skeleton().sub.category.object_count(), 2);
        let f = find_equivalence(&ku, &kt, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(f.is_none());
    }

    #[test]
    fn self_equivalence_search_returns_identity_first() {
        let k = build_karoubi(&fixtures::t2());
        let f = find_equivalence(&k, &k, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(f, Functor::identity(&k));
    }

    #[test]
    fn enumerated_self_equivalences_of_k_t2_are_valid() {
        let k = build_karoubi(&fixtures::t2());
        let all = enumerate_equivalences(&k, &k, DEFAULT_SEARCH_BUDGET, usize::MAX).unwrap();
        assert!(!all.is_empty());
        assert!(all.contains(&Functor::identity(&k)));
        for f in &all {
            assert!(is_equivalence(&k, &k, f));
        }
        // Deduplicated by construction.
        let mut seen = all.clone();
        seen.sort_by(|a, b| {
            (a.ob_map.clone(), a.mor_map.clone()).cmp(&(b.ob_map.clone(), b.mor_map.clone()))
        });
        seen.dedup();
        assert_eq!(seen.len(), all.len());
    }

    #[test]
    fn search_budget_is_reported() {
        let k = build_karoubi(&fixtures::t2());
        assert!(matches!(
            enumerate_equivalences(&k, &k, 3, usize::MAX),
            Err(Error::SearchBudgetExceeded { budget: 3 })
        ));
    }

    #[test]
    fn found_equivalences_reflect_the_arrow_j_order() {
        use crate::semigroup::Semigroup;
        let u1 = fixtures::u1();
        let swapped = Semigroup::from_table(vec![vec![0, 0], vec![0, 1]], None).unwrap();
        let ku = build_karoubi(&u1);
        let ks = build_karoubi(&swapped);
        let mut witnesses = vec![(
            ku.clone(),
            ks.clone(),
            find_equivalence(&ku, &ks, DEFAULT_SEARCH_BUDGET)
                .unwrap()
                .expect("equivalent"),
        )];
        let kt = build_karoubi(&fixtures::t2());
        for f in enumerate_equivalences(&kt, &kt, DEFAULT_SEARCH_BUDGET, usize::MAX).unwrap() {
            witnesses.push((kt.clone(), kt.clone(), f));
        }
        for (src, dst, f) in &witnesses {
            for m1 in 0..src.morphism_count() {
                for m2 in 0..src.morphism_count() {
                    assert_eq!(
                        src.j_order_arrows(m1, m2),
                        dst.j_order_arrows(f.mor_map[m1], f.mor_map[m2])
                    );
                }
            }
        }
    }

    #[test]
    fn natural_transformation_checker_accepts_identity() {
        let d = build_schutzcat(&fixtures::t2());
        let id = Functor::identity(&d);
        let eta = NaturalTransformation {
            components: d.objects().map(|o| d.identity_at(o)).collect(),
        };
        assert!(check_natural_transformation(&d, &d, &id, &id, &eta).is_ok());
    }

    #[test]
    fn natural_transformation_checker_rejects_bad_components() {
        let d = build_schutzcat(&fixtures::c21());
        let id = Functor::identity(&d);
        // Component at object x is not an endomorphism of F(x) = x.
        let wrong = NaturalTransformation {
            components: vec![d.by_triple(1, 1, 0).unwrap(), d.identity_at(1)],
        };
        assert!(check_natural_transformation(&d, &d, &id, &id, &wrong).is_err());
    }
}
