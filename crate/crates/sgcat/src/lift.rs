//! Lifting a functor between Karoubi envelopes to the Schützenberger
//! categories, goodness of functors, reflection checks, and lifting of
//! natural transformations between action presheaves.

use crate::action::{
    check_presheaf_transformation, presheaf_on_karoubi, presheaf_on_schutzcat,
    PresheafTransformation, SAction,
};
use crate::cat::{FiniteCategory, MorIx, Payload, SemigroupCategories};
use crate::error::{Error, Result};
use crate::functor::{check_functor, is_equivalence, Functor};
use crate::greens::greens_data;
use crate::semigroup::Semigroup;

/// Idempotent witnesses `e_s, f_s` with `e_s·s·f_s = s` for every `s`,
/// fixed to `e_ε = f_ε = ε` on idempotents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalUnitFamily {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl LocalUnitFamily {
    pub fn check(&self, sg: &Semigroup) -> Result<()> {
        if self.left.len() != sg.order() || self.right.len() != sg.order() {
            return Err(Error::WitnessInvalid(
                "family arrays do not match the semigroup".into(),
            ));
        }
        for s in sg.elements() {
            let (e, f) = (self.left[s], self.right[s]);
            if !sg.is_idempotent(e) || !sg.is_idempotent(f) {
                return Err(Error::WitnessInvalid(format!(
                    "family at {s} uses non-idempotent units"
                )));
            }
            if sg.mul(sg.mul(e, s), f) != s {
                return Err(Error::WitnessInvalid(format!(
                    "family at {s} does not satisfy e·s·f = s"
                )));
            }
            if sg.is_idempotent(s) && (e != s || f != s) {
                return Err(Error::WitnessInvalid(format!(
                    "family at idempotent {s} must be ({s}, {s})"
                )));
            }
        }
        Ok(())
    }
}

/// The canonical family: idempotents are their own units; otherwise the
/// least-index idempotent left and right units are chosen.
pub fn local_unit_families(sg: &Semigroup) -> Result<LocalUnitFamily> {
    let idem = sg.idempotents();
    let mut left = Vec::with_capacity(sg.order());
    let mut right = Vec::with_capacity(sg.order());
    for s in sg.elements() {
        if sg.is_idempotent(s) {
            left.push(s);
            right.push(s);
            continue;
        }
        let e = idem
            .iter()
            .copied()
            .find(|&e| sg.mul(e, s) == s)
            .ok_or(Error::NoLocalUnits(s))?;
        let f = idem
            .iter()
            .copied()
            .find(|&f| sg.mul(s, f) == s)
            .ok_or(Error::NoLocalUnits(s))?;
        left.push(e);
        right.push(f);
    }
    Ok(LocalUnitFamily { left, right })
}

/// The middle component of a triple morphism (the maps γ_K, γ_D and
/// F_m all project here).
pub fn project_middle(c: &FiniteCategory, m: MorIx) -> usize {
    c.morphism(m)
        .payload
        .middle()
        .expect("triple-payload morphism")
}

/// Does middle projection satisfy `γ(m1 ∘ m2) = γ(m1)·γ(m2)` on all
/// composable pairs? True for `K(S)`; on `D(S)` it can fail.
pub fn middle_projection_is_semifunctor(c: &FiniteCategory, sg: &Semigroup) -> bool {
    for m1 in 0..c.morphism_count() {
        for m2 in 0..c.morphism_count() {
            if let Some(m12) = c.compose(m1, m2) {
                let lhs = project_middle(c, m12);
                let rhs = sg.mul(project_middle(c, m1), project_middle(c, m2));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// The result of lifting `F: K(S) → K(T)` to `F̂: D(S) → D(T)`.
///
/// The lift depends on the chosen unit family, so the family travels
/// with the functor.
#[derive(Debug, Clone)]
pub struct Lifted {
    pub functor: Functor,
    pub family: LocalUnitFamily,
    /// Payload-wise equality of `F̂|K(S)` with `F`.
    pub restriction_matches: bool,
}

/// Lifts a functor between Karoubi envelopes to the Schützenberger
/// categories: objects go to `F_m(e_s, s, f_s)`, a morphism `(s, u, t)`
/// to `(F̂(s), F_m(e_s, u, f_t), F̂(t))`.
pub fn lift_functor(
    src: &SemigroupCategories,
    dst: &SemigroupCategories,
    f: &Functor,
    family: &LocalUnitFamily,
) -> Result<Lifted> {
    family.check(&src.semigroup)?;
    // Both semigroups must have local units.
    local_unit_families(&dst.semigroup)?;
    check_functor(&src.karoubi, &dst.karoubi, f)?;

    let fm = |left: usize, mid: usize, right: usize| -> Result<usize> {
        let k = src.karoubi.by_triple(left, mid, right)?;
        Ok(project_middle(&dst.karoubi, f.mor_map[k]))
    };

    let mut ob_map = Vec::with_capacity(src.schutzcat.object_count());
    for s in src.semigroup.elements() {
        let image = fm(family.left[s], s, family.right[s])?;
        let ob = dst
            .schutzcat
            .object_by_tag(image)
            .expect("every element is an object of D(T)");
        ob_map.push(ob);
    }
    let mut mor_map = Vec::with_capacity(src.schutzcat.morphism_count());
    for m in src.schutzcat.morphisms() {
        let Payload::Triple(s, u, t) = m.payload else {
            unreachable!("schutzenberger morphisms are triples")
        };
        let mid = fm(family.left[s], u, family.right[t])?;
        let target = dst.schutzcat.by_triple(
            dst.schutzcat.object_tag(ob_map[s]),
            mid,
            dst.schutzcat.object_tag(ob_map[t]),
        )?;
        mor_map.push(target);
    }
    let functor = Functor { ob_map, mor_map };
    check_functor(&src.schutzcat, &dst.schutzcat, &functor)?;

    // F̂ restricted to K(S) coincides with F, payload for payload.
    let mut restriction_matches = true;
    for (k_ix, k_mor) in src.karoubi.morphisms().iter().enumerate() {
        let d_ix = src
            .schutzcat
            .by_payload(&k_mor.payload)
            .expect("K(S) sits inside D(S)");
        let via_f = dst.karoubi.morphism(f.mor_map[k_ix]).payload;
        let via_lift = dst.schutzcat.morphism(functor.mor_map[d_ix]).payload;
        if via_f != via_lift {
            restriction_matches = false;
        }
    }
    Ok(Lifted {
        functor,
        family: family.clone(),
        restriction_matches,
    })
}

/// Lift with the canonical least-index family.
pub fn lift_functor_canonical(
    src: &SemigroupCategories,
    dst: &SemigroupCategories,
    f: &Functor,
) -> Result<Lifted> {
    let family = local_unit_families(&src.semigroup)?;
    lift_functor(src, dst, f, &family)
}

/// Whether a functor `D(S) → D(T)` is good: it restricts to an
/// equivalence `K(S) → K(T)`, and for every `s` some idempotent pair
/// `(e, f)` with `e·s·f = s` satisfies the two triple equalities
/// `G(e,s,s) = (G(e),G(s),G(s))` and `G(s,s,f) = (G(s),G(s),G(f))`.
#[derive(Debug, Clone)]
pub struct GoodnessReport {
    pub restricts_to_karoubi: bool,
    pub restriction_is_equivalence: bool,
    /// Per element: the first witness pair found, if any.
    pub witnesses: Vec<Option<(usize, usize)>>,
    pub good: bool,
}

/// The restriction of `G: D(S) → D(T)` to the Karoubi envelopes, if its
/// object images are idempotent.
pub fn restriction_to_karoubi(
    src: &SemigroupCategories,
    dst: &SemigroupCategories,
    g: &Functor,
) -> Option<Functor> {
    let mut ob_map = Vec::with_capacity(src.karoubi.object_count());
    for ob in src.karoubi.objects() {
        let e = src.karoubi.object_tag(ob);
        let d_ob = src.schutzcat.object_by_tag(e).unwrap();
        let image = dst.schutzcat.object_tag(g.ob_map[d_ob]);
        ob_map.push(dst.karoubi.object_by_tag(image)?);
    }
    let mut mor_map = Vec::with_capacity(src.karoubi.morphism_count());
    for m in src.karoubi.morphisms() {
        let d_ix = src.schutzcat.by_payload(&m.payload).unwrap();
        let payload = dst.schutzcat.morphism(g.mor_map[d_ix]).payload;
        mor_map.push(dst.karoubi.by_payload(&payload)?);
    }
    Some(Functor { ob_map, mor_map })
}

/// Evaluates the goodness conditions. The witness search is existential
/// over all valid idempotent pairs, not just the canonical family.
pub fn is_good_functor(
    src: &SemigroupCategories,
    dst: &SemigroupCategories,
    g: &Functor,
) -> GoodnessReport {
    let s_sg = &src.semigroup;
    let idem = s_sg.idempotents();
    let restriction = restriction_to_karoubi(src, dst, g);
    let restricts_to_karoubi = restriction.is_some();
    let restriction_is_equivalence = restriction
        .as_ref()
        .map(|r| is_equivalence(&src.karoubi, &dst.karoubi, r))
        .unwrap_or(false);

    let g_elt = |s: usize| dst.schutzcat.object_tag(g.ob_map[s]);
    let mut witnesses = Vec::with_capacity(s_sg.order());
    for s in s_sg.elements() {
        let mut found = None;
        'search: for &e in idem.iter().filter(|&&e| s_sg.mul(e, s) == s) {
            for &f in idem.iter().filter(|&&f| s_sg.mul(s, f) == s) {
                let left = src.schutzcat.by_triple(e, s, s).expect("valid triple");
                let right = src.schutzcat.by_triple(s, s, f).expect("valid triple");
                let left_ok = dst.schutzcat.morphism(g.mor_map[left]).payload
                    == Payload::Triple(g_elt(e), g_elt(s), g_elt(s));
                let right_ok = dst.schutzcat.morphism(g.mor_map[right]).payload
                    == Payload::Triple(g_elt(s), g_elt(s), g_elt(f));
                if left_ok && right_ok {
                    found = Some((e, f));
                    break 'search;
                }
            }
        }
        witnesses.push(found);
    }
    let good =
        restricts_to_karoubi && restriction_is_equivalence && witnesses.iter().all(|w| w.is_some());
    GoodnessReport {
        restricts_to_karoubi,
        restriction_is_equivalence,
        witnesses,
        good,
    }
}

/// `s` regular in `S` iff `G(s)` regular in `T`, for all `s`.
pub fn reflects_regularity(
    src: &SemigroupCategories,
    dst: &SemigroupCategories,
    g: &Functor,
) -> bool {
    src.semigroup.elements().all(|s| {
        let image = dst.schutzcat.object_tag(g.ob_map[s]);
        src.semigroup.is_regular(s) == dst.semigroup.is_regular(image)
    })
}

/// `s ≤_J s'` in `S` iff `G(s) ≤_J G(s')` in `T`, for all pairs.
pub fn reflects_j_order_on_objects(
    src: &SemigroupCategories,
    dst: &SemigroupCategories,
    g: &Functor,
) -> bool {
    let gs = greens_data(&src.semigroup);
    let gt = greens_data(&dst.semigroup);
    let image = |s: usize| dst.schutzcat.object_tag(g.ob_map[s]);
    src.semigroup.elements().all(|s| {
        src.semigroup
            .elements()
            .all(|s2| gs.le_j.le(s, s2) == gt.le_j.le(image(s), image(s2)))
    })
}

/// The lift of `η: A_Q ⇒ A_R ∘ F` to `λ: B_Q ⇒ B_R ∘ F̂`, where
/// `λ_s` is the restriction of `η_{f_s}` to `Q·s`.
#[derive(Debug, Clone)]
pub struct LiftedTransformation {
    pub lifted: Lifted,
    pub lambda: PresheafTransformation,
    pub eta_is_iso: bool,
    pub lambda_is_iso: bool,
}

pub fn lift_natural_transformation(
    src: &SemigroupCategories,
    dst: &SemigroupCategories,
    f: &Functor,
    family: &LocalUnitFamily,
    action_q: &SAction,
    action_r: &SAction,
    eta: &PresheafTransformation,
) -> Result<LiftedTransformation> {
    let aq = presheaf_on_karoubi(&src.karoubi, action_q);
    let ar = presheaf_on_karoubi(&dst.karoubi, action_r);
    check_presheaf_transformation(&src.karoubi, f, &aq, &ar, eta)?;

    let lifted = lift_functor(src, dst, f, family)?;
    let bq = presheaf_on_schutzcat(&src.schutzcat, action_q);
    let br = presheaf_on_schutzcat(&dst.schutzcat, action_r);

    let karoubi_ob = |e: usize| src.karoubi.object_by_tag(e).expect("idempotent object");
    let mut components = Vec::with_capacity(src.schutzcat.object_count());
    for s in src.semigroup.elements() {
        let f_s = karoubi_ob(family.right[s]);
        let e_s = karoubi_ob(family.left[s]);
        let fhat_s = dst.schutzcat.object_tag(lifted.functor.ob_map[s]);
        // Key identity: η_{f_s}(q·s) = η_{e_s}(q·e_s)·F̂(s) for all q.
        for q in 0..action_q.states() {
            let lhs = eta.apply(&aq, f_s, action_q.apply(q, s));
            let qe = action_q.apply(q, family.left[s]);
            let rhs = action_r.apply(eta.apply(&aq, e_s, qe), fhat_s);
            assert_eq!(lhs, rhs, "restriction identity fails at s = {s}, q = {q}");
        }
        let comp: Vec<usize> = bq.sets[s].iter().map(|&y| eta.apply(&aq, f_s, y)).collect();
        components.push(comp);
    }
    let lambda = PresheafTransformation { components };
    check_presheaf_transformation(&src.schutzcat, &lifted.functor, &bq, &br, &lambda)?;

    let eta_is_iso = eta.is_iso(f, &ar);
    let lambda_is_iso = lambda.is_iso(&lifted.functor, &br);
    // If η is a natural isomorphism, so is λ.
    assert!(!eta_is_iso || lambda_is_iso, "iso lifting failed");
    Ok(LiftedTransformation {
        lifted,
        lambda,
        eta_is_iso,
        lambda_is_iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{actions_equivalent, presheaf_on_karoubi};
    use crate::fixtures;
    use crate::functor::{find_equivalence, DEFAULT_SEARCH_BUDGET};

    fn cats(sg: Semigroup) -> SemigroupCategories {
        SemigroupCategories::build(sg)
    }

    #[test]
    fn canonical_families() {
        let u1 = fixtures::u1();
        let fam = local_unit_families(&u1).unwrap();
        assert_eq!(fam.left, vec![0, 1]);
        assert_eq!(fam.right, vec![0, 1]);

        let t2 = fixtures::t2();
        let fam = local_unit_families(&t2).unwrap();
        assert_eq!(fam.left[1], 0); // e_sigma = id
        assert_eq!(fam.right[1], 0);
        fam.check(&t2).unwrap();

        assert!(matches!(
            local_unit_families(&fixtures::n2()),
            Err(Error::NoLocalUnits(0))
        ));
    }

    #[test]
    fn middle_projection_on_karoubi_is_a_faithful_semifunctor() {
        for sg in fixtures::all() {
            let k = crate::cat::build_karoubi(&sg);
            assert!(middle_projection_is_semifunctor(&k, &sg));
            // Injective on each hom-set: triples share their endpoints.
            for a in k.objects() {
                for b in k.objects() {
                    let mids: Vec<usize> =
                        k.hom(a, b).iter().map(|&m| project_middle(&k, m)).collect();
                    let mut dedup = mids.clone();
                    dedup.sort_unstable();
                    dedup.dedup();
                    assert_eq!(dedup.len(), mids.len());
                }
            }
        }
    }

    #[test]
    fn middle_projection_on_schutzcat_of_t2_is_not_a_semifunctor() {
        // (id, sigma, sigma) ∘ (sigma, sigma, id) = (id, sigma, id), but
        // the middles multiply to sigma·sigma = id.
        let t2 = fixtures::t2();
        let d = crate::cat::build_schutzcat(&t2);
        assert!(!middle_projection_is_semifunctor(&d, &t2));
        let m1 = d.by_triple(0, 1, 1).unwrap();
        let m2 = d.by_triple(1, 1, 0).unwrap();
        let m12 = d.compose(m1, m2).unwrap();
        assert_eq!(project_middle(&d, m12), 1);
        assert_eq!(t2.mul(project_middle(&d, m1), project_middle(&d, m2)), 0);
    }

    #[test]
    fn lifting_the_identity_gives_the_identity() {
        for name in ["u1", "t2"] {
            let pair = cats(fixtures::load(name).unwrap());
            let f = Functor::identity(&pair.karoubi);
            let lifted = lift_functor_canonical(&pair, &pair, &f).unwrap();
            assert_eq!(lifted.functor, Functor::identity(&pair.schutzcat));
            assert!(lifted.restriction_matches);
        }
    }

    #[test]
    fn lifting_the_rb22_to_triv_equivalence() {
        let src = cats(fixtures::rb22());
        let dst = cats(fixtures::triv());
        let f = find_equivalence(&src.karoubi, &dst.karoubi, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .expect("equivalent");
        let lifted = lift_functor_canonical(&src, &dst, &f).unwrap();
        // All four objects collapse to the unique object, all sixteen
        // morphisms to its identity.
        assert!(lifted.functor.ob_map.iter().all(|&o| o == 0));
        assert_eq!(lifted.functor.mor_map.len(), 16);
        assert!(lifted.functor.mor_map.iter().all(|&m| m == 0));
        assert!(lifted.restriction_matches);
        assert!(is_equivalence(
            &src.schutzcat,
            &dst.schutzcat,
            &lifted.functor
        ));
        let report = is_good_functor(&src, &dst, &lifted.functor);
        assert!(report.good);
        assert!(reflects_regularity(&src, &dst, &lifted.functor));
        assert!(reflects_j_order_on_objects(&src, &dst, &lifted.functor));
    }

    #[test]
    fn collapsing_functor_on_d_u1_is_not_good() {
        let pair = cats(fixtures::u1());
        let d = &pair.schutzcat;
        let zero_ob = 1;
        let id_mor = d.identity_at(zero_ob);
        let collapse = Functor {
            ob_map: vec![zero_ob; d.object_count()],
            mor_map: vec![id_mor; d.morphism_count()],
        };
        assert!(check_functor(d, d, &collapse).is_ok());
        let report = is_good_functor(&pair, &pair, &collapse);
        assert!(report.restricts_to_karoubi);
        assert!(!report.restriction_is_equivalence);
        assert!(!report.good);
        assert!(!reflects_j_order_on_objects(&pair, &pair, &collapse));
        // Regularity still reflects here: everything in U1 is regular.
        assert!(reflects_regularity(&pair, &pair, &collapse));
    }

    #[test]
    fn lifted_identity_is_good() {
        let pair = cats(fixtures::u1());
        let f = Functor::identity(&pair.karoubi);
        let lifted = lift_functor_canonical(&pair, &pair, &f).unwrap();
        let report = is_good_functor(&pair, &pair, &lifted.functor);
        assert!(report.good);
        assert!(report.witnesses.iter().all(|w| w.is_some()));
    }

    #[test]
    fn lift_of_identity_transformation_is_identity_family() {
        let pair = cats(fixtures::t2());
        let action = fixtures::t2_point_action();
        let f = Functor::identity(&pair.karoubi);
        let fam = local_unit_families(&pair.semigroup).unwrap();
        let aq = presheaf_on_karoubi(&pair.karoubi, &action);
        let eta = PresheafTransformation::identity(&aq);
        let out =
            lift_natural_transformation(&pair, &pair, &f, &fam, &action, &action, &eta).unwrap();
        assert!(out.eta_is_iso);
        assert!(out.lambda_is_iso);
        // λ_s is the identity on Q·s for each s.
        let bq = presheaf_on_schutzcat(&pair.schutzcat, &action);
        assert_eq!(out.lambda.components, bq.sets);
    }

    #[test]
    fn lift_of_rb22_to_triv_action_witness() {
        let src = cats(fixtures::rb22());
        let dst = cats(fixtures::triv());
        let aq_action = fixtures::rb22_column_action();
        let ar_action = fixtures::triv_point_action();
        let pa = presheaf_on_karoubi(&src.karoubi, &aq_action);
        let pb = presheaf_on_karoubi(&dst.karoubi, &ar_action);
        let witness =
            actions_equivalent(&src.karoubi, &pa, &dst.karoubi, &pb, DEFAULT_SEARCH_BUDGET)
                .unwrap()
                .expect("column action is equivalent to the point action");
        let fam = local_unit_families(&src.semigroup).unwrap();
        let out = lift_natural_transformation(
            &src,
            &dst,
            &witness.functor,
            &fam,
            &aq_action,
            &ar_action,
            &witness.eta,
        )
        .unwrap();
        // Every component is the constant map onto the single point.
        assert!(out
            .lambda
            .components
            .iter()
            .all(|comp| comp.iter().all(|&v| v == 0)));
        // Each Q·s is a single column, so the components are bijections
        // onto the one-point sets and the lift is a natural isomorphism.
        assert!(out.eta_is_iso);
        assert!(out.lambda_is_iso);
    }
}
