//! Structured reports behind the CLI. Rendering is deterministic:
//! identical inputs give byte-identical text and JSON.

use std::fmt::Write;

use serde::Serialize;

use crate::action::{action_is_faithful, action_poset, SAction};
use crate::cat::{build_karoubi, build_schutzcat, categories_payload_equal, SemigroupCategories};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::functor::{find_equivalence, is_equivalence};
use crate::greens::greens_data;
use crate::iso::monoids_isomorphic;
use crate::labeled::{
    labeled_dl_of_lu, labeled_dq, labeled_dq_of_lu, labeled_preorders_isomorphic,
};
use crate::lift::{
    is_good_functor, lift_functor_canonical, reflects_j_order_on_objects, reflects_regularity,
};
use crate::localstruct::{local_divisor, schutzenberger_group, Side};
use crate::permgroup::perm_groups_isomorphic;
use crate::semigroup::Semigroup;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct CategorySize {
    pub objects: usize,
    pub morphisms: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct DClassSummary {
    pub id: usize,
    pub elements: Vec<String>,
    pub regular: bool,
    pub schutzenberger_order: usize,
    pub h_class_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub schema: u32,
    pub source: String,
    pub order: usize,
    pub identity: Option<String>,
    pub idempotents: Vec<String>,
    pub regular_elements: usize,
    pub local_units_size: usize,
    pub has_local_units: bool,
    pub d_classes: Vec<DClassSummary>,
    pub karoubi: CategorySize,
    pub schutzenberger: CategorySize,
}

pub fn analyze(sg: &Semigroup, source: &str) -> AnalyzeReport {
    let g = greens_data(sg);
    let k = build_karoubi(sg);
    let d = build_schutzcat(sg);
    let lu_size = sg
        .local_units_subsemigroup()
        .map(|(lu, _)| lu.order())
        .unwrap_or(0);
    let d_classes = g
        .d_classes
        .iter()
        .enumerate()
        .map(|(id, cls)| {
            let h_count = {
                let mut ids: Vec<usize> = cls.iter().map(|&s| g.h_class[s]).collect();
                ids.sort_unstable();
                ids.dedup();
                ids.len()
            };
            DClassSummary {
                id,
                elements: cls.iter().map(|&s| sg.name(s)).collect(),
                regular: g.d_regular[id],
                schutzenberger_order: schutzenberger_group(sg, cls[0], Side::Left).order(),
                h_class_count: h_count,
            }
        })
        .collect();
    AnalyzeReport {
        schema: SCHEMA_VERSION,
        source: source.to_string(),
        order: sg.order(),
        identity: sg.identity().map(|e| sg.name(e)),
        idempotents: sg.idempotents().iter().map(|&e| sg.name(e)).collect(),
        regular_elements: sg.elements().filter(|&s| sg.is_regular(s)).count(),
        local_units_size: lu_size,
        has_local_units: lu_size == sg.order(),
        d_classes,
        karoubi: CategorySize {
            objects: k.object_count(),
            morphisms: k.morphism_count(),
        },
        schutzenberger: CategorySize {
            objects: d.object_count(),
            morphisms: d.morphism_count(),
        },
    }
}

impl AnalyzeReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "semigroup: {} (order {})", self.source, self.order);
        let _ = writeln!(
            out,
            "identity: {}",
            self.identity.as_deref().unwrap_or("none")
        );
        let _ = writeln!(
            out,
            "idempotents ({}): {}",
            self.idempotents.len(),
            self.idempotents.join(" ")
        );
        let _ = writeln!(out, "regular elements: {}", self.regular_elements);
        let _ = writeln!(
            out,
            "local units: LU size {} ({})",
            self.local_units_size,
            if self.has_local_units {
                "has local units"
            } else {
                "proper subsemigroup"
            }
        );
        let _ = writeln!(out, "d-classes:");
        for c in &self.d_classes {
            let _ = writeln!(
                out,
                "  D{}: {{{}}} regular={} schutzenberger=|{}| h-classes={}",
                c.id,
                c.elements.join(" "),
                if c.regular { 1 } else { 0 },
                c.schutzenberger_order,
                c.h_class_count
            );
        }
        let _ = writeln!(
            out,
            "karoubi envelope: {} objects, {} morphisms",
            self.karoubi.objects, self.karoubi.morphisms
        );
        let _ = writeln!(
            out,
            "schutzenberger category: {} objects, {} morphisms",
            self.schutzenberger.objects, self.schutzenberger.morphisms
        );
        out
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LiftOutcome {
    Lifted {
        restriction_matches: bool,
        good: bool,
        reflects_regularity: bool,
        reflects_j_order: bool,
        is_equivalence: bool,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct CompareReport {
    pub schema: u32,
    pub left: String,
    pub right: String,
    pub equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinguisher: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lift: Option<LiftOutcome>,
    pub labeled_lu_isomorphic: bool,
}

pub fn compare(
    left: &Semigroup,
    right: &Semigroup,
    left_name: &str,
    right_name: &str,
    budget: u64,
) -> Result<CompareReport> {
    let src = SemigroupCategories::build(left.clone());
    let dst = SemigroupCategories::build(right.clone());
    let dl_left = labeled_dl_of_lu(left);
    let dl_right = labeled_dl_of_lu(right);
    let labeled_lu_isomorphic = labeled_preorders_isomorphic(&dl_left, &dl_right)?;
    let witness = find_equivalence(&src.karoubi, &dst.karoubi, budget)?;
    match witness {
        None => {
            let sk_l = src.karoubi.skeleton().sub.category;
            let sk_r = dst.karoubi.skeleton().sub.category;
            let distinguisher = if sk_l.object_count() != sk_r.object_count() {
                format!(
                    "skeleton object counts differ: {} vs {}",
                    sk_l.object_count(),
                    sk_r.object_count()
                )
            } else if dl_left.labels.len() != dl_right.labels.len() {
                format!(
                    "labeled d-class orders have {} vs {} nodes",
                    dl_left.labels.len(),
                    dl_right.labels.len()
                )
            } else {
                "skeletons are not isomorphic (hom structure or labels differ)".to_string()
            };
            Ok(CompareReport {
                schema: SCHEMA_VERSION,
                left: left_name.to_string(),
                right: right_name.to_string(),
                equivalent: false,
                distinguisher: Some(distinguisher),
                lift: None,
                labeled_lu_isomorphic,
            })
        }
        Some(f) => {
            let lift = match lift_functor_canonical(&src, &dst, &f) {
                Ok(lifted) => {
                    let report = is_good_functor(&src, &dst, &lifted.functor);
                    LiftOutcome::Lifted {
                        restriction_matches: lifted.restriction_matches,
                        good: report.good,
                        reflects_regularity: reflects_regularity(&src, &dst, &lifted.functor),
                        reflects_j_order: reflects_j_order_on_objects(&src, &dst, &lifted.functor),
                        is_equivalence: is_equivalence(
                            &src.schutzcat,
                            &dst.schutzcat,
                            &lifted.functor,
                        ),
                    }
                }
                Err(Error::NoLocalUnits(s)) => LiftOutcome::Skipped {
                    reason: format!("element {s} has no local units"),
                },
                Err(e) => return Err(e),
            };
            Ok(CompareReport {
                schema: SCHEMA_VERSION,
                left: left_name.to_string(),
                right: right_name.to_string(),
                equivalent: true,
                distinguisher: None,
                lift: Some(lift),
                labeled_lu_isomorphic,
            })
        }
    }
}

impl CompareReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "compare {} vs {}", self.left, self.right);
        if self.equivalent {
            let _ = writeln!(out, "karoubi envelopes: equivalent");
            match &self.lift {
                Some(LiftOutcome::Lifted {
                    restriction_matches,
                    good,
                    reflects_regularity,
                    reflects_j_order,
                    is_equivalence,
                }) => {
                    let _ = writeln!(out, "lifted functor on schutzenberger categories:");
                    let _ = writeln!(
                        out,
                        "  restricts to the karoubi functor: {restriction_matches}"
                    );
                    let _ = writeln!(out, "  good: {good}");
                    let _ = writeln!(out, "  equivalence: {is_equivalence}");
                    let _ = writeln!(out, "  reflects regularity: {reflects_regularity}");
                    let _ = writeln!(out, "  reflects j-order on objects: {reflects_j_order}");
                }
                Some(LiftOutcome::Skipped { reason }) => {
                    let _ = writeln!(out, "lift skipped: {reason}");
                }
                None => {}
            }
        } else {
            let _ = writeln!(out, "karoubi envelopes: NOT equivalent");
            if let Some(d) = &self.distinguisher {
                let _ = writeln!(out, "distinguisher: {d}");
            }
        }
        let _ = writeln!(
            out,
            "labeled d-class orders of LU: {}",
            if self.labeled_lu_isomorphic {
                "isomorphic"
            } else {
                "not isomorphic"
            }
        );
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LabelSummary {
    pub regular: bool,
    pub group_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsReport {
    pub schema: u32,
    pub source: String,
    pub states: usize,
    pub faithful: bool,
    pub poset_classes: Vec<Vec<usize>>,
    pub poset_covers: Vec<(usize, usize)>,
    pub labeled_dq: Vec<LabelSummary>,
    pub labeled_dq_lu: Vec<LabelSummary>,
}

pub fn invariants(sg: &Semigroup, action: &SAction, source: &str) -> InvariantsReport {
    let poset = action_poset(sg, action);
    let dq = labeled_dq(sg, action);
    let dq_lu = labeled_dq_of_lu(sg, action);
    let to_summaries = |lp: &crate::labeled::LabeledPreorder| {
        lp.labels
            .iter()
            .map(|l| LabelSummary {
                regular: l.regular,
                group_order: l.group.order(),
                rank: l.rank,
            })
            .collect::<Vec<_>>()
    };
    InvariantsReport {
        schema: SCHEMA_VERSION,
        source: source.to_string(),
        states: action.states(),
        faithful: action_is_faithful(sg, action),
        poset_classes: poset.cyclic_sets.clone(),
        poset_covers: poset.order.covers(),
        labeled_dq: to_summaries(&dq),
        labeled_dq_lu: to_summaries(&dq_lu),
    }
}

impl InvariantsReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "action of {} on {} states (faithful: {})",
            self.source, self.states, self.faithful
        );
        let _ = writeln!(out, "poset P(Q): {} classes", self.poset_classes.len());
        for (i, set) in self.poset_classes.iter().enumerate() {
            let states = set
                .iter()
                .map(|q| q.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(out, "  class {i}: {{{states}}}");
        }
        for (a, b) in &self.poset_covers {
            let _ = writeln!(out, "  cover: {a} < {b}");
        }
        let fmt = |ls: &[LabelSummary]| {
            ls.iter()
                .map(|l| {
                    let eps = if l.regular { 1 } else { 0 };
                    match l.rank {
                        Some(r) => format!("({eps}, |G|={}, rank {r})", l.group_order),
                        None => format!("({eps}, |G|={})", l.group_order),
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(
            out,
            "labeled d-classes with ranks: {}",
            fmt(&self.labeled_dq)
        );
        let _ = writeln!(out, "same for LU(S): {}", fmt(&self.labeled_dq_lu));
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SchutzReport {
    pub schema: u32,
    pub source: String,
    pub element: String,
    pub h_class: Vec<String>,
    pub left_order: usize,
    pub right_order: usize,
    pub left_right_isomorphic: bool,
}

pub fn schutz(sg: &Semigroup, element: usize, source: &str) -> Result<SchutzReport> {
    let g = greens_data(sg);
    let left = schutzenberger_group(sg, element, Side::Left);
    let right = schutzenberger_group(sg, element, Side::Right);
    Ok(SchutzReport {
        schema: SCHEMA_VERSION,
        source: source.to_string(),
        element: sg.name(element),
        h_class: g.h_class_of(element).iter().map(|&s| sg.name(s)).collect(),
        left_order: left.order(),
        right_order: right.order(),
        left_right_isomorphic: perm_groups_isomorphic(&left, &right)?,
    })
}

impl SchutzReport {
    pub fn render_text(&self) -> String {
        format!(
            "schutzenberger groups of H_{} in {}\nh-class: {{{}}}\nleft order: {}\nright order: {}\nleft and right isomorphic: {}\n",
            self.element,
            self.source,
            self.h_class.join(" "),
            self.left_order,
            self.right_order,
            self.left_right_isomorphic
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DivisorReport {
    pub schema: u32,
    pub source: String,
    pub element: String,
    pub carrier: Vec<String>,
    pub identity: String,
    pub table: Vec<Vec<usize>>,
    pub unit_group_order: usize,
    pub units_match_schutzenberger: bool,
}

pub fn divisor(sg: &Semigroup, element: usize, source: &str) -> Result<DivisorReport> {
    let d = local_divisor(sg, element);
    let units = d.unit_group();
    let schutz = schutzenberger_group(sg, element, Side::Left);
    let m = d.monoid.order();
    Ok(DivisorReport {
        schema: SCHEMA_VERSION,
        source: source.to_string(),
        element: sg.name(element),
        carrier: d.carrier.iter().map(|&s| sg.name(s)).collect(),
        identity: sg.name(d.base),
        table: (0..m)
            .map(|i| (0..m).map(|j| d.monoid.mul(i, j)).collect())
            .collect(),
        unit_group_order: units.order(),
        units_match_schutzenberger: perm_groups_isomorphic(&units, &schutz)?,
    })
}

impl DivisorReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "local divisor at {} in {} (identity {})",
            self.element, self.source, self.identity
        );
        let _ = writeln!(out, "carrier: {{{}}}", self.carrier.join(" "));
        for (i, row) in self.table.iter().enumerate() {
            let cells = row
                .iter()
                .map(|&j| self.carrier[j].clone())
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(out, "  {} | {}", self.carrier[i], cells);
        }
        let _ = writeln!(out, "unit group order: {}", self.unit_group_order);
        let _ = writeln!(
            out,
            "unit group isomorphic to schutzenberger group: {}",
            self.units_match_schutzenberger
        );
        out
    }
}

/// One fixture's slice of the corpus run: analysis plus the recurring
/// structural checks.
#[derive(Debug, Clone, Serialize)]
pub struct FixtureChecks {
    pub karoubi_axioms: bool,
    pub schutzenberger_axioms: bool,
    pub hom_counts_match_ideals: bool,
    pub karoubi_is_full_subcategory: bool,
    pub iso_criterion_matches: bool,
    pub duality: bool,
    pub left_right_schutzenberger_isomorphic: bool,
    pub schutzenberger_free_transitive: bool,
    pub divisor_units_match_schutzenberger: bool,
    pub endomorphisms_match_divisor: bool,
}

impl FixtureChecks {
    pub fn all_passed(&self) -> bool {
        self.karoubi_axioms
            && self.schutzenberger_axioms
            && self.hom_counts_match_ideals
            && self.karoubi_is_full_subcategory
            && self.iso_criterion_matches
            && self.duality
            && self.left_right_schutzenberger_isomorphic
            && self.schutzenberger_free_transitive
            && self.divisor_units_match_schutzenberger
            && self.endomorphisms_match_divisor
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureReport {
    pub name: String,
    pub analysis: AnalyzeReport,
    pub checks: FixtureChecks,
    pub all_passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub schema: u32,
    pub fixtures: Vec<FixtureReport>,
    pub all_passed: bool,
}

fn fixture_checks(sg: &Semigroup) -> Result<FixtureChecks> {
    let g = greens_data(sg);
    let pair = SemigroupCategories::build(sg.clone());
    let k = &pair.karoubi;
    let d = &pair.schutzcat;

    let hom_counts_match_ideals = sg.elements().all(|s| {
        sg.elements().all(|t| {
            let r = sg.right_ideal(s);
            let l = sg.left_ideal(t);
            let expected = r.iter().filter(|u| l.binary_search(u).is_ok()).count();
            d.hom(t, s).len() == expected
        })
    });
    let idem_objects: Vec<usize> = sg
        .idempotents()
        .iter()
        .map(|&e| d.object_by_tag(e).unwrap())
        .collect();
    let karoubi_is_full_subcategory =
        categories_payload_equal(&d.full_subcategory(&idem_objects).category, k);
    let iso_criterion_matches = (0..d.morphism_count()).all(|m| {
        let crate::cat::Payload::Triple(s, u, t) = d.morphism(m).payload else {
            return false;
        };
        let criterion = g.r_class[s] == g.r_class[u] && g.l_class[u] == g.l_class[t];
        d.is_isomorphism(m) == criterion
    });
    let duality = {
        let op = sg.opposite();
        categories_payload_equal(&d.opposite(), &build_schutzcat(&op))
            && categories_payload_equal(&k.opposite(), &build_karoubi(&op))
    };
    let mut left_right = true;
    let mut free_transitive = true;
    let mut units_match = true;
    let mut endos_match = true;
    for s in sg.elements() {
        let l = schutzenberger_group(sg, s, Side::Left);
        let r = schutzenberger_group(sg, s, Side::Right);
        left_right &= perm_groups_isomorphic(&l, &r)?;
        free_transitive &= l.order() == g.h_class_of(s).len();
        let div = local_divisor(sg, s);
        units_match &= perm_groups_isomorphic(&div.unit_group(), &l)?;
        let (endo, _) = d.endomorphism_monoid_at(s);
        endos_match &= monoids_isomorphic(&endo, &div.monoid)?;
    }

    Ok(FixtureChecks {
        karoubi_axioms: k.validate().is_ok(),
        schutzenberger_axioms: d.validate().is_ok(),
        hom_counts_match_ideals,
        karoubi_is_full_subcategory,
        iso_criterion_matches,
        duality,
        left_right_schutzenberger_isomorphic: left_right,
        schutzenberger_free_transitive: free_transitive,
        divisor_units_match_schutzenberger: units_match,
        endomorphisms_match_divisor: endos_match,
    })
}

/// Runs the recurring property suite over the canonical corpus.
pub fn corpus_run() -> Result<CorpusReport> {
    let mut fixtures_out = Vec::new();
    for name in fixtures::NAMES {
        let sg = fixtures::load(name)?;
        let checks = fixture_checks(&sg)?;
        let all_passed = checks.all_passed();
        fixtures_out.push(FixtureReport {
            name: name.to_string(),
            analysis: analyze(&sg, name),
            checks,
            all_passed,
        });
    }
    let all_passed = fixtures_out.iter().all(|f| f.all_passed);
    Ok(CorpusReport {
        schema: SCHEMA_VERSION,
        fixtures: fixtures_out,
        all_passed,
    })
}

impl CorpusReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for f in &self.fixtures {
            let _ = writeln!(
                out,
                "{}: order {}, K({} objects, {} morphisms), D({} objects, {} morphisms), checks {}",
                f.name,
                f.analysis.order,
                f.analysis.karoubi.objects,
                f.analysis.karoubi.morphisms,
                f.analysis.schutzenberger.objects,
                f.analysis.schutzenberger.morphisms,
                if f.all_passed { "pass" } else { "FAIL" }
            );
        }
        let _ = writeln!(
            out,
            "corpus: {}",
            if self.all_passed { "pass" } else { "FAIL" }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_t2_matches_expected_sizes() {
        let t2 = fixtures::t2();
        let r = analyze(&t2, "t2");
        assert_eq!(r.idempotents.len(), 3);
        assert_eq!(r.d_classes.len(), 2);
        assert_eq!((r.karoubi.objects, r.karoubi.morphisms), (3, 14));
        assert_eq!(r.schutzenberger.objects, 4);
        let text = r.render_text();
        assert!(text.contains("karoubi envelope: 3 objects, 14 morphisms"));
    }

    #[test]
    fn analyze_triv_is_all_ones() {
        let r = analyze(&fixtures::triv(), "triv");
        assert_eq!(r.order, 1);
        assert_eq!(r.d_classes.len(), 1);
        assert_eq!((r.karoubi.objects, r.karoubi.morphisms), (1, 1));
        assert_eq!(
            (r.schutzenberger.objects, r.schutzenberger.morphisms),
            (1, 1)
        );
    }

    #[test]
    fn compare_triv_rb22_is_equivalent_and_good() {
        let r = compare(
            &fixtures::triv(),
            &fixtures::rb22(),
            "triv",
            "rb22",
            1_000_000,
        )
        .unwrap();
        assert!(r.equivalent);
        assert!(r.labeled_lu_isomorphic);
        match r.lift {
            Some(LiftOutcome::Lifted {
                good,
                reflects_regularity,
                reflects_j_order,
                is_equivalence,
                restriction_matches,
            }) => {
                assert!(good && reflects_regularity && reflects_j_order);
                assert!(is_equivalence && restriction_matches);
            }
            other => panic!("expected lift, got {other:?}"),
        }
    }

    #[test]
    fn compare_u1_rz2_is_distinguished() {
        let r = compare(&fixtures::u1(), &fixtures::rz2(), "u1", "rz2", 1_000_000).unwrap();
        assert!(!r.equivalent);
        assert!(!r.labeled_lu_isomorphic);
        assert!(r.distinguisher.as_deref().unwrap().contains("2 vs 1"));
    }

    #[test]
    fn compare_t2_with_itself() {
        let r = compare(&fixtures::t2(), &fixtures::t2(), "t2", "t2", 1_000_000).unwrap();
        assert!(r.equivalent);
        assert!(r.labeled_lu_isomorphic);
    }

    #[test]
    fn invariants_report_of_u1_chain() {
        let u1 = fixtures::u1();
        let r = invariants(&u1, &fixtures::u1_chain_action(), "u1");
        assert!(r.faithful);
        assert_eq!(r.poset_classes, vec![vec![0, 1], vec![1]]);
        assert_eq!(r.poset_covers, vec![(0, 1)]);
        assert_eq!(r.labeled_dq.len(), 2);
        assert_eq!(r.labeled_dq[0].rank, Some(2));
        assert_eq!(r.labeled_dq[1].rank, Some(1));
    }

    #[test]
    fn corpus_run_passes_and_is_deterministic() {
        let a = corpus_run().unwrap();
        assert!(a.all_passed);
        let b = corpus_run().unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&a).unwrap(),
            serde_json::to_string_pretty(&b).unwrap()
        );
    }

    #[test]
    fn presheaf_on_schutzcat_is_exercised_by_reports() {
        // Anchor the B_Q machinery once at report level.
        let t2 = fixtures::t2();
        let d = build_schutzcat(&t2);
        let p = crate::action::presheaf_on_schutzcat(&d, &fixtures::t2_point_action());
        p.check(&d).unwrap();
    }
}
