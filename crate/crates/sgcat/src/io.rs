//! JSON file formats: semigroups (table or transformation generators),
//! actions, functors between Karoubi envelopes, and category dumps.

use serde::{Deserialize, Serialize};

use crate::action::{validate_action, SAction};
use crate::cat::{FiniteCategory, MorData, Payload};
use crate::error::{Error, Result};
use crate::functor::Functor;
use crate::semigroup::{generate_from_transformations, Semigroup, Transformation};

/// A semigroup file: either an explicit table
/// `{ "order": n, "table": [[...]], "names": [...]? }` or a generator
/// form `{ "degree": k, "generators": [[images...], ...] }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SemigroupFile {
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Generators {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl SemigroupFile {
    pub fn build(self) -> Result<Semigroup> {
        match self {
            SemigroupFile::Table {
                order,
                table,
                names,
            } => {
                if table.len() != order {
                    return Err(Error::NotSquare {
                        row: 0,
                        len: table.len(),
                        order,
                    });
                }
                Semigroup::from_table(table, names)
            }
            SemigroupFile::Generators { degree, generators } => {
                let gens = generators
                    .into_iter()
                    .map(|imgs| {
                        if imgs.len() != degree {
                            return Err(Error::DegreeMismatch {
                                index: 0,
                                expected: degree,
                                found: imgs.len(),
                            });
                        }
                        Transformation::new(imgs)
                    })
                    .collect::<Result<Vec<_>>>()?;
                generate_from_transformations(&gens).map(|(sg, _)| sg)
            }
        }
    }

    pub fn from_semigroup(sg: &Semigroup) -> SemigroupFile {
        let order = sg.order();
        let table = (0..order)
            .map(|i| (0..order).map(|j| sg.mul(i, j)).collect())
            .collect();
        SemigroupFile::Table {
            order,
            table,
            names: sg.names().map(|ns| ns.to_vec()),
        }
    }
}

/// Either a path to a semigroup file or the file content inline.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SemigroupRef {
    Path(String),
    Inline(SemigroupFile),
}

impl SemigroupRef {
    /// Resolves the reference; `Path` entries may also name a fixture.
    pub fn resolve(&self) -> Result<Semigroup> {
        match self {
            SemigroupRef::Inline(file) => file.clone().build(),
            SemigroupRef::Path(path) => load_semigroup_path(path),
        }
    }
}

/// Loads a semigroup from a file path, falling back to fixture names.
pub fn load_semigroup_path(path: &str) -> Result<Semigroup> {
    match std::fs::read_to_string(path) {
        Ok(text) => {
            let file: SemigroupFile =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
            file.build()
        }
        Err(_) => crate::fixtures::load(path),
    }
}

/// An action file: `{ "semigroup": <path or inline>, "qsize": m,
/// "table": [[q·s ...], ...] }` with one row per state.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionFile {
    pub semigroup: SemigroupRef,
    pub qsize: usize,
    pub table: Vec<Vec<usize>>,
}

impl ActionFile {
    pub fn build(&self) -> Result<(Semigroup, SAction)> {
        let sg = self.semigroup.resolve()?;
        if self.table.len() != self.qsize {
            return Err(Error::NotSquare {
                row: 0,
                len: self.table.len(),
                order: self.qsize,
            });
        }
        let action = validate_action(&sg, self.table.clone())?;
        Ok((sg, action))
    }
}

/// A functor between Karoubi envelopes, stored by index against the
/// deterministic build order of `build_karoubi` on both sides.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctorFile {
    pub source: SemigroupRef,
    pub target: SemigroupRef,
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

impl FunctorFile {
    pub fn functor(&self) -> Functor {
        Functor {
            ob_map: self.object_map.clone(),
            mor_map: self.morphism_map.clone(),
        }
    }
}

/// JSON dump of a finite category: objects and morphism triples. The
/// composition table is omitted and recomputed on load.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CategoryDump {
    pub objects: Vec<String>,
    pub object_tags: Vec<usize>,
    pub morphisms: Vec<MorphismDump>,
    pub identities: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorphismDump {
    pub dom: usize,
    pub cod: usize,
    pub triple: (usize, usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CategoryKind {
    Karoubi,
    Schutzenberger,
}

pub fn dump_category(c: &FiniteCategory) -> CategoryDump {
    CategoryDump {
        objects: c.objects().map(|o| c.object_name(o).to_string()).collect(),
        object_tags: c.objects().map(|o| c.object_tag(o)).collect(),
        morphisms: c
            .morphisms()
            .iter()
            .map(|m| {
                let Payload::Triple(a, u, b) = m.payload else {
                    panic!("only triple categories are dumped")
                };
                MorphismDump {
                    dom: m.dom,
                    cod: m.cod,
                    triple: (a, u, b),
                }
            })
            .collect(),
        identities: c.objects().map(|o| c.identity_at(o)).collect(),
    }
}

/// Rebuilds a dumped category over its semigroup, recomputing the
/// composition with the defining rule of the given kind.
pub fn load_category(
    sg: &Semigroup,
    dump: &CategoryDump,
    kind: CategoryKind,
) -> Result<FiniteCategory> {
    let morphisms: Vec<MorData> = dump
        .morphisms
        .iter()
        .map(|m| MorData {
            dom: m.dom,
            cod: m.cod,
            payload: Payload::Triple(m.triple.0, m.triple.1, m.triple.2),
        })
        .collect();
    FiniteCategory::assemble(
        dump.objects.clone(),
        dump.object_tags.clone(),
        morphisms,
        dump.identities.clone(),
        |m1, m2| {
            let (Payload::Triple(a, u, b), Payload::Triple(_, v, r)) = (m1.payload, m2.payload)
            else {
                unreachable!()
            };
            match kind {
                CategoryKind::Karoubi => Payload::Triple(a, sg.mul(u, v), r),
                CategoryKind::Schutzenberger => {
                    let x = crate::localstruct::least_left_witness(sg, b, u)
                        .expect("u ∈ S¹b in a valid dump");
                    Payload::Triple(a, sg.mul_one(x, Some(v)).unwrap(), r)
                }
            }
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{build_karoubi, build_schutzcat, categories_payload_equal};
    use crate::fixtures;

    #[test]
    fn table_file_round_trip() {
        let t2 = fixtures::t2();
        let file = SemigroupFile::from_semigroup(&t2);
        let text = serde_json::to_string(&file).unwrap();
        let back: SemigroupFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.build().unwrap(), t2);
    }

    #[test]
    fn generator_file_builds_t2() {
        let text = r#"{ "degree": 2, "generators": [[1, 0], [0, 0]] }"#;
        let file: SemigroupFile = serde_json::from_str(text).unwrap();
        let sg = file.build().unwrap();
        assert_eq!(sg.order(), 4);
    }

    #[test]
    fn action_file_with_inline_semigroup() {
        let text = r#"{
            "semigroup": { "order": 2, "table": [[0, 1], [1, 1]] },
            "qsize": 2,
            "table": [[0, 1], [1, 1]]
        }"#;
        let file: ActionFile = serde_json::from_str(text).unwrap();
        let (sg, action) = file.build().unwrap();
        assert_eq!(sg.order(), 2);
        assert_eq!(action.states(), 2);
    }

    #[test]
    fn category_dump_round_trip() {
        let t2 = fixtures::t2();
        for (cat, kind) in [
            (build_karoubi(&t2), CategoryKind::Karoubi),
            (build_schutzcat(&t2), CategoryKind::Schutzenberger),
        ] {
            let dump = dump_category(&cat);
            let text = serde_json::to_string(&dump).unwrap();
            let parsed: CategoryDump = serde_json::from_str(&text).unwrap();
            let loaded = load_category(&t2, &parsed, kind).unwrap();
            assert!(categories_payload_equal(&cat, &loaded));
        }
    }
}
