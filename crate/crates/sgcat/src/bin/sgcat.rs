//! Thin command-line front end. All algebra lives in the library; this
//! binary parses files, dispatches, and renders reports.
//!
//! Exit codes: 2 parse error, 3 validation error, 4 search budget
//! exceeded, 5 unknown element selector.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sgcat::action::SAction;
use sgcat::cat::{build_karoubi, build_schutzcat, SemigroupCategories};
use sgcat::error::Error;
use sgcat::functor::{is_equivalence, DEFAULT_SEARCH_BUDGET};
use sgcat::greens::d_class_preorder;
use sgcat::io::{dump_category, ActionFile, FunctorFile, SemigroupFile, SemigroupRef};
use sgcat::lift::{
    is_good_functor, lift_functor_canonical, reflects_j_order_on_objects, reflects_regularity,
};
use sgcat::report;
use sgcat::semigroup::Semigroup;
use sgcat::{dot, fixtures};

#[derive(Parser)]
#[command(
    name = "sgcat",
    about = "Karoubi envelopes, Schützenberger categories and invariants of finite semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write a DOT rendering to this path.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Summary report: idempotents, Green's structure, category sizes.
    Analyze {
        /// Semigroup file (JSON) or fixture name.
        file: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// The Karoubi envelope K(S).
    Karoubi {
        file: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// The Schützenberger category D(S).
    Dcat {
        file: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Schützenberger groups (left and right) of one H-class.
    Schutz {
        file: String,
        /// Element selector: index or display name.
        #[arg(long)]
        element: String,
        #[arg(long)]
        json: bool,
    },
    /// The local divisor at an element.
    LocalDivisor {
        file: String,
        #[arg(long)]
        element: String,
        #[arg(long)]
        json: bool,
    },
    /// The ordered set of D-classes.
    Dclasses {
        file: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Decide K(S) ≃ K(T); on success lift to the D-level and report.
    Compare {
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
        /// Search node budget.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Write the found Karoubi functor to this path (JSON).
        #[arg(long)]
        emit_functor: Option<PathBuf>,
    },
    /// Validate a functor file K(S) → K(T) and lift it to D(S) → D(T).
    Lift {
        /// Functor file (JSON).
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Invariants of a semigroup action: P(Q) and labeled D-class orders.
    Invariants {
        semigroup: String,
        action: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Run the structural property suite over the fixture corpus.
    CorpusRun {
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

fn parse_error(msg: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: msg.into(),
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::SearchBudgetExceeded { .. } => 4,
            Error::UnknownElement(_) => 5,
            _ => 3,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn load_semigroup(path: &str) -> Result<Semigroup, CliError> {
    // A readable file must parse as JSON; otherwise fall back to
    // fixture-name resolution.
    if std::path::Path::new(path).is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| parse_error(format!("{path}: {e}")))?;
        let file: SemigroupFile =
            serde_json::from_str(&text).map_err(|e| parse_error(format!("{path}: {e}")))?;
        return file.build().map_err(CliError::from);
    }
    fixtures::load(path).map_err(|_| parse_error(format!("no such file or fixture: {path}")))
}

fn load_action(path: &str) -> Result<(Semigroup, SAction), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_error(format!("{path}: {e}")))?;
    let file: ActionFile =
        serde_json::from_str(&text).map_err(|e| parse_error(format!("{path}: {e}")))?;
    file.build().map_err(CliError::from)
}

fn write_dot(path: &PathBuf, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content).map_err(|e| parse_error(format!("{}: {e}", path.display())))
}

fn emit_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| parse_error(format!("serialization: {e}")))?;
    println!("{text}");
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { file, out } => {
            let sg = load_semigroup(&file)?;
            let r = report::analyze(&sg, &file);
            if let Some(path) = &out.dot {
                write_dot(path, &dot::dclass_hasse(&d_class_preorder(&sg)))?;
            }
            if out.json {
                emit_json(&r)?;
            } else {
                print!("{}", r.render_text());
            }
            Ok(())
        }
        Command::Karoubi { file, out } => {
            let sg = load_semigroup(&file)?;
            let k = build_karoubi(&sg);
            if sg.idempotents().is_empty() {
                eprintln!("warning: no idempotents; the karoubi envelope is empty");
            }
            if let Some(path) = &out.dot {
                write_dot(path, &dot::category(&k))?;
            }
            if out.json {
                emit_json(&dump_category(&k))?;
            } else {
                println!(
                    "karoubi envelope of {file}: {} objects, {} morphisms",
                    k.object_count(),
                    k.morphism_count()
                );
                for ob in k.objects() {
                    println!("  object {ob}: {}", k.object_name(ob));
                }
            }
            Ok(())
        }
        Command::Dcat { file, out } => {
            let sg = load_semigroup(&file)?;
            let d = build_schutzcat(&sg);
            if let Some(path) = &out.dot {
                write_dot(path, &dot::category(&d))?;
            }
            if out.json {
                emit_json(&dump_category(&d))?;
            } else {
                println!(
                    "schutzenberger category of {file}: {} objects, {} morphisms",
                    d.object_count(),
                    d.morphism_count()
                );
            }
            Ok(())
        }
        Command::Schutz {
            file,
            element,
            json,
        } => {
            let sg = load_semigroup(&file)?;
            let s = sg.element_by_selector(&element)?;
            let r = report::schutz(&sg, s, &file)?;
            if json {
                emit_json(&r)?;
            } else {
                print!("{}", r.render_text());
            }
            Ok(())
        }
        Command::LocalDivisor {
            file,
            element,
            json,
        } => {
            let sg = load_semigroup(&file)?;
            let s = sg.element_by_selector(&element)?;
            let r = report::divisor(&sg, s, &file)?;
            if json {
                emit_json(&r)?;
            } else {
                print!("{}", r.render_text());
            }
            Ok(())
        }
        Command::Dclasses { file, out } => {
            let sg = load_semigroup(&file)?;
            let p = d_class_preorder(&sg);
            if let Some(path) = &out.dot {
                write_dot(path, &dot::dclass_hasse(&p))?;
            }
            if out.json {
                let r = report::analyze(&sg, &file);
                emit_json(&r)?;
            } else {
                for (c, cls) in p.classes.iter().enumerate() {
                    let members = cls
                        .iter()
                        .map(|&s| sg.name(s))
                        .collect::<Vec<_>>()
                        .join(" ");
                    println!(
                        "D{c}: {{{members}}} regular={}",
                        if p.regular[c] { 1 } else { 0 }
                    );
                }
                for (a, b) in p.order.covers() {
                    println!("D{a} < D{b}");
                }
            }
            Ok(())
        }
        Command::Compare {
            left,
            right,
            json,
            budget,
            emit_functor,
        } => {
            let l = load_semigroup(&left)?;
            let r = load_semigroup(&right)?;
            let rep = report::compare(&l, &r, &left, &right, budget)?;
            if let Some(path) = emit_functor {
                let kl = build_karoubi(&l);
                let kr = build_karoubi(&r);
                if let Some(f) = sgcat::functor::find_equivalence(&kl, &kr, budget)? {
                    // Fixture names and paths stay references; only ad-hoc
                    // input would need inlining, and analyze/compare read
                    // paths anyway.
                    let file = FunctorFile {
                        source: SemigroupRef::Path(left.clone()),
                        target: SemigroupRef::Path(right.clone()),
                        object_map: f.ob_map.clone(),
                        morphism_map: f.mor_map.clone(),
                    };
                    let text = serde_json::to_string_pretty(&file)
                        .map_err(|e| parse_error(format!("serialization: {e}")))?;
                    std::fs::write(&path, text)
                        .map_err(|e| parse_error(format!("{}: {e}", path.display())))?;
                } else {
                    eprintln!("note: no equivalence to emit");
                }
            }
            if json {
                emit_json(&rep)?;
            } else {
                print!("{}", rep.render_text());
            }
            Ok(())
        }
        Command::Lift { file, json } => {
            let text =
                std::fs::read_to_string(&file).map_err(|e| parse_error(format!("{file}: {e}")))?;
            let ff: FunctorFile =
                serde_json::from_str(&text).map_err(|e| parse_error(format!("{file}: {e}")))?;
            let src = SemigroupCategories::build(ff.source.resolve()?);
            let dst = SemigroupCategories::build(ff.target.resolve()?);
            let f = ff.functor();
            let lifted = lift_functor_canonical(&src, &dst, &f)?;
            let good = is_good_functor(&src, &dst, &lifted.functor);
            let outcome = report::LiftOutcome::Lifted {
                restriction_matches: lifted.restriction_matches,
                good: good.good,
                reflects_regularity: reflects_regularity(&src, &dst, &lifted.functor),
                reflects_j_order: reflects_j_order_on_objects(&src, &dst, &lifted.functor),
                is_equivalence: is_equivalence(&src.schutzcat, &dst.schutzcat, &lifted.functor),
            };
            if json {
                emit_json(&outcome)?;
            } else {
                match &outcome {
                    report::LiftOutcome::Lifted {
                        restriction_matches,
                        good,
                        reflects_regularity,
                        reflects_j_order,
                        is_equivalence,
                    } => {
                        println!("lifted functor D(S) -> D(T):");
                        println!("  restricts to the given functor: {restriction_matches}");
                        println!("  good: {good}");
                        println!("  equivalence: {is_equivalence}");
                        println!("  reflects regularity: {reflects_regularity}");
                        println!("  reflects j-order on objects: {reflects_j_order}");
                    }
                    report::LiftOutcome::Skipped { reason } => {
                        println!("lift skipped: {reason}");
                    }
                }
            }
            Ok(())
        }
        Command::Invariants {
            semigroup,
            action,
            out,
        } => {
            let sg = load_semigroup(&semigroup)?;
            let (sg_from_action, act) = if std::path::Path::new(&action).is_file() {
                load_action(&action)?
            } else {
                return Err(parse_error(format!("no such action file: {action}")));
            };
            if sg_from_action != sg {
                return Err(CliError {
                    code: 3,
                    message: "action file references a different semigroup".into(),
                });
            }
            let r = report::invariants(&sg, &act, &semigroup);
            if let Some(path) = &out.dot {
                let poset = sgcat::action::action_poset(&sg, &act);
                let mut content = dot::action_poset(&poset);
                content.push_str(&dot::labeled_preorder(&sgcat::labeled::labeled_dq(
                    &sg, &act,
                )));
                write_dot(path, &content)?;
            }
            if out.json {
                emit_json(&r)?;
            } else {
                print!("{}", r.render_text());
            }
            Ok(())
        }
        Command::CorpusRun { json } => {
            let r = report::corpus_run()?;
            if json {
                emit_json(&r)?;
            } else {
                print!("{}", r.render_text());
            }
            if !r.all_passed {
                return Err(CliError {
                    code: 3,
                    message: "corpus checks failed".into(),
                });
            }
            Ok(())
        }
    }
}
