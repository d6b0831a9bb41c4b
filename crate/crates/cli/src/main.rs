//! `tiltcheck`: exact torsion-pair and two-term silting analysis for bound
//! quiver algebras, with certified derived-equivalence verdicts for the
//! tilted heart.
//!
//! Exit codes: 0 success / Equivalence, 2 malformed input file,
//! 3 NotEquivalence, 4 Undetermined, 5 input fails a precondition
//! (not silting, not a torsion pair), 1 other errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use tilt_core::algebra::BoundQuiverAlgebra;
use tilt_core::complex::{silting_check, ProjComplex};
use tilt_core::ext::ext_group;
use tilt_core::field::Field;
use tilt_core::indec::{enumerate_indecomposables, IndecomposableList};
use tilt_core::rep::Representation;
use tilt_core::resolution::minimal_resolution;
use tilt_core::torsion::{check_torsion_axioms, classify, torsion_from_silting};
use tilt_core::verdict::{
    heart_presentation, verdict_from_silting, verdict_from_torsion, verify_witness,
    witness_search_seeded, Conclusion, SearchOutcome, WitnessVerdict, DEFAULT_WITNESS_BUDGET,
};
use tiltcheck::{formats, report};

#[derive(Parser)]
#[command(name = "tiltcheck", version, about = "torsion pairs, two-term silting data and derived-equivalence verdicts for bound quiver algebras", long_about = None)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Algebra file
    #[arg(long)]
    algebra: PathBuf,
    /// Override the ground field: `Q` or `F<p>`
    #[arg(long)]
    field: Option<String>,
    /// Write the JSON report here as well as to stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimensions, path basis and projective dimensions of the simples
    Info {
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate the indecomposable modules (chain algebras)
    Indecomposables {
        #[command(flatten)]
        common: Common,
    },
    /// Dimension and basis of Ext^n between two modules
    Ext {
        #[command(flatten)]
        common: Common,
        /// Extra named modules usable in --from/--to
        #[arg(long)]
        modules: Option<PathBuf>,
        /// Source: an indecomposable label or a module name from --modules
        #[arg(long)]
        from: String,
        /// Target: an indecomposable label or a module name from --modules
        #[arg(long)]
        to: String,
        #[arg(long)]
        degree: usize,
    },
    /// Full silting pipeline: check the complex list, derive the torsion
    /// pair, decide the equivalence, present the heart
    Check {
        #[command(flatten)]
        common: Common,
        /// Complex file with the silting summands
        #[arg(long)]
        complex: PathBuf,
    },
    /// Check torsion axioms, classify the pair and run the sufficient
    /// criteria
    Torsion {
        #[command(flatten)]
        common: Common,
        /// Torsion pair file
        #[arg(long)]
        pair: PathBuf,
        /// Witness-search budget per module
        #[arg(long, default_value_t = DEFAULT_WITNESS_BUDGET)]
        budget: usize,
        /// Seed for randomized fallbacks
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Validate a witness sequence and evaluate its obstruction class
    VerifyWitness {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        pair: PathBuf,
        /// Witness file
        #[arg(long)]
        witness: PathBuf,
    },
    /// Search for vanishing-class witnesses per indecomposable
    WitnessSearch {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        pair: PathBuf,
        /// Restrict to one indecomposable label
        #[arg(long)]
        module: Option<String>,
        #[arg(long, default_value_t = DEFAULT_WITNESS_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Error carrying the process exit code.
struct CmdError {
    code: u8,
    msg: String,
}

impl CmdError {
    fn parse(e: impl std::fmt::Display) -> CmdError {
        CmdError { code: 2, msg: format!("{e}") }
    }

    fn precondition(e: impl std::fmt::Display) -> CmdError {
        CmdError { code: 5, msg: format!("{e}") }
    }

    fn other(e: impl std::fmt::Display) -> CmdError {
        CmdError { code: 1, msg: format!("{e}") }
    }
}

fn read_file(path: &Path) -> Result<String, CmdError> {
    fs::read_to_string(path)
        .map_err(|e| CmdError::parse(format!("{}: {e}", path.display())))
}

fn parse_field_flag(flag: &Option<String>) -> Result<Option<Field>, CmdError> {
    let Some(s) = flag else { return Ok(None) };
    if s == "Q" {
        return Ok(Some(Field::Rationals));
    }
    let digits = s.strip_prefix("Fp").or_else(|| s.strip_prefix('F'));
    if let Some(d) = digits {
        let p: u64 = d
            .parse()
            .map_err(|_| CmdError::parse(format!("invalid field `{s}`")))?;
        return Field::prime(p)
            .map(Some)
            .map_err(|e| CmdError::parse(format!("{e}")));
    }
    Err(CmdError::parse(format!("invalid field `{s}`, expected Q or F<p>")))
}

fn load_algebra(common: &Common) -> Result<BoundQuiverAlgebra, CmdError> {
    let text = read_file(&common.algebra)?;
    let field = parse_field_flag(&common.field)?;
    formats::algebra::parse_algebra(&text, field).map_err(CmdError::parse)
}

fn load_indecomposables(alg: &BoundQuiverAlgebra) -> Result<IndecomposableList, CmdError> {
    enumerate_indecomposables(alg).map_err(CmdError::precondition)
}

fn conclusion_code(c: Conclusion) -> u8 {
    match c {
        Conclusion::Equivalence => 0,
        Conclusion::NotEquivalence => 3,
        Conclusion::Undetermined => 4,
    }
}

fn emit(common: &Common, value: &Value) -> Result<(), CmdError> {
    let rendered = report::render(value);
    print!("{rendered}");
    if let Some(out) = &common.out {
        fs::write(out, rendered.as_bytes())
            .map_err(|e| CmdError::other(format!("{}: {e}", out.display())))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, CmdError> {
    match cli.cmd {
        Cmd::Info { common } => {
            let alg = load_algebra(&common)?;
            let mut proj_dims = Vec::new();
            for v in 0..alg.vertex_count() {
                let s = Representation::simple(&alg, v);
                let res = minimal_resolution(&alg, &s, 32);
                proj_dims.push((
                    alg.quiver().vertex_name(v).to_string(),
                    res.proj_dim(),
                ));
            }
            eprintln!("dim = {}, vertices = {}", alg.dim(), alg.vertex_count());
            emit(&common, &report::algebra_info_json(&alg, &proj_dims))?;
            Ok(0)
        }
        Cmd::Indecomposables { common } => {
            let alg = load_algebra(&common)?;
            let inds = load_indecomposables(&alg)?;
            eprintln!("{} indecomposables", inds.len());
            emit(&common, &report::indecomposables_json(&alg, &inds))?;
            Ok(0)
        }
        Cmd::Ext { common, modules, from, to, degree } => {
            let alg = load_algebra(&common)?;
            let mut named: Vec<(String, Representation)> = Vec::new();
            if let Some(path) = modules {
                let text = read_file(&path)?;
                named = formats::module::parse_modules(&alg, &text).map_err(CmdError::parse)?;
            }
            let lookup = |token: &str| -> Result<Representation, CmdError> {
                if let Some((_, r)) = named.iter().find(|(n, _)| n == token) {
                    return Ok(r.clone());
                }
                let inds = load_indecomposables(&alg)?;
                inds.find(token)
                    .map(|i| inds.rep(i).clone())
                    .ok_or_else(|| CmdError::parse(format!("unknown module `{token}`")))
            };
            let x = lookup(&from)?;
            let y = lookup(&to)?;
            let (dim, basis) = ext_group(&alg, &x, &y, degree);
            eprintln!("dim Ext^{degree}({from}, {to}) = {dim}");
            emit(
                &common,
                &json!({
                    "source": from,
                    "target": to,
                    "degree": degree,
                    "dimension": dim,
                    "basis": basis.iter().map(report::ext_class_json).collect::<Vec<_>>(),
                }),
            )?;
            Ok(0)
        }
        Cmd::Check { common, complex } => {
            let alg = load_algebra(&common)?;
            let inds = load_indecomposables(&alg)?;
            let text = read_file(&complex)?;
            let complexes = formats::complex::parse_complexes(&alg, &text)
                .map_err(CmdError::parse)?;
            let list: Vec<ProjComplex> =
                complexes.iter().map(|(_, c)| c.clone()).collect();
            let silting = silting_check(&alg, &list).map_err(CmdError::precondition)?;
            if !silting.is_silting() {
                let value = json!({
                    "error": "the complex list is not silting",
                    "silting": report::silting_json(&silting),
                });
                emit(&common, &value)?;
                eprintln!("not silting: {}", silting.failures.join("; "));
                return Ok(5);
            }
            let tp = torsion_from_silting(&alg, &list, &inds)
                .map_err(CmdError::precondition)?;
            let verdict =
                verdict_from_silting(&alg, &list, &inds).map_err(CmdError::precondition)?;
            let heart =
                heart_presentation(&alg, &list, &inds).map_err(CmdError::precondition)?;
            let mut value = report::verdict_json(&verdict);
            let obj = value.as_object_mut().unwrap();
            obj.insert("silting".into(), report::silting_json(&silting));
            obj.insert("torsionPair".into(), report::pair_json(&inds, &tp));
            obj.insert("heart".into(), report::heart_json(&heart, &inds));
            eprintln!(
                "conclusion: {} via {}",
                verdict.conclusion.as_str(),
                verdict.route.as_str()
            );
            emit(&common, &value)?;
            Ok(conclusion_code(verdict.conclusion))
        }
        Cmd::Torsion { common, pair, budget, seed } => {
            let _ = seed;
            let alg = load_algebra(&common)?;
            let inds = load_indecomposables(&alg)?;
            let text = read_file(&pair)?;
            let tp = formats::pair::parse_pair(&inds, &text).map_err(CmdError::parse)?;
            let axioms = check_torsion_axioms(&alg, &inds, &tp);
            if !axioms.ok {
                let value = json!({
                    "error": "not a torsion pair",
                    "axioms": report::axiom_json(&axioms),
                    "torsionPair": report::pair_json(&inds, &tp),
                });
                emit(&common, &value)?;
                eprintln!(
                    "axioms fail: {}",
                    axioms.violation.map(|v| v.to_string()).unwrap_or_default()
                );
                return Ok(5);
            }
            let verdicts = classify(&alg, &inds, &tp);
            let verdict = verdict_from_torsion(&alg, &inds, &tp, budget)
                .map_err(CmdError::precondition)?;
            let mut value = report::verdict_json(&verdict);
            let obj = value.as_object_mut().unwrap();
            obj.insert("axioms".into(), report::axiom_json(&axioms));
            obj.insert("classification".into(), report::classification_json(&verdicts));
            obj.insert("torsionPair".into(), report::pair_json(&inds, &tp));
            eprintln!(
                "conclusion: {} via {}",
                verdict.conclusion.as_str(),
                verdict.route.as_str()
            );
            emit(&common, &value)?;
            Ok(conclusion_code(verdict.conclusion))
        }
        Cmd::VerifyWitness { common, pair, witness } => {
            let alg = load_algebra(&common)?;
            let inds = load_indecomposables(&alg)?;
            let tp = formats::pair::parse_pair(&inds, &read_file(&pair)?)
                .map_err(CmdError::parse)?;
            let w = formats::witness::parse_witness(&alg, &read_file(&witness)?)
                .map_err(CmdError::parse)?;
            let value = match verify_witness(&alg, &inds, &tp, &w) {
                WitnessVerdict::Valid { vanishing, class } => {
                    eprintln!("valid witness, vanishing = {vanishing}");
                    json!({
                        "valid": true,
                        "vanishing": vanishing,
                        "class": report::ext_class_json(&class),
                    })
                }
                WitnessVerdict::Invalid { reason } => {
                    eprintln!("invalid witness: {reason}");
                    json!({"valid": false, "reason": reason})
                }
            };
            emit(&common, &value)?;
            Ok(0)
        }
        Cmd::WitnessSearch { common, pair, module, budget, seed } => {
            let alg = load_algebra(&common)?;
            let inds = load_indecomposables(&alg)?;
            let tp = formats::pair::parse_pair(&inds, &read_file(&pair)?)
                .map_err(CmdError::parse)?;
            let axioms = check_torsion_axioms(&alg, &inds, &tp);
            if !axioms.ok {
                emit(
                    &common,
                    &json!({"error": "not a torsion pair", "axioms": report::axiom_json(&axioms)}),
                )?;
                return Ok(5);
            }
            let targets: Vec<usize> = match &module {
                Some(label) => vec![inds
                    .find(label)
                    .ok_or_else(|| CmdError::parse(format!("unknown label `{label}`")))?],
                None => (0..inds.len()).collect(),
            };
            let mut results = Vec::new();
            for idx in targets {
                let outcome = witness_search_seeded(
                    &alg,
                    &inds,
                    &tp,
                    inds.rep(idx),
                    budget,
                    seed,
                );
                let entry = match outcome {
                    SearchOutcome::Found { class, tried, witness } => json!({
                        "module": inds.label(idx),
                        "found": true,
                        "tried": tried,
                        "classZero": class.is_zero(),
                        "f0Dim": witness.f0().total_dim(),
                        "f1Dim": witness.f1().total_dim(),
                        "t0Dim": witness.t0().total_dim(),
                        "t1Dim": witness.t1().total_dim(),
                    }),
                    SearchOutcome::Exhausted { tried } => json!({
                        "module": inds.label(idx),
                        "found": false,
                        "tried": tried,
                    }),
                };
                results.push(entry);
            }
            emit(
                &common,
                &json!({"budget": budget, "seed": seed, "results": results}),
            )?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
