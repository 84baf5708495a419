//! `lielab` — build, inspect, recognize, and stress-test Lie ring tables.
//!
//! Machine-readable JSON goes to stdout; human-oriented notes go to stderr.
//! Exit codes: 0 success (property true / recognized / clean run), 1 bad
//! input or an unsatisfiable request, 2 property false / not isomorphic /
//! counterexample found, 3 recognition inconclusive.

mod doc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use doc::{doc_from_ring, load_path, save_path, save_string};
use lie_lab::analysis::{recognize_ga1, recognize_sl2, RecognitionReport, Verdict};
use lie_lab::census::{census, CensusOptions};
use lie_lab::constructions::{catalog, construct};
use lie_lab::field::Field;
use lie_lab::lemmas::randomized_lemma_sweep;
use lie_lab::ring::LieRing;
use lie_lab::structure::{self, derived_series, grading, lower_central_series, simplicity};
use lie_lab::Subspace;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lielab",
    version,
    about = "Exact-arithmetic laboratory for finite-dimensional Lie rings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named construction over a field and emit its document.
    Build(BuildArgs),
    /// Check a property of a ring document.
    Check(CheckArgs),
    /// Decompose a ring into eigenspaces of one element's adjoint action.
    Eigen(EigenArgs),
    /// Decide whether a document is isomorphic to a model algebra.
    Recognize(RecognizeArgs),
    /// Run the lemma battery on one document or on the built-in catalog.
    Lemmas(LemmasArgs),
    /// Enumerate all dimension-3 bracket tables over F_p.
    Census(CensusArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Construction name: sl2, ga1, ga1-twisted, heisenberg, witt,
    /// chevalley:<label> (A1..A4, B2, B3, C3, D4, G2), abelian:<n>.
    name: String,
    /// Field: "p=5", "p=5,k=2", or "rational".
    #[arg(long)]
    field: String,
    /// Write the document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Property {
    Jacobi,
    Soluble,
    Nilpotent,
    Simple,
    Center,
    Series,
}

#[derive(Args)]
struct CheckArgs {
    /// Path to a ring document.
    path: PathBuf,
    /// Property to check.
    which: Property,
    /// Seed for randomized fallbacks (defaults to $LIE_LAB_SEED, then 0).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct EigenArgs {
    /// Path to a ring document.
    path: PathBuf,
    /// The element whose adjoint action is decomposed, as a JSON array in
    /// the document coefficient convention, e.g. "[1,0,0]".
    #[arg(long)]
    element: String,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Target {
    Sl2,
    Ga1,
}

#[derive(Args)]
struct RecognizeArgs {
    /// Path to a ring document.
    path: PathBuf,
    /// Model algebra to compare against.
    target: Target,
    /// Seed for the regular-element search (defaults to $LIE_LAB_SEED, then 0).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct LemmasArgs {
    /// Path to a single ring document to sweep.
    #[arg(conflicts_with = "catalog", required_unless_present = "catalog")]
    path: Option<PathBuf>,
    /// Sweep the built-in construction catalog instead of one document.
    #[arg(long)]
    catalog: bool,
    /// Number of randomized instances to draw.
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// Sweep seed (defaults to $LIE_LAB_SEED, then 0).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct CensusArgs {
    /// Census dimension; only 3 is within the enumeration budget.
    #[arg(long, default_value_t = 3)]
    dim: usize,
    /// Field characteristic.
    #[arg(long, default_value_t = 5)]
    p: u64,
    /// Size of the worker thread pool (defaults to one per CPU).
    #[arg(long)]
    jobs: Option<usize>,
    /// Seed forwarded to the recognizer (defaults to $LIE_LAB_SEED, then 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Override the table-count ceiling.
    #[arg(long)]
    max_tables: Option<u64>,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run() -> Result<u8> {
    match Cli::parse().cmd {
        Cmd::Build(args) => cmd_build(args),
        Cmd::Check(args) => cmd_check(args),
        Cmd::Eigen(args) => cmd_eigen(args),
        Cmd::Recognize(args) => cmd_recognize(args),
        Cmd::Lemmas(args) => cmd_lemmas(args),
        Cmd::Census(args) => cmd_census(args),
    }
}

/// Seed precedence: explicit flag, then $LIE_LAB_SEED, then 0.
fn resolve_seed(explicit: Option<u64>) -> Result<u64> {
    if let Some(s) = explicit {
        return Ok(s);
    }
    match std::env::var("LIE_LAB_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| anyhow!("LIE_LAB_SEED must be an unsigned integer, got {text:?}")),
        Err(_) => Ok(0),
    }
}

/// Parses "p=5", "p=5,k=2", or "rational".
fn parse_field(spec: &str) -> Result<Field> {
    let spec = spec.trim();
    if matches!(spec.to_ascii_lowercase().as_str(), "rational" | "rationals" | "q") {
        return Ok(Field::rationals());
    }
    let mut p: Option<u64> = None;
    let mut k: Option<usize> = None;
    for part in spec.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| anyhow!("bad field spec {spec:?}; try \"p=5\", \"p=5,k=2\", or \"rational\""))?;
        match key.trim() {
            "p" => p = Some(value.trim().parse().context("p must be a positive integer")?),
            "k" => k = Some(value.trim().parse().context("k must be a positive integer")?),
            other => bail!("unknown field parameter {other:?}"),
        }
    }
    let p = p.ok_or_else(|| anyhow!("field spec {spec:?} is missing p"))?;
    Ok(match k {
        None | Some(1) => Field::prime(p)?,
        Some(k) => Field::extension(p, k)?,
    })
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn cmd_build(args: BuildArgs) -> Result<u8> {
    let field = parse_field(&args.field)?;
    let ring = construct(&args.name, &field)?;
    let report = ring.verify_jacobi();
    if !report.holds {
        bail!(
            "construction {} over {} violates the Jacobi identity; refusing to write",
            args.name,
            field.render()
        );
    }
    let mut metadata = BTreeMap::new();
    metadata.insert("construction".to_string(), Value::from(args.name.clone()));
    let document = doc_from_ring(&ring, metadata);
    match args.out {
        Some(path) => {
            save_path(&path, &document)?;
            eprintln!(
                "wrote {} over {} (dim {}) to {}",
                args.name,
                field.render(),
                ring.dim(),
                path.display()
            );
        }
        None => print!("{}", save_string(&document)),
    }
    Ok(0)
}

fn cmd_check(args: CheckArgs) -> Result<u8> {
    let (_, ring) = load_path(&args.path)?;
    let full = Subspace::full(ring.field(), ring.dim());
    let (value, report): (Option<bool>, Value) = match args.which {
        Property::Jacobi => {
            let rep = ring.verify_jacobi();
            let failures: Vec<Value> = rep
                .failures
                .iter()
                .map(|(i, j, k, defect)| {
                    json!({
                        "triple": [i + 1, j + 1, k + 1],
                        "defect": defect.iter().map(doc::encode_scalar).collect::<Vec<_>>(),
                    })
                })
                .collect();
            (Some(rep.holds), json!({ "which": "jacobi", "value": rep.holds, "failures": failures }))
        }
        Property::Soluble => {
            let v = structure::is_soluble(&ring, &full)?;
            (Some(v), json!({ "which": "soluble", "value": v }))
        }
        Property::Nilpotent => {
            let v = structure::is_nilpotent(&ring, &full)?;
            (Some(v), json!({ "which": "nilpotent", "value": v }))
        }
        Property::Simple => {
            let seed = resolve_seed(args.seed)?;
            let rep = simplicity(&ring, seed);
            (
                Some(rep.simple),
                json!({
                    "which": "simple",
                    "value": rep.simple,
                    "certified": rep.certified,
                    "points_checked": rep.points_checked,
                    "witness_ideal_dim": rep.witness.as_ref().map(|w| w.dim()),
                    "seed": seed,
                }),
            )
        }
        Property::Center => {
            let z = structure::center(&ring);
            let basis: Vec<Vec<Value>> = z
                .basis_rows()
                .map(|row| row.iter().map(doc::encode_scalar).collect())
                .collect();
            (None, json!({ "which": "center", "dim": z.dim(), "basis": basis }))
        }
        Property::Series => {
            let derived: Vec<usize> =
                derived_series(&ring, &full)?.iter().map(|s| s.dim()).collect();
            let lower: Vec<usize> =
                lower_central_series(&ring, &full)?.iter().map(|s| s.dim()).collect();
            (
                None,
                json!({
                    "which": "series",
                    "derived_dims": derived,
                    "lower_central_dims": lower,
                }),
            )
        }
    };
    emit(&report);
    match value {
        Some(true) | None => Ok(0),
        Some(false) => Ok(2),
    }
}

fn cmd_eigen(args: EigenArgs) -> Result<u8> {
    let (_, ring) = load_path(&args.path)?;
    if ring.field().characteristic() == 0 {
        bail!("eigenspace decompositions are defined over positive characteristic only");
    }
    let parsed: Value =
        serde_json::from_str(&args.element).context("--element must be a JSON array")?;
    let entries = parsed
        .as_array()
        .ok_or_else(|| anyhow!("--element must be a JSON array of {} coefficients", ring.dim()))?;
    if entries.len() != ring.dim() {
        bail!("--element needs {} coefficients, got {}", ring.dim(), entries.len());
    }
    let element: Vec<_> = entries
        .iter()
        .map(|e| doc::decode_scalar(ring.field(), e))
        .collect::<Result<_>>()?;
    let report = grading(&ring, &element)?;
    let components: Vec<Value> = report
        .components
        .iter()
        .map(|(k, space)| json!({ "eigenvalue": k, "dim": space.dim() }))
        .collect();
    let full_sum = report.residual.dim() == 0;
    let human: Vec<String> = report
        .components
        .iter()
        .map(|(k, space)| format!("E_{k} dim {}", space.dim()))
        .collect();
    eprintln!(
        "{}; sum = {}",
        if human.is_empty() { "no nonzero eigenspaces".to_string() } else { human.join(", ") },
        if full_sum { "full" } else { "proper" }
    );
    emit(&json!({
        "element": entries,
        "components": components,
        "sum": if full_sum { "full" } else { "proper" },
        "residual_dim": report.residual.dim(),
    }));
    Ok(0)
}

fn recognition_to_json(rep: &RecognitionReport, seed: u64) -> Value {
    let verdict = match rep.verdict {
        Verdict::Recognized => "recognized",
        Verdict::NotIsomorphic => "not_isomorphic",
        Verdict::Inconclusive => "inconclusive",
    };
    let isomorphism: Option<Vec<Vec<Value>>> = rep.isomorphism.as_ref().map(|m| {
        (0..m.rows())
            .map(|r| m.row(r).iter().map(doc::encode_scalar).collect())
            .collect()
    });
    json!({
        "target": rep.target_label,
        "verdict": verdict,
        "isomorphism": isomorphism,
        "certificate": rep.certificate,
        "failure_reason": rep.failure_reason,
        "seed": seed,
    })
}

fn cmd_recognize(args: RecognizeArgs) -> Result<u8> {
    let (_, ring) = load_path(&args.path)?;
    let seed = resolve_seed(args.seed)?;
    let report = match args.target {
        Target::Sl2 => recognize_sl2(&ring, seed)?,
        Target::Ga1 => recognize_ga1(&ring)?,
    };
    emit(&recognition_to_json(&report, seed));
    match report.verdict {
        Verdict::Recognized => {
            eprintln!("recognized as {}", report.target_label);
            Ok(0)
        }
        Verdict::NotIsomorphic => {
            eprintln!(
                "not isomorphic to {}: {}",
                report.target_label,
                report.failure_reason.as_deref().unwrap_or("obstruction found")
            );
            Ok(2)
        }
        Verdict::Inconclusive => {
            eprintln!(
                "inconclusive: {}",
                report.failure_reason.as_deref().unwrap_or("search budget exhausted")
            );
            Ok(3)
        }
    }
}

fn cmd_lemmas(args: LemmasArgs) -> Result<u8> {
    let seed = resolve_seed(args.seed)?;
    let entries: Vec<(String, LieRing)> = if args.catalog {
        catalog()
    } else {
        let path = args.path.as_ref().expect("clap enforces path xor --catalog");
        let (_, ring) = load_path(path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "input".to_string());
        vec![(name, ring)]
    };
    let verdicts = randomized_lemma_sweep(&entries, args.trials, seed);
    let clean = verdicts.iter().all(|v| v.holds);
    let vacuous = verdicts.iter().filter(|v| !v.hypothesis_met).count();
    eprintln!(
        "{} verdicts over {} ring(s), {} vacuous, {}",
        verdicts.len(),
        entries.len(),
        vacuous,
        if clean { "no counterexamples" } else { "COUNTEREXAMPLE FOUND" }
    );
    emit(&json!({
        "seed": seed,
        "trials": args.trials,
        "verdicts": verdicts,
    }));
    Ok(if clean { 0 } else { 2 })
}

fn cmd_census(args: CensusArgs) -> Result<u8> {
    let seed = resolve_seed(args.seed)?;
    let mut options = CensusOptions { seed, ..CensusOptions::default() };
    if let Some(m) = args.max_tables {
        options.max_tables = m;
    }
    let result = match args.jobs {
        Some(jobs) if jobs > 0 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .context("cannot build the worker pool")?;
            pool.install(|| census(args.dim, args.p, options))?
        }
        _ => census(args.dim, args.p, options)?,
    };
    eprintln!(
        "census dim {} over {}: {} tables, {} satisfy Jacobi, {} simple, {} recognized as sl2",
        result.dimension,
        result.field,
        result.total_tables,
        result.jacobi_count,
        result.simple_count,
        result.recognized_sl2_count
    );
    let mut value = serde_json::to_value(&result).expect("census results serialize");
    value
        .as_object_mut()
        .expect("census result is an object")
        .insert("seed".to_string(), Value::from(seed));
    emit(&value);
    Ok(if result.unrecognized.is_empty() { 0 } else { 2 })
}
