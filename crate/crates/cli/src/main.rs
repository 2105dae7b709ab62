//! `hodge-matroid`: matroid invariants, Chow rings and Hodge-theoretic
//! checks from the command line.
//!
//! Every subcommand prints a JSON report (or a table with `--pretty`) and
//! exits with 0 when all checks pass, 1 when a check fails and 2 when the
//! input cannot be read.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hodge_matroid::corpus;
use hodge_matroid::descriptor::Descriptor;
use hodge_matroid::fan::bergman_fan;
use hodge_matroid::hodge::SubmodularWitness;
use hodge_matroid::report::Report;
use hodge_matroid::subset::Subset;
use hodge_matroid::suite;
use hodge_matroid::{Error, Matroid, Rational};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hodge-matroid", version, about = "Exact matroid invariants and Hodge theory of matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Human-readable table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Axioms, characteristic and Tutte polynomials, f-vector, Whitney numbers.
    Invariants {
        /// Descriptor file or inline form (named:NAME, uniform:R,M, graph:@FILE).
        matroid: String,
        #[command(flatten)]
        output: Output,
    },
    /// Chow ring dimensions, Poincaré duality and the degree map.
    Chow {
        matroid: String,
        #[command(flatten)]
        output: Output,
    },
    /// Hard Lefschetz and Hodge-Riemann for an ample class.
    HodgeCheck {
        matroid: String,
        /// Only check this degree.
        #[arg(long)]
        k: Option<usize>,
        /// JSON object from decimal subset masks to rationals "p/q"; absent
        /// masks count as 0.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Bergman fan: balancing and containment in the permutohedral fan.
    Fan {
        matroid: String,
        #[command(flatten)]
        output: Output,
    },
    /// Run every check on the built-in corpus.
    VerifyAll {
        /// Only entries whose name contains this (case-insensitive).
        #[arg(long)]
        filter: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// List the built-in corpus.
    Corpus {
        #[command(flatten)]
        output: Output,
    },
}

/// Problems with the input, as opposed to failed checks.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

fn load(spec: &str) -> Result<Matroid, InputError> {
    Ok(Descriptor::resolve(spec)?.build()?)
}

fn load_witness(path: &PathBuf, size: usize) -> Result<SubmodularWitness, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    let raw: HashMap<String, Value> = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("parse error at line {}, column {}: {e}", e.line(), e.column())))?;
    let mut values = HashMap::new();
    for (key, value) in raw {
        let mask: u64 = key.parse().map_err(|_| InputError(format!("witness key {key:?} is not a decimal mask")))?;
        let text = match &value {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            other => return Err(InputError(format!("witness value {other} for {key} is not a rational"))),
        };
        let q: Rational = text.parse().map_err(|e| InputError(format!("witness value for {key}: {e}")))?;
        if mask >> size != 0 {
            return Err(InputError(format!("witness key {key} is outside a ground set of size {size}")));
        }
        values.insert(mask, q);
    }
    Ok(SubmodularWitness::from_fn(size, |s: Subset| values.get(&s.bits()).cloned().unwrap_or_default())?)
}

fn emit(document: &Value, report: &Report, output: &Output) -> Result<(), InputError> {
    let text = if output.pretty {
        report.render_table()
    } else {
        serde_json::to_string_pretty(document).expect("reports serialize") + "\n"
    };
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|e| InputError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, InputError> {
    let (document, report, output) = match cli.command {
        Command::Invariants { matroid, output } => {
            let m = load(&matroid)?;
            let r = suite::invariants_report(&m, None, false);
            (r.to_json(), r, output)
        }
        Command::Chow { matroid, output } => {
            let m = load(&matroid)?;
            let r = suite::chow_report(&m, None, None);
            (r.to_json(), r, output)
        }
        Command::HodgeCheck { matroid, k, witness, output } => {
            let m = load(&matroid)?;
            let witness = witness.map(|p| load_witness(&p, m.size())).transpose()?;
            let r = suite::hodge_report(&m, k, witness, None);
            (r.to_json(), r, output)
        }
        Command::Fan { matroid, output } => {
            let m = load(&matroid)?;
            let r = suite::fan_report(&m);
            let complete = r.find(&["shape"]).and_then(|s| s.witness.as_ref()).is_some_and(|w| w["complete"] == json!(true));
            let geometry = if complete { bergman_fan(&m).map(|f| f.to_json()).unwrap_or(Value::Null) } else { Value::Null };
            (json!({"report": r.to_json(), "fan": geometry}), r, output)
        }
        Command::VerifyAll { filter, output } => {
            let entries = corpus::filtered(filter.as_deref());
            if entries.is_empty() {
                return Err(InputError(format!("no corpus entry matches {:?}", filter.unwrap_or_default())));
            }
            let r = suite::verify_all(&entries);
            if output.pretty {
                eprintln!("finished in {:.1}s", r.elapsed.map_or(0.0, |d| d.as_secs_f64()));
            }
            (r.to_json(), r, output)
        }
        Command::Corpus { output } => {
            let entries = corpus::corpus();
            let list: Vec<Value> = entries
                .iter()
                .map(|e| json!({"name": e.name, "descriptor": serde_json::to_value(&e.descriptor).expect("serializes"), "representable": e.representable}))
                .collect();
            let r = Report::group("corpus", entries.iter().map(|e| Report::check(e.name.clone(), true, json!(e.descriptor.to_string()))).collect());
            (Value::Array(list), r, output)
        }
    };
    emit(&document, &report, &output)?;
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("HODGE_MATROID_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
