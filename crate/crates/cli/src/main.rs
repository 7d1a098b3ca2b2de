//! `maximin`: batch front end for lattice, spectrum, duality and
//! representation checks. Every verb writes one JSON report (sorted keys)
//! to `--out` or stdout.
//!
//! Exit codes: 0 success, 1 a check failed (details in the report),
//! 2 unreadable or malformed input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use log::{debug, info, LevelFilter};
use maximin_core::duality::roundtrip_check;
use maximin_core::fuzz::run_fuzz;
use maximin_core::io::{
    certificate_to_json, parse_lattice, parse_lattice_tables, parse_preference,
    parse_representation, representation_to_json, spectrum_to_json, to_canonical_string,
    FormatError,
};
use maximin_core::representation::{factor_check, synthesize, verify_representation};
use maximin_core::{
    check_axioms, validate_laws, FactorOutcome, Lattice, RepresentationError, SpectralSpace,
    WeakOrder,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "maximin", version, about = "Finite distributive lattices and maximin preferences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the lattice laws of a lattice file.
    Validate {
        #[command(flatten)]
        lattice: LatticeArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Dump the prime filters and the map σ.
    Spectrum {
        #[command(flatten)]
        lattice: LatticeArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Report monotonicity, union and congruence axiom violations.
    Axioms {
        #[command(flatten)]
        input: OrderArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Transport the order to the spectrum and back; emit the certificate.
    Dualize {
        #[command(flatten)]
        input: OrderArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Build the canonical maximin representation.
    Represent {
        #[command(flatten)]
        input: OrderArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Check that a representation file induces the preference.
    Verify {
        #[command(flatten)]
        input: OrderArgs,
        #[command(flatten)]
        rep: RepArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Factor a representation onto the canonical one.
    Factor {
        #[command(flatten)]
        input: OrderArgs,
        #[command(flatten)]
        rep: RepArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run the seeded property suite on random instances.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Largest generating poset (lattices have at most 2^size elements).
        #[arg(long = "max-size", default_value_t = 5, value_parser = clap::value_parser!(u64).range(0..=6))]
        max_size: u64,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args)]
struct LatticeArg {
    #[arg(long, value_name = "PATH")]
    lattice: PathBuf,
}

#[derive(Args)]
struct OrderArgs {
    #[arg(long, value_name = "PATH")]
    lattice: PathBuf,
    #[arg(long, value_name = "PATH")]
    pref: PathBuf,
}

#[derive(Args)]
struct RepArg {
    #[arg(long, value_name = "PATH")]
    rep: PathBuf,
}

#[derive(Args)]
struct OutArg {
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// A finished check: the report to emit and whether it passed.
struct Outcome {
    report: Value,
    passed: bool,
}

impl Outcome {
    fn new(report: Value, passed: bool) -> Self {
        Outcome { report, passed }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("{}: cannot read", path.display()))
}

/// Prefixes format errors with the file, as `path:line:column: message`
/// for JSON errors.
fn located(path: &Path, err: FormatError) -> anyhow::Error {
    match err {
        FormatError::Json {
            line,
            column,
            message,
        } => anyhow!("{}:{line}:{column}: {message}", path.display()),
        other => anyhow!("{}: {other}", path.display()),
    }
}

fn load_lattice(path: &Path) -> anyhow::Result<Lattice> {
    let lattice = parse_lattice(&read(path)?).map_err(|e| located(path, e))?;
    debug!("{}: {} elements", path.display(), lattice.len());
    Ok(lattice)
}

fn load_order(args: &OrderArgs) -> anyhow::Result<(Lattice, WeakOrder)> {
    let lattice = load_lattice(&args.lattice)?;
    let order = parse_preference(&read(&args.pref)?, &lattice).map_err(|e| located(&args.pref, e))?;
    Ok((lattice, order))
}

fn pairs(v: &[(usize, usize)]) -> Value {
    json!(v.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>())
}

fn axioms_report(lattice: &Lattice, order: &WeakOrder) -> (Value, bool) {
    let r = check_axioms(lattice, order);
    let triples: Vec<[usize; 3]> = r.axiom2.iter().map(|&(a, a2, b)| [a, a2, b]).collect();
    let report = json!({
        "axiom1": pairs(&r.axiom1),
        "axiom2": triples,
        "axiom3": pairs(&r.axiom3),
    });
    (report, r.all_hold())
}

fn run(command: Command) -> anyhow::Result<(Outcome, Option<PathBuf>)> {
    Ok(match command {
        Command::Validate { lattice, out } => {
            let path = &lattice.lattice;
            let tables = parse_lattice_tables(&read(path)?).map_err(|e| located(path, e))?;
            let report = validate_laws(&tables).map_err(|e| anyhow!("{}: {e}", path.display()))?;
            let violations: Vec<Value> = report
                .violations
                .iter()
                .map(|v| json!({ "law": v.law, "witness": v.witness }))
                .collect();
            info!("{} law violation(s)", violations.len());
            let passed = violations.is_empty();
            let report = json!({
                "elements": tables.len(),
                "distributive_lattice": passed,
                "violations": violations,
            });
            (Outcome::new(report, passed), out.out)
        }
        Command::Spectrum { lattice, out } => {
            let l = load_lattice(&lattice.lattice)?;
            let space = SpectralSpace::new(&l);
            info!("{} prime filter(s)", space.point_count());
            (Outcome::new(spectrum_to_json(&space), true), out.out)
        }
        Command::Axioms { input, out } => {
            let (l, w) = load_order(&input)?;
            let (report, passed) = axioms_report(&l, &w);
            (Outcome::new(report, passed), out.out)
        }
        Command::Dualize { input, out } => {
            let (l, w) = load_order(&input)?;
            let cert = roundtrip_check(&l, &w);
            info!("round trip agreement: {}", cert.agreement);
            (Outcome::new(certificate_to_json(&cert), cert.agreement), out.out)
        }
        Command::Represent { input, out } => {
            let (l, w) = load_order(&input)?;
            match synthesize(&l, &w) {
                Ok(s) => {
                    info!(
                        "{:?} congruence, {} outcome(s)",
                        s.kind, s.representation.outcome_count
                    );
                    (Outcome::new(representation_to_json(&s.representation), true), out.out)
                }
                Err(RepresentationError::AxiomViolation(_)) => {
                    let (report, _) = axioms_report(&l, &w);
                    (Outcome::new(json!({ "axioms": report }), false), out.out)
                }
                Err(e) => bail!("representation failed: {e}"),
            }
        }
        Command::Verify { input, rep, out } => {
            let (l, w) = load_order(&input)?;
            let r = parse_representation(&read(&rep.rep)?, &l).map_err(|e| located(&rep.rep, e))?;
            let v = verify_representation(&l, &w, &r);
            let mut report = json!({ "holds": v.holds, "homomorphic": v.homomorphic });
            if let Some((a, b)) = v.counterexample {
                report["counterexample"] = json!([a, b]);
            }
            (Outcome::new(report, v.holds), out.out)
        }
        Command::Factor { input, rep, out } => {
            let (l, w) = load_order(&input)?;
            let other = parse_representation(&read(&rep.rep)?, &l).map_err(|e| located(&rep.rep, e))?;
            let outcome = match synthesize(&l, &w) {
                Err(RepresentationError::AxiomViolation(_)) => {
                    let (report, _) = axioms_report(&l, &w);
                    Outcome::new(json!({ "axioms": report }), false)
                }
                Err(e) => bail!("representation failed: {e}"),
                Ok(s) => match factor_check(&l, &w, &other, &s.representation) {
                    Ok(FactorOutcome::Factored { hom, surjective }) => {
                        let passed = surjective && hom.check();
                        let report = json!({
                            "factored": true,
                            "homomorphism": hom.check(),
                            "surjective": surjective,
                            "map": hom.map(),
                        });
                        Outcome::new(report, passed)
                    }
                    Ok(FactorOutcome::Refuted { a, b }) => {
                        Outcome::new(json!({ "factored": false, "refuted": [a, b] }), false)
                    }
                    Err(RepresentationError::NotARepresentation {
                        role,
                        counterexample,
                    }) => {
                        let report = json!({
                            "factored": false,
                            "not_a_representation": role,
                            "counterexample": counterexample.map(|(a, b)| [a, b]),
                        });
                        Outcome::new(report, false)
                    }
                    Err(e) => bail!("factoring failed: {e}"),
                },
            };
            (outcome, out.out)
        }
        Command::Fuzz {
            seed,
            trials,
            max_size,
            out,
        } => {
            let report = run_fuzz(seed, trials, max_size as usize);
            for (name, t) in &report.properties {
                info!("{name}: {} passed, {} failed", t.passed, t.failed);
            }
            let passed = report.all_passed();
            (Outcome::new(serde_json::to_value(&report)?, passed), out.out)
        }
    })
}

fn init_logging() -> anyhow::Result<()> {
    let level = match std::env::var("LM_LOG").as_deref() {
        Err(_) | Ok("quiet") => LevelFilter::Off,
        Ok("info") => LevelFilter::Info,
        Ok("debug") => LevelFilter::Debug,
        Ok(other) => bail!("LM_LOG must be quiet, info or debug, not {other:?}"),
    };
    env_logger::Builder::new().filter_level(level).init();
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = init_logging().and_then(|()| {
        let (outcome, out) = run(cli.command)?;
        let text = to_canonical_string(&outcome.report);
        match out {
            Some(path) => fs::write(&path, text).with_context(|| format!("{}: cannot write", path.display()))?,
            None => print!("{text}"),
        }
        Ok(outcome.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
