//! `doubleaut`: compute Aut(D(G)) for a finite group G given as a JSON file.

mod cache;
mod pipeline;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use doubleaut::autdouble::{json_u128, BuildOptions};
use doubleaut::double::MorphQuadruple;
use doubleaut::groups::io::load_group;
use doubleaut::Error;
use serde_json::{json, Value};

use cache::{group_hash, render, write_atomic, Cache};
use pipeline::VerifyLevel;

#[derive(Parser)]
#[command(name = "doubleaut", version, about = "Hopf automorphisms of Drinfeld doubles of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest group order accepted from input files.
    #[arg(long, global = true, default_value_t = 512)]
    max_order: usize,

    /// Largest |Aut(D(G))| that is enumerated element by element.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_enum: u64,

    /// Depth of the invariant suite.
    #[arg(long, global = true, value_enum, default_value_t = VerifyLevel::Spot)]
    verify: VerifyLevel,

    /// Write the report here (atomically) instead of standard output.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    /// Cache directory for reports.
    #[arg(long, global = true, env = "DOUBLEAUT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Bypass the cache entirely.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Seed for sampled verification; never changes computed results.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Add wall-clock timings to the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Order, formula components, kernel, predicates, orbit summary and
    /// verification status.
    Analyze { group: PathBuf },
    /// Orbits of Aut(D(G)) on the simple D(G)-modules.
    Orbits { group: PathBuf },
    /// Run the invariant suite; nonzero exit on the first counterexample.
    Verify {
        group: PathBuf,
        /// A quadruple (JSON) to check alongside the suite.
        #[arg(long)]
        inject: Option<PathBuf>,
    },
    /// Structural classification of G without building Aut(D(G)).
    Classify { group: PathBuf },
}

/// Exit statuses: 1 verification failure, 2 malformed input, 3 size limit,
/// 4 internal invariant breach.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::SizeLimit(_) => 3,
        Error::Precondition(_) | Error::Invariant(_) => 4,
    }
}

struct Outcome {
    report: Value,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.report) {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(1);
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn emit(cli: &Cli, report: &Value) -> std::io::Result<()> {
    let text = render(report);
    match &cli.report {
        Some(path) => write_atomic(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cache(cli: &Cli) -> Option<Cache> {
    if cli.no_cache {
        return None;
    }
    cli.cache_dir.clone().or_else(Cache::default_dir).map(Cache::new)
}

fn load(cli: &Cli, path: &Path) -> doubleaut::Result<doubleaut::FiniteGroup> {
    load_group(path, cli.max_order)
}

fn options(cli: &Cli) -> BuildOptions {
    BuildOptions {
        max_enum: cli.max_enum as u128,
        ..Default::default()
    }
}

/// Look the report up in the cache or compute and store it.
fn cached(
    cli: &Cli,
    g: &doubleaut::FiniteGroup,
    kind: &str,
    compute: impl FnOnce() -> doubleaut::Result<Value>,
) -> doubleaut::Result<Value> {
    let Some(c) = cache(cli) else {
        return compute();
    };
    let key = group_hash(g);
    if let Some(v) = c.get(&key, kind) {
        return Ok(v);
    }
    let v = compute()?;
    c.put(&key, kind, &v);
    Ok(v)
}

fn run(cli: &Cli) -> doubleaut::Result<Outcome> {
    let start = Instant::now();
    let mut out = match &cli.command {
        Command::Classify { group } => {
            let g = load(cli, group)?;
            let report = cached(cli, &g, "classify", || Ok(pipeline::classify_report(&g)))?;
            Outcome { report, failed: false }
        }
        Command::Analyze { group } => {
            let g = load(cli, group)?;
            let kind = format!(
                "analyze-{}-seed{}-enum{}",
                cli.verify.as_str(),
                cli.seed,
                cli.max_enum
            );
            let report = cached(cli, &g, &kind, || {
                let a = pipeline::build(&g, &options(cli))?;
                pipeline::analyze_report(&a, cli.verify, cli.seed)
            })?;
            let failed = report["verification"]["failed"].as_u64().unwrap_or(0) > 0;
            Outcome { report, failed }
        }
        Command::Orbits { group } => {
            let g = load(cli, group)?;
            let kind = format!("orbits-enum{}", cli.max_enum);
            let report = cached(cli, &g, &kind, || {
                let a = pipeline::build(&g, &options(cli))?;
                pipeline::orbits_report(&a)
            })?;
            Outcome { report, failed: false }
        }
        Command::Verify { group, inject } => {
            let g = load(cli, group)?;
            let injected = inject
                .as_ref()
                .map(|p| {
                    let text = std::fs::read_to_string(p)
                        .map_err(|e| Error::parse(format!("{}: {e}", p.display())))?;
                    let v: Value = serde_json::from_str(&text)
                        .map_err(|e| Error::parse(format!("{}: {e}", p.display())))?;
                    MorphQuadruple::from_json(&g, &v)
                })
                .transpose()?;
            let a = pipeline::build(&g, &options(cli))?;
            let mut suite = pipeline::run_suite(&a, cli.verify, cli.seed)?;
            if let Some(q) = &injected {
                suite.checks.insert(0, pipeline::check_injected(&a, q));
            }
            if let Some((name, what)) = suite.first_failure() {
                eprintln!("FAIL {name}: {what}");
            }
            let failed = suite.failed() > 0;
            let report = json!({
                "group": {"name": g.name(), "order": g.order()},
                "order": json_u128(a.order()),
                "verification": suite.to_json(),
            });
            Outcome { report, failed }
        }
    };
    if cli.timing {
        out.report["timing"] = json!({"total_ms": start.elapsed().as_millis() as u64});
    }
    Ok(out)
}
