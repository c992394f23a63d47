// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ergobound_cli::config::{ExperimentConfig, Experiment, Format};
use ergobound_cli::output::{write_csv, write_json};
use ergobound_cli::sweep::{run_report, run_sweep, PointOutcome, RunOptions, SweepRow};
use ergobound_cli::verify::verify;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_RESOURCE_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "ergobound", version, about = "Ergotropy and locked-energy bounds for finite heat baths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the configuration at its base point.
    Report(RunArgs),
    /// Evaluate every point of the configured sweep.
    Sweep(RunArgs),
    /// Check the implementation against the dense oracle and the bound inequalities.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Common {
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Master seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct RunArgs {
    /// TOML experiment configuration.
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    format: Option<Format>,
    /// Fill the wall_time_ms column; makes the output run-dependent.
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Largest joint dimension of the dense comparisons.
    #[arg(long, default_value_t = 64)]
    max_dim: usize,
    #[command(flatten)]
    common: Common,
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, bytes),
        None => io::stdout().lock().write_all(bytes),
    }
}

fn load(args: &RunArgs) -> Result<(Experiment, ExperimentConfig), String> {
    let text = fs::read_to_string(&args.config)
        .map_err(|e| format!("{}: {e}", args.config.display()))?;
    let cfg = ExperimentConfig::from_toml(&text).map_err(|e| format!("{}: {e}", args.config.display()))?;
    let exp = cfg.resolve(args.common.seed).map_err(|e| format!("{}: {e}", args.config.display()))?;
    Ok((exp, cfg))
}

fn run(args: RunArgs, sweep: bool) -> ExitCode {
    let (exp, cfg) = match load(&args) {
        Ok(x) => x,
        Err(e) => return fail(EXIT_CONFIG, e),
    };
    if args.common.threads == Some(0) {
        return fail(EXIT_CONFIG, "--threads must be positive");
    }
    let options = RunOptions {
        threads: args.common.threads,
        timing: args.timing,
    };
    let rows: Vec<SweepRow> = if sweep {
        match run_sweep(&exp, options) {
            Ok(rows) => rows,
            Err(e) => return fail(EXIT_CONFIG, e),
        }
    } else {
        let row = run_report(&exp, options.timing);
        if let PointOutcome::Failed(msg) = &row.outcome {
            return fail(EXIT_CONFIG, msg);
        }
        vec![row]
    };

    let output = cfg.output.unwrap_or_default();
    let format = args.format.or(output.format).unwrap_or_default();
    let out = args.common.out.or(output.path);
    let mut buf = Vec::new();
    let written = match format {
        Format::Csv => write_csv(&rows, &mut buf),
        Format::Json => write_json(&rows, &mut buf),
    };
    if let Err(e) = written {
        return fail(EXIT_CONFIG, e);
    }
    if let Err(e) = emit(out.as_deref(), &buf) {
        return fail(EXIT_CONFIG, e);
    }

    let mut code = ExitCode::SUCCESS;
    for row in &rows {
        match &row.outcome {
            PointOutcome::Report(_) => {}
            PointOutcome::SizeCap { size, cap } => {
                eprintln!("warning: point {:?} skipped: joint size {size} exceeds {cap}", row.value);
                code = ExitCode::from(EXIT_RESOURCE_CAP);
            }
            PointOutcome::Failed(msg) => return fail(EXIT_CONFIG, msg),
        }
    }
    code
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let seed = args.common.seed.unwrap_or(0);
    let summary = match args.common.threads {
        Some(0) => return fail(EXIT_CONFIG, "--threads must be positive"),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| verify(args.trials, seed, args.max_dim)),
            Err(e) => return fail(EXIT_CONFIG, e),
        },
        None => verify(args.trials, seed, args.max_dim),
    };
    let summary = match summary {
        Ok(s) => s,
        Err(e) => return fail(EXIT_CONFIG, e),
    };
    let mut buf = serde_json::to_vec_pretty(&summary).expect("summary serializes");
    buf.push(b'\n');
    if let Err(e) = emit(args.common.out.as_deref(), &buf) {
        return fail(EXIT_CONFIG, e);
    }
    if summary.pass {
        ExitCode::SUCCESS
    } else {
        for c in summary.checks.iter().filter(|c| c.failures > 0) {
            eprintln!("check {} failed on {} of {} trials", c.name, c.failures, c.trials);
        }
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Report(args) => run(args, false),
        Command::Sweep(args) => run(args, true),
        Command::Verify(args) => run_verify(args),
    }
}
