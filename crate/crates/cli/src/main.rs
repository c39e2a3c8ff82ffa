use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use convexdiff_core::scenario::{builtin, run_scenario, RunOutput, Scenario};
use convexdiff_core::{Arithmetic, Error};

const EXIT_VALIDATION: u8 = 2;
const EXIT_RUNTIME: u8 = 3;

#[derive(Parser)]
#[command(name = "convexdiff", about = "Convex-set calculus scenarios: set differences, minimal elements, subdifferential probes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a scenario file and write its report (and optional SVG).
    Run {
        scenario: PathBuf,
        /// Worker threads for direction sweeps.
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Override the scenario's arithmetic mode, converting its scalars.
        #[arg(long, value_enum)]
        arith: Option<ArithArg>,
        /// Directory for output files (default: alongside the scenario).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a scenario file without executing it.
    Validate { scenario: PathBuf },
    /// Run a bundled demo scenario.
    Demo {
        name: DemoName,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Directory for output files (default: current directory).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ArithArg {
    Rational,
    Double,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    Fig1,
    Lemmas,
    Lipschitz,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Scenario(_) => EXIT_VALIDATION,
                _ => EXIT_RUNTIME,
            };
            ExitCode::from(code)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Run { scenario, jobs, arith, out } => {
            let text = std::fs::read_to_string(&scenario)
                .map_err(|e| Error::Scenario(format!("{}: {e}", scenario.display())))?;
            let mut sc = Scenario::from_json(&text)?;
            if let Some(mode) = arith {
                sc = sc.with_arithmetic(match mode {
                    ArithArg::Rational => Arithmetic::Rational,
                    ArithArg::Double => Arithmetic::Double,
                });
            }
            apply_seed_env(&mut sc)?;
            let out_dir = out
                .or_else(|| scenario.parent().map(Path::to_path_buf))
                .unwrap_or_else(|| PathBuf::from("."));
            execute(&sc, jobs, &out_dir)
        }
        Command::Validate { scenario } => {
            let text = std::fs::read_to_string(&scenario)
                .map_err(|e| Error::Scenario(format!("{}: {e}", scenario.display())))?;
            let sc = Scenario::from_json(&text)?;
            let diags = sc.validate();
            if diags.is_empty() {
                println!("ok");
                Ok(ExitCode::SUCCESS)
            } else {
                for d in &diags {
                    eprintln!("invalid: {d}");
                }
                Ok(ExitCode::from(EXIT_VALIDATION))
            }
        }
        Command::Demo { name, jobs, out } => {
            let (name, mut sc) = match name {
                DemoName::Fig1 => ("fig1", builtin::fig1()),
                DemoName::Lemmas => ("lemmas", builtin::lemmas()),
                DemoName::Lipschitz => ("lipschitz", builtin::lipschitz()),
            };
            apply_seed_env(&mut sc)?;
            let out_dir = out.unwrap_or_else(|| PathBuf::from("."));
            std::fs::create_dir_all(&out_dir)
                .map_err(|e| Error::Scenario(format!("{}: {e}", out_dir.display())))?;
            write_atomic(&out_dir.join(format!("{name}.scenario.json")), &sc.to_json())?;
            execute(&sc, jobs, &out_dir)
        }
    }
}

fn apply_seed_env(sc: &mut Scenario) -> Result<(), Error> {
    if let Ok(v) = std::env::var("CONVEXDIFF_SEED") {
        sc.seed = v
            .parse()
            .map_err(|_| Error::Scenario(format!("CONVEXDIFF_SEED is not an unsigned integer: {v}")))?;
    }
    Ok(())
}

fn execute(sc: &Scenario, jobs: usize, out_dir: &Path) -> Result<ExitCode, Error> {
    let RunOutput { report, svg } = run_scenario(sc, jobs)?;
    let report_name = sc.output.report.clone().unwrap_or_else(|| "report.json".into());
    let report_path = out_dir.join(report_name);
    write_atomic(&report_path, &report.to_json())?;
    println!("report: {}", report_path.display());
    if let (Some(svg), Some(name)) = (svg, &sc.output.svg) {
        let svg_path = out_dir.join(name);
        write_atomic(&svg_path, &svg)?;
        println!("svg: {}", svg_path.display());
    }
    for c in &report.checks {
        let status = if c.pass { "pass" } else { "FAIL" };
        match c.gap {
            Some(g) => println!("check {status}: {} (gap {g})", c.name),
            None => println!("check {status}: {}", c.name),
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Write via a sibling temp file and rename, so readers never see a partial file.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Error> {
    let tmp = path.with_extension("tmp");
    let io = |e: std::io::Error| Error::Scenario(format!("{}: {e}", path.display()));
    std::fs::write(&tmp, contents).map_err(io)?;
    std::fs::rename(&tmp, path).map_err(io)?;
    Ok(())
}
