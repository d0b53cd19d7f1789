use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hamdisc::{Digraph, OrientedWalk};
use hamdisc_cli::commands::*;
use hamdisc_cli::dot::to_dot;
use hamdisc_cli::instance::{format_instance, read_instance};
use hamdisc_cli::CliError;

/// Exit status: 0 success, 1 usage or parse error, 2 a check failed,
/// 3 an exact search was out of range.
#[derive(Parser)]
#[command(name = "hamdisc", version, about = "Hamilton oriented paths and cycles with many forward arcs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an instance and report its degree conditions.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum-forward Hamilton path or cycle with a witness.
    Maxforward {
        path: PathBuf,
        #[arg(long, default_value = "cycle")]
        target: String,
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long, default_value_t = 12)]
        max_oracle_n: usize,
        /// Print sigma only.
        #[arg(long)]
        quiet: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a construction or seeded random instance.
    Generate {
        /// construction1, construction2, tournament, oriented, smd or lsd.
        kind: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated partite set sizes (smd).
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long)]
        density: Option<f64>,
        #[arg(long)]
        digon_prob: Option<f64>,
        /// strong, nonstrong or any (lsd).
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a conjecture or theorem checker over files, directories or sweeps.
    Check {
        inputs: Vec<PathBuf>,
        /// e.g. construction2:5-11 or oriented:4-9:50:0.7
        #[arg(long)]
        sweep: Vec<String>,
        /// conj1, conj2, thm-degree-sum, thm-clique or thm-approx.
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 12)]
        max_oracle_n: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the verdict counts only.
        #[arg(long)]
        quiet: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz export, optionally overlaying a witness.
    Dot {
        path: PathBuf,
        /// Solve for this target and overlay its witness.
        #[arg(long)]
        highlight: Option<String>,
        /// Explicit witness as comma-separated vertices.
        #[arg(long, value_delimiter = ',', conflicts_with = "highlight")]
        witness: Option<Vec<usize>>,
        /// Treat --witness as a cycle.
        #[arg(long)]
        closed: bool,
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long, default_value_t = 12)]
        max_oracle_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Analyze { path, out } => {
            let d = read_instance(&path)?;
            emit(out.as_deref(), &json(&cmd_analyze(&d, &path.display().to_string())))?;
        }
        Command::Maxforward {
            path,
            target,
            method,
            max_oracle_n,
            quiet,
            out,
        } => {
            let d = read_instance(&path)?;
            let target: Target = target.parse()?;
            let report = cmd_maxforward(&d, &path.display().to_string(), target, method.parse()?, max_oracle_n)?;
            let text = if quiet {
                let sigma = report.sigma_hp.or(report.sigma_hc);
                format!("{}\n", sigma.map_or("null".to_string(), |s| s.to_string()))
            } else {
                json(&report)
            };
            emit(out.as_deref(), &text)?;
        }
        Command::Generate {
            kind,
            n,
            delta,
            k,
            sizes,
            density,
            digon_prob,
            shape,
            seed,
            out,
        } => {
            let params = GenerateParams {
                n,
                delta,
                k,
                sizes,
                density,
                digon_prob,
                shape,
                seed,
            };
            let (d, how) = cmd_generate(&kind, &params)?;
            emit(out.as_deref(), &format_instance(&d, &[how]))?;
        }
        Command::Check {
            inputs,
            sweep,
            target,
            k,
            max_oracle_n,
            jobs,
            seed,
            quiet,
            out,
        } => {
            let target = CheckTarget::parse(&target, k)?;
            let mut instances = load_inputs(&inputs)?;
            for spec in &sweep {
                instances.extend(expand_sweep(spec, seed)?);
            }
            if instances.is_empty() {
                return Err(CliError::Usage("no instances given (pass files, directories or --sweep)".into()));
            }
            let report = cmd_check(instances, target, max_oracle_n, jobs)?;
            for e in report.entries.iter().filter(|e| e.verdict == "fails") {
                eprintln!("FAILS: {} {}", e.instance, e.note);
            }
            let text = if quiet {
                format!(
                    "holds {} fails {} not-applicable {} skipped {}\n",
                    report.holds, report.fails, report.not_applicable, report.skipped
                )
            } else {
                json(&report)
            };
            emit(out.as_deref(), &text)?;
            if report.fails > 0 {
                return Ok(2);
            }
        }
        Command::Dot {
            path,
            highlight,
            witness,
            closed,
            method,
            max_oracle_n,
            out,
        } => {
            let d = read_instance(&path)?;
            let walk = overlay(&d, &path, highlight, witness, closed, &method, max_oracle_n)?;
            emit(out.as_deref(), &to_dot(&d, walk.as_ref()))?;
        }
    }
    Ok(0)
}

fn overlay(
    d: &Digraph,
    path: &std::path::Path,
    highlight: Option<String>,
    witness: Option<Vec<usize>>,
    closed: bool,
    method: &str,
    max_oracle_n: usize,
) -> Result<Option<OrientedWalk>, CliError> {
    if let Some(vs) = witness {
        return OrientedWalk::from_vertices(d, vs, closed)
            .map(Some)
            .map_err(|e| CliError::Usage(format!("witness: {e}")));
    }
    let Some(t) = highlight else { return Ok(None) };
    let report = cmd_maxforward(d, &path.display().to_string(), t.parse()?, method.parse()?, max_oracle_n)?;
    report.witness.map(|w| w.to_walk(d)).transpose()
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors; 2 is reserved for failed checks
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
