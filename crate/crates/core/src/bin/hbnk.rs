use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hbnk::export::{self, Format};
use hbnk::report::{self, ReportOptions, Verdict, DEFAULT_ORACLE_LIMIT};
use hbnk::{GraphBuilder, GroundParams};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hbnk",
    about = "Bipartite Kneser B type-k graphs H_B(n,k): export, invariants, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Export H_B(n,k) as an edge list, DOT or JSON.
    Gen {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate every closed-form invariant and compare with the oracles.
    Invariants {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Run oracles only on graphs with at most this many vertices.
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        oracle_limit: u64,
        /// Emit the JSON report instead of the table.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include per-phase timings in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Recompute the published distance table from closed forms and BFS.
    Table1 {
        #[arg(long)]
        json: bool,
    },
    /// Compare closed forms with oracles for every 1 < k < n, n in [n_min, n_max].
    Verify {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        oracle_limit: u64,
        /// Write the JSON grid report (to --out, or stdout).
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Io(String),
}

fn params(n: u32, k: u32) -> Result<GroundParams, Failure> {
    GroundParams::new(n, k).map_err(|e| Failure::Usage(e.to_string()))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Gen { n, k, format, out } => {
            let g = GraphBuilder::new(params(n, k)?)
                .build()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let format = match format {
                FormatArg::Edgelist => Format::EdgeList,
                FormatArg::Dot => Format::Dot,
                FormatArg::Json => Format::Json,
            };
            emit(&export::render(&g, format), out.as_ref())?;
            Ok(true)
        }
        Command::Invariants {
            n,
            k,
            oracle_limit,
            json,
            out,
            timings,
        } => {
            let opts = ReportOptions {
                oracle_limit,
                timings,
                ..Default::default()
            };
            let r = report::build_report(params(n, k)?, &opts)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let text = if json { to_json(&r) } else { r.render_table() };
            emit(&text, out.as_ref())?;
            Ok(r.overall == Verdict::Pass)
        }
        Command::Table1 { json } => {
            let t = report::table1();
            if json {
                print!("{}", to_json(&t));
            } else {
                print!("{}", t.render());
            }
            Ok(t.all_match())
        }
        Command::Verify {
            n_min,
            n_max,
            oracle_limit,
            json,
            out,
        } => {
            let opts = ReportOptions {
                oracle_limit,
                ..Default::default()
            };
            let grid = report::verify_grid(n_min, n_max, &opts)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            for s in &grid.skipped {
                eprintln!("warning: {} skipped: {}", s.params, s.reason);
            }
            let summary = grid.summary_lines().join("\n") + "\n";
            if json {
                emit(&to_json(&grid), out.as_ref())?;
                if out.is_some() {
                    print!("{summary}");
                }
            } else {
                emit(&summary, out.as_ref())?;
            }
            Ok(grid.overall == Verdict::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_MISMATCH),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}
