use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use srreg::io::parse_graph;
use srreg::verify::{run_classify, run_invariants, run_verify, Method, VerifyConfig};
use srreg::{Graph, OracleTable};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "srreg", version, about = "Local cohomology of powers of graph ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// a_1, a_2, g-reg, reg of the symbolic power and CM flag for n = 1..=N.
    Invariants {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        out: Format,
    },
    /// Profile, condition class and matroid verdicts.
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Compare every closed form with the oracle over all small graphs.
    Verify {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        max_n: u32,
        /// Also sweep graphs with isolated vertices.
        #[arg(long)]
        isolated: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// One graph per isomorphism class.
        #[arg(long)]
        dedupe: bool,
    },
    /// Oracle values a_0 .. a_r, g-reg and reg of S/I^n as CSV.
    Table {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = CsvOnly::Csv)]
        out: CsvOnly,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Oracle,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Formula => Method::Formula,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum CsvOnly {
    Csv,
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("{}", path.display()))
}

fn oracle_csv(g: &Graph, n_max: u32) -> anyhow::Result<String> {
    anyhow::ensure!(n_max >= 1, "n-max must be positive");
    let ideal = g.stanley_reisner()?;
    let r = ideal.nvars();
    let mut out = String::from("n");
    for i in 0..=r {
        write!(out, ",a{i}").unwrap();
    }
    out.push_str(",greg,reg\n");
    for n in 1..=n_max {
        let t = OracleTable::compute(&ideal.power(n))?;
        write!(out, "{n}").unwrap();
        for i in 0..=r {
            write!(out, ",{}", t.a(i)).unwrap();
        }
        writeln!(out, ",{},{}", t.greg(), t.reg()).unwrap();
    }
    Ok(out)
}

/// Output and whether it reports a mismatch.
fn run(command: Command) -> anyhow::Result<(String, bool)> {
    match command {
        Command::Invariants {
            graph,
            n_max,
            method,
            out,
        } => {
            let g = read_graph(&graph)?;
            let table = run_invariants(&g, n_max, method.into())?;
            let text = match out {
                Format::Table => table.to_table(),
                Format::Csv => table.to_csv(),
            };
            Ok((text, table.has_mismatch()))
        }
        Command::Classify { graph } => {
            let g = read_graph(&graph)?;
            Ok((run_classify(&g).to_string(), false))
        }
        Command::Verify {
            max_vertices,
            max_n,
            isolated,
            workers,
            dedupe,
        } => {
            let report = run_verify(VerifyConfig {
                max_vertices,
                max_n,
                with_isolated: isolated,
                dedupe,
                workers,
            })?;
            Ok((report.render(), report.mismatches() > 0))
        }
        Command::Table { graph, n_max, .. } => {
            let g = read_graph(&graph)?;
            Ok((oracle_csv(&g, n_max)?, false))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(cli.command);
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok((text, mismatch)) => {
            print!("{text}");
            if mismatch {
                ExitCode::from(EXIT_MISMATCH)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
