use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use walk_entropy::analysis::{
    self, correlations_report, extremal, format_sig, read_csv, sweep, Direction, Metric, ScanConfig,
};
use walk_entropy::canon::{enumerate_all, enumerate_connected};
use walk_entropy::entropy::VnNormalization;
use walk_entropy::graph6::{parse_graph6, read_graphs, write_graph6};
use walk_entropy::regularity::classify;
use walk_entropy::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

#[derive(Parser)]
#[command(name = "walkent", version, about = "Walk entropies of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute per-graph metrics for a graph6 corpus and write them as CSV.
    Scan {
        /// graph6 file, `-` for stdin.
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        /// CSV destination, `-` for stdout.
        #[arg(long, default_value = "-")]
        output: PathBuf,
        /// β used for the spectral Shannon entropy column.
        #[arg(long, default_value_t = 1.0)]
        shannon_beta: f64,
        /// Von Neumann weights: `trace` (L / tr L) or `raw` (Laplacian eigenvalues).
        #[arg(long, default_value = "trace")]
        vn_norm: VnNormalization,
    },
    /// Walk entropy of one graph over a range of β.
    Sweep {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 1e-3)]
        beta_min: f64,
        #[arg(long, default_value_t = 1e2)]
        beta_max: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
        /// Evenly spaced grid instead of log-spaced.
        #[arg(long)]
        linear: bool,
    },
    /// Print one graph6 line per isomorphism class on N nodes (N <= 7).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Rank the graphs of a corpus by one metric.
    #[command(group(ArgGroup::new("direction").args(["min", "max"]).required(true)))]
    Extremal {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        metric: Metric,
        #[arg(long)]
        min: bool,
        #[arg(long)]
        max: bool,
        #[arg(long, default_value_t = 10)]
        top: usize,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
    },
    /// Pearson correlations between the columns of a scan CSV.
    Corr {
        #[arg(long, default_value = "-")]
        input: PathBuf,
    },
    /// Print WalkRegular, RegularNotWalkRegular or NonRegular.
    Classify {
        #[arg(long)]
        graph: String,
    },
    /// List graphs at maximal walk entropy that are not walk-regular.
    Conjecture {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn open_input(path: &PathBuf) -> io::Result<Box<dyn BufRead>> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        Ok(Box::new(BufReader::new(File::open(path)?)))
    }
}

fn open_output(path: &PathBuf) -> io::Result<Box<dyn Write>> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufWriter::new(io::stdout().lock())))
    } else {
        Ok(Box::new(BufWriter::new(File::create(path)?)))
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        _ if err.is_parse_error() => EXIT_PARSE,
        Error::Numerical(_) | Error::NotSymmetric(_) | Error::Overflow(_) => EXIT_NUMERICAL,
        Error::Line { source, .. } => exit_code(source),
        _ => EXIT_USAGE,
    }
}

fn config(beta: f64, shannon_beta: f64, vn: VnNormalization) -> Result<ScanConfig, Error> {
    for b in [beta, shannon_beta] {
        if !(b.is_finite() && b >= 0.0) {
            return Err(Error::InvalidBeta(b));
        }
    }
    Ok(ScanConfig {
        beta,
        shannon_beta,
        vn,
    })
}

/// Scan a corpus, reporting bad lines on stderr. Returns the records and
/// whether any line failed.
fn scan_input(input: &PathBuf, config: &ScanConfig) -> Result<(Vec<analysis::MetricsRecord>, bool), Error> {
    let report = analysis::scan(open_input(input)?, config)?;
    for e in &report.errors {
        eprintln!("walkent: {e}");
    }
    if report.skipped_disconnected > 0 {
        eprintln!("walkent: skipped {} disconnected graphs", report.skipped_disconnected);
    }
    Ok((report.records, !report.errors.is_empty()))
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Scan {
            input,
            beta,
            output,
            shannon_beta,
            vn_norm,
        } => {
            let config = config(beta, shannon_beta, vn_norm)?;
            let (records, failed) = scan_input(&input, &config)?;
            let mut out = open_output(&output)?;
            analysis::write_csv(&records, &mut out)?;
            out.flush()?;
            Ok(if failed { EXIT_PARSE } else { 0 })
        }
        Command::Sweep {
            graph,
            beta_min,
            beta_max,
            points,
            linear,
        } => {
            let g = parse_graph6(&graph)?;
            let result = sweep(&g, beta_min, beta_max, points, !linear)?;
            let mut out = open_output(&"-".into())?;
            writeln!(out, "beta,s_walk")?;
            for (b, s) in result.beta_grid.iter().zip(&result.s_values) {
                writeln!(out, "{},{}", format_sig(*b), format_sig(*s))?;
            }
            out.flush()?;
            eprintln!(
                "shape={} argmin_beta={} points={} spacing={}",
                result.shape,
                result.argmin_beta.map(format_sig).unwrap_or_else(|| "-".into()),
                points,
                if linear { "linear" } else { "log" }
            );
            Ok(0)
        }
        Command::Enumerate { n, connected } => {
            let mut out = open_output(&"-".into())?;
            let graphs: Box<dyn Iterator<Item = _>> = if connected {
                Box::new(enumerate_connected(n)?)
            } else {
                Box::new(enumerate_all(n)?)
            };
            for g in graphs {
                writeln!(out, "{}", write_graph6(&g)?)?;
            }
            out.flush()?;
            Ok(0)
        }
        Command::Extremal {
            input,
            metric,
            min,
            max: _,
            top,
            beta,
        } => {
            let config = config(beta, 1.0, VnNormalization::Trace)?;
            let (records, failed) = scan_input(&input, &config)?;
            let direction = if min { Direction::Min } else { Direction::Max };
            let ranked = extremal(&records, metric, direction, Some(top))?;
            let mut out = open_output(&"-".into())?;
            writeln!(out, "graph6,{metric}")?;
            for (g6, v) in ranked {
                writeln!(out, "{g6},{}", format_sig(v))?;
            }
            out.flush()?;
            Ok(if failed { EXIT_PARSE } else { 0 })
        }
        Command::Corr { input } => {
            let records = read_csv(open_input(&input)?)?;
            let report = correlations_report(&records)?;
            let mut out = open_output(&"-".into())?;
            report.write_csv(&mut out)?;
            out.flush()?;
            Ok(0)
        }
        Command::Classify { graph } => {
            let g = parse_graph6(&graph)?;
            println!("{}", classify(&g));
            Ok(0)
        }
        Command::Conjecture { input, beta, tol } => {
            let graphs = read_graphs(open_input(&input)?)?;
            let found = analysis::conjecture_scan(&graphs, beta, tol)?;
            let mut out = open_output(&"-".into())?;
            writeln!(out, "graph6,s_walk,log2_n")?;
            for c in &found {
                writeln!(out, "{},{},{}", c.graph6, format_sig(c.s_walk), format_sig(c.max_entropy))?;
            }
            out.flush()?;
            eprintln!("{} counterexample candidates among {} graphs", found.len(), graphs.len());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("walkent: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
