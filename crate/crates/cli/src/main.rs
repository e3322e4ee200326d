//! `coverlab`: analyze graph files, build family members, run sweeps.
//!
//! Exit status: 0 success, 1 a closed form disagrees with a computation,
//! 2 input error, 3 capacity exceeded.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coverlab::fiber::DEFAULT_TORIC_DEGREE;
use coverlab::graphfile::{parse_graph, write_graph};
use coverlab::report::{analyze, AnalysisOptions};
use coverlab::sweep::{run_sweep, SweepCheck, SweepOutcome, CSV_COLUMNS};
use coverlab::{Error, Graph};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "coverlab",
    version,
    about = "Cover ideals of graphs and their fiber cones"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the cover ideal of a graph file
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        analysis: AnalysisArgs,
    },
    /// Construct a family member and print it as a graph file
    Family {
        #[arg(value_enum)]
        kind: FamilyKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// base graph for `whisker` and left operand of `join`: a graph file
        /// or `cycle:N`, `path:N`, `complete:N`
        #[arg(long)]
        base: Option<String>,
        /// right operand of `join`
        #[arg(long)]
        other: Option<String>,
        /// analyze the constructed graph instead of printing it
        #[arg(long)]
        analyze: bool,
        #[command(flatten)]
        analysis: AnalysisArgs,
    },
    /// Compare computations with closed forms over a parameter range
    Sweep {
        check: String,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        s_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
        format: SweepFormat,
    },
}

#[derive(Args)]
struct AnalysisArgs {
    #[arg(long, default_value_t = DEFAULT_TORIC_DEGREE)]
    max_toric_degree: usize,
    /// check the Freiman power formula for powers up to this exponent (0 skips)
    #[arg(long, default_value_t = 3)]
    powers: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Circulant,
    BandedPath,
    TwoCliques,
    Whisker,
    HFamily,
    Join,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Csv,
    Text,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Core(e @ Error::Capacity { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_CAPACITY)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { file, analysis } => {
            let graph = read_graph_file(&file)?;
            emit_analysis(&graph, &analysis)
        }
        Command::Family {
            kind,
            n,
            s,
            m,
            k,
            base,
            other,
            analyze,
            analysis,
        } => {
            let graph = build_family(kind, n, s, m, k, base.as_deref(), other.as_deref())?;
            if analyze {
                emit_analysis(&graph, &analysis)
            } else {
                io::stdout().write_all(write_graph(&graph).as_bytes())?;
                Ok(0)
            }
        }
        Command::Sweep {
            check,
            n_min,
            n_max,
            s_max,
            format,
        } => {
            let check: SweepCheck = check.parse()?;
            let mut range = check.default_range();
            if let Some(v) = n_min {
                range.n_min = v;
            }
            if let Some(v) = n_max {
                range.n_max = v;
            }
            if s_max.is_some() {
                range.s_max = s_max;
            }
            let outcome = run_sweep(check, range)?;
            let text = match format {
                SweepFormat::Csv => sweep_csv(&outcome)?,
                SweepFormat::Text => sweep_text(&outcome),
            };
            io::stdout().write_all(text.as_bytes())?;
            Ok(if outcome.has_mismatch() {
                EXIT_MISMATCH
            } else {
                0
            })
        }
    }
}

fn read_graph_file(path: &PathBuf) -> Result<Graph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit_analysis(graph: &Graph, args: &AnalysisArgs) -> Result<u8, Failure> {
    let options = AnalysisOptions {
        max_toric_degree: args.max_toric_degree,
        powers: args.powers,
    };
    let report = analyze(graph, options)?;
    let text = match args.format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Text => report.to_text(),
    };
    io::stdout().write_all(text.as_bytes())?;
    Ok(if report.has_mismatch() {
        EXIT_MISMATCH
    } else {
        0
    })
}

fn need(value: Option<usize>, flag: &str, kind: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Input(format!("{kind} needs --{flag}")))
}

/// `cycle:N`, `path:N`, `complete:N`, or a graph file path.
fn graph_operand(spec: &str) -> Result<Graph, Failure> {
    if let Some((kind, size)) = spec.split_once(':') {
        if let Ok(size) = size.parse::<usize>() {
            match kind {
                "cycle" => return Ok(Graph::cycle(size)?),
                "path" => return Ok(Graph::path(size)),
                "complete" => return Ok(Graph::complete(size)),
                _ => {}
            }
        }
    }
    read_graph_file(&PathBuf::from(spec))
}

fn build_family(
    kind: FamilyKind,
    n: Option<usize>,
    s: Option<usize>,
    m: Option<usize>,
    k: Option<usize>,
    base: Option<&str>,
    other: Option<&str>,
) -> Result<Graph, Failure> {
    let operand = |spec: Option<&str>, flag: &str| {
        spec.ok_or_else(|| Failure::Input(format!("needs --{flag}")))
            .and_then(graph_operand)
    };
    Ok(match kind {
        FamilyKind::Circulant => {
            Graph::circulant(need(n, "n", "circulant")?, need(s, "s", "circulant")?)?
        }
        FamilyKind::BandedPath => {
            Graph::banded_path(need(n, "n", "banded-path")?, need(s, "s", "banded-path")?)?
        }
        FamilyKind::TwoCliques => {
            Graph::two_cliques(need(n, "n", "two-cliques")?, need(m, "m", "two-cliques")?)?
        }
        FamilyKind::Whisker => Graph::whisker(&operand(base, "base")?),
        FamilyKind::HFamily => Graph::h_family(need(k, "k", "h-family")?)?,
        FamilyKind::Join => Graph::join(&operand(base, "base")?, &operand(other, "other")?),
    })
}

fn sweep_csv(outcome: &SweepOutcome) -> Result<String, Failure> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Failure::Input(e.to_string());
    writer.write_record(CSV_COLUMNS).map_err(io_err)?;
    for row in &outcome.rows {
        writer.write_record(row.values()).map_err(io_err)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Failure::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn sweep_text(outcome: &SweepOutcome) -> String {
    let header = CSV_COLUMNS.map(str::to_string);
    let rows: Vec<[String; 9]> = outcome.rows.iter().map(|r| r.values()).collect();
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String; 9]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&header);
    for row in &rows {
        out.push_str(&line(row));
    }
    out.push_str(&format!(
        "{} rows: {} match, {} mismatch, {} flagged, {} skipped, {} n/a\n",
        outcome.rows.len(),
        outcome.count(coverlab::sweep::RowStatus::Match),
        outcome.count(coverlab::sweep::RowStatus::Mismatch),
        outcome.count(coverlab::sweep::RowStatus::Flagged),
        outcome.count(coverlab::sweep::RowStatus::Skipped),
        outcome.count(coverlab::sweep::RowStatus::NotApplicable),
    ));
    out
}
