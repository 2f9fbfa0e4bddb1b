//! Command-line front end: reads graphs, runs the solver, the verifier and
//! the oracle, generates families and sweeps whole corpora.
//!
//! Exit codes: 0 on success, 1 for parse or usage errors, 2 when a component
//! is a single edge, 3 for an internal invariant violation or theory gap.

pub mod format;
pub mod report;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use onetwothree::generate::{self, SplitMix64};
use onetwothree::graph::Graph;
use onetwothree::solver::{solve, Branch};
use onetwothree::verify::{brute_force_min_k, verify};
use onetwothree::Error;
use thiserror::Error;

use format::{emit_dot, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, GraphDocument, ParseError, SourceFormat};
use report::{OracleDocument, SolveDocument, VerifyDocument};

#[derive(Debug, Parser)]
#[command(name = "onetwothree", version, about = "Weight graph edges with 1, 2, 3 so that adjacent vertices get distinct sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight a graph and print the weighting as JSON.
    Solve {
        #[command(flatten)]
        input: Input,
        /// Print DOT with edge weights and vertex sums instead of JSON.
        #[arg(long)]
        dot: bool,
        /// Add per-label counts to the output.
        #[arg(long)]
        branch_stats: bool,
    },
    /// Check a weighting (JSON as printed by `solve`) against a graph.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Weighting file.
        #[arg(long)]
        weights: PathBuf,
    },
    /// Smallest k for which weights 1..k suffice, by exhaustive search.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Print a graph from a named family.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Print DOT instead of an edge list.
        #[arg(long, global = true)]
        dot: bool,
        /// Output format for the graph.
        #[arg(long, value_enum, default_value_t = Format::Edges, global = true)]
        format: Format,
    },
    /// Solve and verify a whole corpus and print a summary table.
    Sweep(Sweep),
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file, or `-` for standard input.
    #[arg(default_value = "-")]
    pub path: String,
    #[arg(long, value_enum, default_value_t = Format::Edges)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edges,
    Graph6,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    Gnp {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Cycle { n: usize },
    Complete { n: usize },
    Bipartite { a: usize, b: usize },
    Tree {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Petersen,
}

#[derive(Debug, Args)]
pub struct Sweep {
    /// Every labeled connected graph on 3..=N vertices.
    #[arg(long, value_name = "N")]
    pub exhaustive: Option<usize>,
    /// N random graphs G(n, p) with n in 3..=max-n and p uniform.
    #[arg(long, value_name = "N")]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also print how often each branch label was taken.
    #[arg(long)]
    pub branch_stats: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Solver(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Solver(Error::IsolatedEdge { .. }) => 2,
            CliError::Solver(Error::Range(_) | Error::Budget(_) | Error::InvalidGraph(_)) => 1,
            CliError::Solver(_) => 3,
        }
    }
}

/// Runs a parsed command, writing its document to `out`. Returns the exit
/// code; errors are reported on `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Solve { input, dot, branch_stats } => {
            let doc = read_graph(&input)?;
            let report = solve(&doc.graph)?;
            if dot {
                write(out, &emit_dot(&doc, Some(&report.weighting)))?;
            } else {
                let valid = verify(&doc.graph, &report.weighting)?.is_empty();
                let mut sd = SolveDocument::new(&doc.graph, &report, valid);
                if branch_stats {
                    sd.branch_stats = Some(count_labels(&report.branch_trace));
                }
                write(out, &report::to_json(&sd))?;
            }
            Ok(0)
        }
        Command::Verify { input, weights } => {
            let doc = read_graph(&input)?;
            let text = read_source(&weights.display().to_string())?;
            let w = report::parse_weighting(&text).map_err(|e| CliError::Usage(format!("{}: {e}", weights.display())))?;
            let conflicts = verify(&doc.graph, &w)?;
            write(out, &report::to_json(&VerifyDocument::new(&conflicts)))?;
            Ok(0)
        }
        Command::Oracle { input, kmax } => {
            let doc = read_graph(&input)?;
            let min_k = brute_force_min_k(&doc.graph, kmax)?;
            write(out, &report::to_json(&OracleDocument { kmax, min_k }))?;
            Ok(0)
        }
        Command::Gen { family, dot, format } => {
            let g = generate_family(&family)?;
            let text = if dot {
                emit_dot(&GraphDocument::new(g, SourceFormat::EdgeList), None)
            } else if format == Format::Graph6 {
                emit_graph6(&g) + "\n"
            } else {
                emit_edge_list(&g)
            };
            write(out, &text)?;
            Ok(0)
        }
        Command::Sweep(s) => sweep(&s, out),
    }
}

fn generate_family(f: &Family) -> Result<Graph, CliError> {
    let spec = match *f {
        Family::Gnp { n, p, seed } => generate::GraphSpec::Gnp { n, p, seed },
        Family::Cycle { n } => generate::GraphSpec::Cycle(n),
        Family::Complete { n } => generate::GraphSpec::Complete(n),
        Family::Bipartite { a, b } => generate::GraphSpec::CompleteBipartite(a, b),
        Family::Tree { n, seed } => generate::GraphSpec::RandomTree { n, seed },
        Family::Petersen => generate::GraphSpec::Petersen,
    };
    Ok(generate::generate(&spec)?)
}

fn count_labels(trace: &[Branch]) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for b in trace {
        *counts.entry(b.as_str().to_string()).or_insert(0) += 1;
    }
    counts
}

#[derive(Default)]
struct Row {
    graphs: usize,
    valid: usize,
    skipped: usize,
    failed: usize,
}

fn sweep(s: &Sweep, out: &mut dyn Write) -> Result<i32, CliError> {
    if s.exhaustive.is_none() && s.random.is_none() {
        return Err(CliError::Usage("sweep needs --exhaustive N or --random N".into()));
    }
    let mut rows: BTreeMap<usize, Row> = BTreeMap::new();
    let mut labels: BTreeMap<Branch, usize> = Branch::ALL.iter().map(|&b| (b, 0)).collect();
    let mut failures = Vec::new();
    let mut tally = |g: &Graph| {
        let row = rows.entry(g.n()).or_default();
        row.graphs += 1;
        match solve(g) {
            Ok(r) if verify(g, &r.weighting).is_ok_and(|c| c.is_empty()) => {
                row.valid += 1;
                for b in r.branch_trace {
                    *labels.entry(b).or_default() += 1;
                }
            }
            Ok(_) => {
                row.failed += 1;
                failures.push(format!("conflict on {}", emit_graph6(g)));
            }
            Err(Error::IsolatedEdge { .. }) => row.skipped += 1,
            Err(e) => {
                row.failed += 1;
                failures.push(format!("{} on {}", e, emit_graph6(g)));
            }
        }
    };
    if let Some(n) = s.exhaustive {
        if !(3..=generate::MAX_ENUMERATION_N).contains(&n) {
            return Err(CliError::Usage(format!("--exhaustive takes 3..={}", generate::MAX_ENUMERATION_N)));
        }
        for k in 3..=n {
            generate::all_labeled_connected(k)?.for_each(|g| tally(&g));
        }
    }
    if let Some(count) = s.random {
        if s.max_n < 3 {
            return Err(CliError::Usage("--max-n must be at least 3".into()));
        }
        let mut rng = SplitMix64::new(s.seed);
        for _ in 0..count {
            let n = 3 + rng.below((s.max_n - 2) as u64) as usize;
            let p = rng.next_f64();
            tally(&generate::gnp(n, p, rng.next_u64())?);
        }
    }

    let mut text = format!("{:>4} {:>8} {:>8} {:>8} {:>8}\n", "n", "graphs", "valid", "skipped", "failed");
    let mut total = Row::default();
    for (n, r) in &rows {
        text += &format!("{n:>4} {:>8} {:>8} {:>8} {:>8}\n", r.graphs, r.valid, r.skipped, r.failed);
        total.graphs += r.graphs;
        total.valid += r.valid;
        total.skipped += r.skipped;
        total.failed += r.failed;
    }
    text += &format!("{:>4} {:>8} {:>8} {:>8} {:>8}\n", "all", total.graphs, total.valid, total.skipped, total.failed);
    if s.branch_stats {
        text += "\n";
        for (b, c) in &labels {
            text += &format!("{:<32} {c:>8}\n", b.as_str());
        }
    }
    for f in &failures {
        text += &format!("FAILED {f}\n");
    }
    write(out, &text)?;
    Ok(if total.failed == 0 { 0 } else { 3 })
}

fn read_source(path: &str) -> Result<String, CliError> {
    let io_err = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn read_graph(input: &Input) -> Result<GraphDocument, CliError> {
    let text = read_source(&input.path)?;
    Ok(match input.format {
        Format::Edges => parse_edge_list(&text)?,
        Format::Graph6 => parse_graph6(&text)?,
    })
}

fn write(out: &mut dyn Write, s: &str) -> Result<(), CliError> {
    out.write_all(s.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}
