use std::io;
use std::process;

use clap::{Args, Parser, Subcommand};

use l21span::cli::{self, CliConfig, Command};
use l21span::{GraphFamily, GraphFormat};

/// Exact L(2,1)-span of small graphs.
#[derive(Parser)]
#[command(name = "l21span", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the span with the divide-and-conquer solver.
    Span(Opts),
    /// Compute the span with the brute-force oracle.
    Oracle(Opts),
    /// Check a labeling file against a graph.
    Verify(Opts),
    /// Print a generated graph.
    Gen(Opts),
    /// Run the solver and oracle over a seeded corpus, as CSV.
    Bench(Opts),
}

#[derive(Args)]
struct Opts {
    /// Graph file, or '-' for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, default_value = "edgelist", value_parser = parse_format)]
    format: GraphFormat,
    /// Labeling file for `verify` ("v label" per line).
    #[arg(long)]
    labeling: Option<String>,
    /// Also print an optimal labeling.
    #[arg(long)]
    certificate: bool,
    /// Enable branch-and-bound pruning (same result, less work).
    #[arg(long)]
    prune: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Give up after this many seconds (exit status 3).
    #[arg(long)]
    timeout: Option<f64>,
    /// path | cycle | complete | star | petersen | gnp
    #[arg(long, value_parser = parse_family)]
    family: Option<GraphFamily>,
    /// Vertex count for `gen`; largest corpus size for `bench`.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for gnp.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse()
}

fn parse_family(s: &str) -> Result<GraphFamily, String> {
    s.parse()
}

fn main() {
    let cli = Cli::parse();
    let (command, o) = match cli.command {
        Cmd::Span(o) => (Command::Span, o),
        Cmd::Oracle(o) => (Command::Oracle, o),
        Cmd::Verify(o) => (Command::Verify, o),
        Cmd::Gen(o) => (Command::Gen, o),
        Cmd::Bench(o) => (Command::Bench, o),
    };
    let cfg = CliConfig {
        command,
        input: o.input,
        format: o.format,
        labeling: o.labeling,
        certificate: o.certificate,
        prune: o.prune,
        json: o.json,
        seed: o.seed,
        timeout_seconds: o.timeout,
        family: o.family,
        n: o.n,
        p: o.p,
    };
    let code = cli::run(&cfg, &mut io::stdin().lock(), &mut io::stdout().lock(), &mut io::stderr().lock());
    process::exit(code);
}
