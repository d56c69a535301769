//! Command implementations behind the `l21span` binary.
//!
//! Each command reads from the given input stream and writes its report to
//! `out` (diagnostics to `err`), returning the process exit status:
//! 0 ok, 1 verification failed, 2 input error, 3 timeout.

use std::fs;
use std::io::{self, Read, Write};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bench::{self, BenchConfig, CSV_HEADER};
use crate::generate::{generate, GraphFamily};
use crate::graph::Graph;
use crate::io::{parse_graph, parse_labeling, write_graph, write_labeling, GraphFormat};
use crate::labeling::{check_labeling, Instance, PartialLabeling};
use crate::oracle::{oracle_span, OracleBudget, OracleError};
use crate::solver::{solve, RunStats, SolveError, SolverOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Span,
    Oracle,
    Verify,
    Gen,
    Bench,
}

#[derive(Debug, Clone)]
pub struct CliConfig {
    pub command: Command,
    /// Graph path, or `-` for standard input.
    pub input: String,
    pub format: GraphFormat,
    /// Labeling path for `verify`.
    pub labeling: Option<String>,
    pub certificate: bool,
    pub prune: bool,
    pub json: bool,
    pub seed: u64,
    pub timeout_seconds: Option<f64>,
    pub family: Option<GraphFamily>,
    pub n: Option<usize>,
    pub p: f64,
}

impl CliConfig {
    pub fn new(command: Command) -> Self {
        CliConfig {
            command,
            input: "-".into(),
            format: GraphFormat::EdgeList,
            labeling: None,
            certificate: false,
            prune: false,
            json: false,
            seed: 0,
            timeout_seconds: None,
            family: None,
            n: None,
            p: 0.5,
        }
    }

    fn deadline(&self) -> Option<Instant> {
        self.timeout().map(|t| Instant::now() + t)
    }

    fn timeout(&self) -> Option<Duration> {
        self.timeout_seconds.map(Duration::from_secs_f64)
    }
}

/// Reads `path`, or all of `stdin` when `path` is `-`.
fn read_source(path: &str, stdin: &mut dyn Read) -> io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn load_graph(cfg: &CliConfig, stdin: &mut dyn Read, err: &mut dyn Write) -> Option<Graph> {
    let text = match read_source(&cfg.input, stdin) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", cfg.input);
            return None;
        }
    };
    match parse_graph(&text, cfg.format) {
        Ok(g) => Some(g),
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", cfg.input);
            None
        }
    }
}

pub fn run(cfg: &CliConfig, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Some(t) = cfg.timeout_seconds {
        if !(t.is_finite() && t >= 0.0) {
            let _ = writeln!(err, "error: invalid timeout {t}");
            return EXIT_INPUT;
        }
    }
    match cfg.command {
        Command::Span => run_span(cfg, stdin, out, err),
        Command::Oracle => run_oracle(cfg, stdin, out, err),
        Command::Verify => run_verify(cfg, stdin, out, err),
        Command::Gen => run_gen(cfg, out, err),
        Command::Bench => run_bench(cfg, out, err),
    }
}

#[derive(Serialize)]
struct StatsReport {
    nodes: u64,
    max_depth: u32,
    partitions: u64,
}

impl From<&RunStats> for StatsReport {
    fn from(s: &RunStats) -> Self {
        StatsReport {
            nodes: s.nodes,
            max_depth: s.max_depth,
            partitions: s.partitions,
        }
    }
}

#[derive(Serialize)]
struct SpanReport {
    lambda: i64,
    n: usize,
    m: usize,
    stats: StatsReport,
    /// Label of vertex `i` at index `i`.
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Vec<u32>>,
}

#[derive(Serialize)]
struct TimeoutReport {
    timeout: bool,
    stats: StatsReport,
}

pub fn run_span(cfg: &CliConfig, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(g) = load_graph(cfg, stdin, err) else {
        return EXIT_INPUT;
    };
    let opts = SolverOptions {
        prune: cfg.prune,
        collect_certificate: cfg.certificate,
        deadline: cfg.deadline(),
        ..SolverOptions::default()
    };
    let inst = Instance::whole(&g);
    let result = match solve(&inst, &opts) {
        Ok(r) => r,
        Err(SolveError::Timeout { stats }) => {
            let _ = writeln!(err, "timeout: gave up after {} nodes", stats.nodes);
            if cfg.json {
                let report = TimeoutReport {
                    timeout: true,
                    stats: (&stats).into(),
                };
                let _ = writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                let _ = writeln!(
                    out,
                    "timeout: nodes = {}, max_depth = {}, partitions = {}",
                    stats.nodes, stats.max_depth, stats.partitions
                );
            }
            return EXIT_TIMEOUT;
        }
    };
    let lambda = i64::from(result.value) - 1;

    if let Some(c) = &result.certificate {
        if let Err(v) = check_labeling(&inst, c, result.value) {
            let _ = writeln!(err, "internal error: certificate rejected: {v}");
            return EXIT_INVALID;
        }
    }

    if cfg.json {
        let report = SpanReport {
            lambda,
            n: g.n(),
            m: g.edge_count(),
            stats: (&result.stats).into(),
            certificate: result
                .certificate
                .as_ref()
                .map(|c| (0..g.n()).map(|v| c.get(v).expect("total labeling")).collect()),
        };
        let _ = writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        let _ = writeln!(out, "lambda = {lambda}");
        if let Some(c) = &result.certificate {
            let _ = write!(out, "{}", write_labeling(c));
        }
    }
    EXIT_OK
}

#[derive(Serialize)]
struct OracleReport {
    lambda: i64,
    n: usize,
    m: usize,
}

pub fn run_oracle(cfg: &CliConfig, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(g) = load_graph(cfg, stdin, err) else {
        return EXIT_INPUT;
    };
    let budget = OracleBudget {
        deadline: cfg.deadline(),
        ..OracleBudget::unlimited()
    };
    match oracle_span(&g, budget) {
        Ok(lambda) => {
            if cfg.json {
                let report = OracleReport {
                    lambda,
                    n: g.n(),
                    m: g.edge_count(),
                };
                let _ = writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                let _ = writeln!(out, "lambda = {lambda}");
            }
            EXIT_OK
        }
        Err(e @ (OracleError::Deadline { .. } | OracleError::NodeLimit { .. })) => {
            let _ = writeln!(err, "timeout: {e}");
            EXIT_TIMEOUT
        }
        Err(e @ OracleError::LabelCap { .. }) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

/// Checks a labeling of the whole graph against the classical L(2,1)
/// condition with top label equal to its largest label.
pub fn run_verify(cfg: &CliConfig, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(path) = cfg.labeling.as_deref() else {
        let _ = writeln!(err, "error: verify needs --labeling PATH");
        return EXIT_INPUT;
    };
    if path == "-" && cfg.input == "-" {
        let _ = writeln!(err, "error: graph and labeling cannot both come from standard input");
        return EXIT_INPUT;
    }
    let Some(g) = load_graph(cfg, stdin, err) else {
        return EXIT_INPUT;
    };
    let labeling: PartialLabeling = match read_source(path, stdin) {
        Ok(text) => match parse_labeling(&text) {
            Ok(c) => c,
            Err(e) => {
                let _ = writeln!(err, "error: {path}: {e}");
                return EXIT_INPUT;
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {path}: {e}");
            return EXIT_INPUT;
        }
    };

    let k = labeling.span().map_or(0, |s| s + 1);
    match check_labeling(&Instance::whole(&g), &labeling, k) {
        Ok(()) => {
            let span = labeling.span().map_or(-1, i64::from);
            let _ = writeln!(out, "valid L(2,1)-labeling with span {span}");
            EXIT_OK
        }
        Err(v) => {
            let _ = writeln!(out, "invalid: {v}");
            EXIT_INVALID
        }
    }
}

pub fn run_gen(cfg: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(family) = cfg.family else {
        let _ = writeln!(err, "error: gen needs --family");
        return EXIT_INPUT;
    };
    let n = match (cfg.n, family) {
        (Some(n), _) => n,
        (None, GraphFamily::Petersen) => 10,
        (None, _) => {
            let _ = writeln!(err, "error: gen needs --n");
            return EXIT_INPUT;
        }
    };
    match generate(family, n, cfg.p, cfg.seed) {
        Ok(g) => {
            let _ = write!(out, "{}", write_graph(&g, cfg.format));
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn run_bench(cfg: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let bcfg = BenchConfig {
        max_n: cfg.n.unwrap_or(10),
        seed: cfg.seed,
        prune: cfg.prune,
        timeout: cfg.timeout(),
    };
    let _ = writeln!(out, "{CSV_HEADER}");
    let rows = bench::run_bench(&bcfg, |row| {
        let _ = writeln!(out, "{}", row.to_csv());
        let _ = out.flush();
    });
    let failures = rows.iter().filter(|r| r.status.is_failure()).count();
    if failures > 0 {
        let _ = writeln!(err, "{failures} instance(s) failed the solver/oracle or depth check");
        EXIT_INVALID
    } else {
        EXIT_OK
    }
}
