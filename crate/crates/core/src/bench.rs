//! Seeded benchmark corpus: solver against oracle, with recursion counters
//! and wall time per instance, as CSV.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::generate::{self, GraphFamily};
use crate::graph::Graph;
use crate::oracle::{oracle_span, OracleBudget, OracleError};
use crate::solver::{solve, SolveError, SolverOptions};
use crate::labeling::Instance;

#[derive(Debug, Clone, Copy)]
pub struct BenchConfig {
    /// Largest vertex count in the corpus.
    pub max_n: usize,
    pub seed: u64,
    pub prune: bool,
    /// Per-instance limit, applied separately to the solver and the oracle.
    pub timeout: Option<Duration>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            max_n: 10,
            seed: 1,
            prune: false,
            timeout: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchCase {
    pub family: GraphFamily,
    pub label: String,
    pub graph: Graph,
}

/// Paths, cycles, cliques, stars, G(n, p) and (for `max_n >= 10`) the
/// Petersen graph. Clique and star sizes stop at 8; random graphs at 8.
pub fn corpus(cfg: &BenchConfig) -> Vec<BenchCase> {
    let mut cases = Vec::new();
    let mut push = |family: GraphFamily, label: String, graph: Graph| {
        cases.push(BenchCase { family, label, graph })
    };
    for n in 2..=cfg.max_n {
        push(GraphFamily::Path, format!("P{n}"), generate::path(n).unwrap());
    }
    for n in 3..=cfg.max_n {
        push(GraphFamily::Cycle, format!("C{n}"), generate::cycle(n).unwrap());
    }
    for n in 2..=cfg.max_n.min(8) {
        push(GraphFamily::Complete, format!("K{n}"), generate::complete(n).unwrap());
    }
    for n in 2..=cfg.max_n.min(8) {
        push(GraphFamily::Star, format!("K1-{}", n - 1), generate::star(n).unwrap());
    }
    for n in 4..=cfg.max_n.min(8) {
        for (i, p) in [0.3, 0.6].into_iter().enumerate() {
            let seed = cfg.seed.wrapping_mul(1000).wrapping_add((n * 10 + i) as u64);
            push(
                GraphFamily::Gnp,
                format!("G{n}-p{p}-s{seed}"),
                generate::gnp(n, p, seed).unwrap(),
            );
        }
    }
    if cfg.max_n >= 10 {
        push(GraphFamily::Petersen, "Petersen".into(), generate::petersen());
    }
    cases
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Ok,
    Timeout,
    /// Solver and oracle disagree.
    Mismatch,
    /// Recursion went deeper than `ceil(log2 n) + 1`.
    TooDeep,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::Timeout => "timeout",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::TooDeep => "TOO_DEEP",
        }
    }

    pub fn is_failure(self) -> bool {
        matches!(self, RowStatus::Mismatch | RowStatus::TooDeep)
    }
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub family: GraphFamily,
    pub label: String,
    pub n: usize,
    pub m: usize,
    pub solver_lambda: Option<i64>,
    pub oracle_lambda: Option<i64>,
    pub nodes: u64,
    pub max_depth: u32,
    pub partitions: u64,
    pub solver_time: Duration,
    pub oracle_time: Duration,
    pub status: RowStatus,
}

pub const CSV_HEADER: &str =
    "family,instance,n,m,solver_lambda,oracle_lambda,nodes,max_depth,partitions,solver_ms,oracle_ms,status";

impl BenchRow {
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<i64>| v.map_or_else(String::new, |x| x.to_string());
        let mut s = String::new();
        let _ = write!(
            s,
            "{},{},{},{},{},{},{},{},{},{:.3},{:.3},{}",
            self.family,
            self.label,
            self.n,
            self.m,
            opt(self.solver_lambda),
            opt(self.oracle_lambda),
            self.nodes,
            self.max_depth,
            self.partitions,
            self.solver_time.as_secs_f64() * 1e3,
            self.oracle_time.as_secs_f64() * 1e3,
            self.status.as_str()
        );
        s
    }
}

/// `ceil(log2 y) + 1`, the recursion depth allowed for a set of size `y >= 1`.
pub fn depth_limit(y: usize) -> u32 {
    debug_assert!(y >= 1);
    (usize::BITS - (y - 1).leading_zeros()) + 1
}

pub fn run_case(case: &BenchCase, cfg: &BenchConfig) -> BenchRow {
    let g = &case.graph;
    let deadline = cfg.timeout.map(|t| Instant::now() + t);
    let opts = SolverOptions {
        prune: cfg.prune,
        deadline,
        ..SolverOptions::default()
    };
    let started = Instant::now();
    let solved = solve(&Instance::whole(g), &opts);
    let solver_time = started.elapsed();
    let (solver_lambda, stats) = match solved {
        Ok(r) => (Some(i64::from(r.value) - 1), r.stats),
        Err(SolveError::Timeout { stats }) => (None, stats),
    };

    let budget = OracleBudget {
        deadline: cfg.timeout.map(|t| Instant::now() + t),
        ..OracleBudget::unlimited()
    };
    let started = Instant::now();
    let oracle_lambda = match oracle_span(g, budget) {
        Ok(v) => Some(v),
        Err(OracleError::Deadline { .. } | OracleError::NodeLimit { .. } | OracleError::LabelCap { .. }) => None,
    };
    let oracle_time = started.elapsed();

    let status = match (solver_lambda, oracle_lambda) {
        (Some(a), Some(b)) if a != b => RowStatus::Mismatch,
        _ if g.n() > 0 && stats.max_depth > depth_limit(g.n()) => RowStatus::TooDeep,
        (None, _) | (_, None) => RowStatus::Timeout,
        _ => RowStatus::Ok,
    };
    BenchRow {
        family: case.family,
        label: case.label.clone(),
        n: g.n(),
        m: g.edge_count(),
        solver_lambda,
        oracle_lambda,
        nodes: stats.nodes,
        max_depth: stats.max_depth,
        partitions: stats.partitions,
        solver_time,
        oracle_time,
        status,
    }
}

/// Runs the whole corpus, handing each row to `on_row` as it completes.
pub fn run_bench(cfg: &BenchConfig, mut on_row: impl FnMut(&BenchRow)) -> Vec<BenchRow> {
    corpus(cfg)
        .iter()
        .map(|case| {
            let row = run_case(case, cfg);
            on_row(&row);
            row
        })
        .collect()
}
