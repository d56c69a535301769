//! Named graph families and seeded random graphs.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Path,
    Cycle,
    Complete,
    /// `n` vertices: one center and `n - 1` leaves.
    Star,
    /// Always 10 vertices.
    Petersen,
    /// Erdős–Rényi G(n, p).
    Gnp,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 6] = [
        GraphFamily::Path,
        GraphFamily::Cycle,
        GraphFamily::Complete,
        GraphFamily::Star,
        GraphFamily::Petersen,
        GraphFamily::Gnp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphFamily::Path => "path",
            GraphFamily::Cycle => "cycle",
            GraphFamily::Complete => "complete",
            GraphFamily::Star => "star",
            GraphFamily::Petersen => "petersen",
            GraphFamily::Gnp => "gnp",
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown graph family {s:?}"))
    }
}

/// Builds a member of `family`. `p` and `seed` only matter for `Gnp`;
/// `Petersen` requires `n == 10`.
pub fn generate(family: GraphFamily, n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("n must be at least 1".into()));
    }
    match family {
        GraphFamily::Path => path(n),
        GraphFamily::Cycle => cycle(n),
        GraphFamily::Complete => complete(n),
        GraphFamily::Star => star(n),
        GraphFamily::Petersen if n == 10 => Ok(petersen()),
        GraphFamily::Petersen => Err(GraphError::InvalidParameter(format!(
            "the Petersen graph has 10 vertices, got n = {n}"
        ))),
        GraphFamily::Gnp => gnp(n, p, seed),
    }
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// K_{1, n-1} with center 0.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

/// Outer 5-cycle on 0..5, inner pentagram on 5..10, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen edges are valid")
}

/// G(n, p): each pair independently with probability `p`, deterministic in `seed`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidParameter(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}
