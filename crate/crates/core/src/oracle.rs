//! Brute-force reference values for `Λ_Z^M(Y, G)` and `λ(G)`.
//!
//! [`oracle_decide`] backtracks over `Y` in a fixed fail-first order,
//! assigning labels `0..k` and pruning on distance-1 and distance-2
//! conflicts and on the `Z`/`M` exclusions. [`oracle_lambda`] scans `k`
//! upward from 0. The scan is linear on purpose: with `M` nonempty,
//! feasibility is not monotone in `k`, so bisection would be wrong.
//!
//! [`exhaustive_lambda`] is a second, dumber reference that enumerates all
//! label vectors and measures distances by its own BFS. It exists to check
//! the backtracking oracle on tiny graphs.

use std::collections::VecDeque;
use std::time::Instant;

use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::Instance;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OracleBudget {
    /// Give up instead of trying more than this many labels.
    pub max_k: Option<u32>,
    /// Give up after this many backtracking nodes, summed over the k-scan.
    pub node_limit: Option<u64>,
    pub deadline: Option<Instant>,
}

impl OracleBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }
}

/// The oracle ran out of budget; the answer is unknown, not negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("node budget exhausted after {nodes} nodes")]
    NodeLimit { nodes: u64 },
    #[error("no labeling with at most {max_k} labels")]
    LabelCap { max_k: u32 },
    #[error("deadline reached after {nodes} nodes")]
    Deadline { nodes: u64 },
}

struct Backtracker<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    in_z: Vec<bool>,
    in_m: Vec<bool>,
    labels: Vec<Option<u32>>,
    nodes: u64,
    budget: OracleBudget,
}

impl<'a> Backtracker<'a> {
    fn new(inst: &Instance<'a>, budget: OracleBudget) -> Self {
        let g = inst.graph;
        let sq = g.square_adjacency();
        let mut order: Vec<usize> = inst.y.iter().collect();
        // descending square degree, ties by index
        order.sort_by_key(|&v| (std::cmp::Reverse(sq[v].len()), v));
        Backtracker {
            g,
            order,
            in_z: (0..g.n()).map(|v| inst.z.contains(v)).collect(),
            in_m: (0..g.n()).map(|v| inst.m.contains(v)).collect(),
            labels: vec![None; g.n()],
            nodes: 0,
            budget,
        }
    }

    fn fits(&self, v: usize, label: u32, k: u32) -> bool {
        if label == 0 && self.in_z[v] {
            return false;
        }
        if label == k - 1 && self.in_m[v] {
            return false;
        }
        self.g.square_neighbors(v).iter().all(|u| match self.labels[u] {
            None => true,
            Some(other) if self.g.is_adjacent(u, v) => label.abs_diff(other) >= 2,
            Some(other) => label != other,
        })
    }

    fn extend(&mut self, i: usize, k: u32) -> Result<bool, OracleError> {
        self.nodes += 1;
        if let Some(limit) = self.budget.node_limit {
            if self.nodes > limit {
                return Err(OracleError::NodeLimit { nodes: self.nodes });
            }
        }
        if let Some(d) = self.budget.deadline {
            if self.nodes % 1024 == 0 && Instant::now() >= d {
                return Err(OracleError::Deadline { nodes: self.nodes });
            }
        }
        let Some(&v) = self.order.get(i) else {
            return Ok(true);
        };
        for label in 0..k {
            if self.fits(v, label, k) {
                self.labels[v] = Some(label);
                if self.extend(i + 1, k)? {
                    self.labels[v] = None;
                    return Ok(true);
                }
                self.labels[v] = None;
            }
        }
        Ok(false)
    }

    fn decide(&mut self, k: u32) -> Result<bool, OracleError> {
        if k == 0 {
            return Ok(self.order.is_empty());
        }
        self.extend(0, k)
    }
}

/// Whether a `(k-1)`-labeling of `inst` exists.
pub fn oracle_decide(inst: &Instance, k: u32, budget: OracleBudget) -> Result<bool, OracleError> {
    Backtracker::new(inst, budget).decide(k)
}

/// Least `k` admitting a `(k-1)`-labeling, by scanning `k = 0, 1, 2, ...`.
pub fn oracle_lambda(inst: &Instance, budget: OracleBudget) -> Result<u32, OracleError> {
    let mut search = Backtracker::new(inst, budget);
    let ceiling = 2 * inst.y.len() as u32 + 2;
    for k in 0..=ceiling {
        if let Some(max_k) = budget.max_k {
            if k > max_k {
                return Err(OracleError::LabelCap { max_k });
            }
        }
        if search.decide(k)? {
            return Ok(k);
        }
    }
    // distinct even labels, shifted past Z and capped by an unused top label, always work
    panic!("no labeling with {ceiling} labels; the instance is malformed");
}

/// `λ(G)`: the least top label of an L(2,1)-labeling of the whole graph.
pub fn oracle_span(g: &Graph, budget: OracleBudget) -> Result<i64, OracleError> {
    oracle_lambda(&Instance::whole(g), budget).map(|k| i64::from(k) - 1)
}

/// Single-source BFS distances; `None` for unreachable vertices.
fn bfs(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have distances");
        for v in g.neighbors(u).iter() {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Least `k` found by trying every vector in `{0..k}^Y` for `k = 0, 1, ...`.
/// Exponential in `|Y|` with a large base; intended for `|Y| <= 6`.
pub fn exhaustive_lambda(inst: &Instance) -> u32 {
    let g = inst.graph;
    let ys: Vec<usize> = inst.y.iter().collect();
    let dist: Vec<Vec<Option<usize>>> = ys.iter().map(|&v| bfs(g, v)).collect();
    let valid = |labels: &[u32], k: u32| -> bool {
        for (i, &v) in ys.iter().enumerate() {
            if labels[i] == 0 && inst.z.contains(v) {
                return false;
            }
            if labels[i] == k - 1 && inst.m.contains(v) {
                return false;
            }
            for (j, &u) in ys.iter().enumerate().skip(i + 1) {
                let gap = labels[i].abs_diff(labels[j]);
                match dist[i][u] {
                    Some(1) if gap < 2 => return false,
                    Some(2) if gap < 1 => return false,
                    _ => {}
                }
            }
        }
        true
    };
    if ys.is_empty() {
        return 0;
    }
    for k in 1.. {
        let mut labels = vec![0u32; ys.len()];
        loop {
            if valid(&labels, k) {
                return k;
            }
            let mut i = 0;
            while i < labels.len() && labels[i] == k - 1 {
                labels[i] = 0;
                i += 1;
            }
            if i == labels.len() {
                break;
            }
            labels[i] += 1;
        }
    }
    unreachable!()
}

/// `λ(G)` by [`exhaustive_lambda`].
pub fn exhaustive_span(g: &Graph) -> i64 {
    i64::from(exhaustive_lambda(&Instance::whole(g))) - 1
}
