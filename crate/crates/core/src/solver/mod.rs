//! Exact divide-and-conquer computation of the generalized span
//! `Λ_Z^M(Y, G)`: the least `k` such that `Y` has a `(k-1)`-labeling that
//! keeps label 0 off `Z` and label `k-1` off `M`.
//!
//! A node of the recursion first tries all labelings with three labels.
//! If none works it ranges over every G-correct partition `(A, X, B)` of
//! `Y`. `X` takes a single label that separates the labels of `A` (below)
//! from those of `B` (above), so the two halves are solved independently:
//! `A` with the top label kept off `N(X)`, `B` with label 0 kept off `N(X)`.
//! The answer is the minimum of `k_A + k_X + k_B`, where `k_X` is 1, or 2
//! when `X` sits at the bottom and meets `Z` or at the top and meets `M`.
//!
//! Both halves have at most `|Y| / 2` vertices, so the depth is
//! logarithmic. Nothing is memoized: a node holds O(|Y|) words and the
//! live state along any root-to-leaf path is polynomial.

mod base_case;
mod partitions;

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::{VertexSet, WORDS};
use crate::graph::Graph;
use crate::labeling::{Instance, PartialLabeling};

pub use base_case::base_case_span;
pub use partitions::{enumerate_correct_partitions, CorrectPartition, CorrectPartitions};

/// Upper bound on auxiliary words held by one active recursion level, as a
/// multiple of `n^2` (with `n` taken as at least 1). Checked by the
/// instrumentation tests.
pub const AUX_WORDS_PER_LEVEL_FACTOR: usize = 16;

/// Vertex sets and scalars live in a recursion frame: `Y`, `Z`, `M`, the
/// current `(A, X, B)`, `N(X)`, and the argmin partition when certifying.
const FRAME_WORDS: usize = 10 * WORDS + 6;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum StatLevel {
    /// Node, depth, partition and candidate counters.
    #[default]
    Counters,
    /// Counters plus the peak of live auxiliary words along the recursion.
    Full,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverOptions {
    /// Skip partitions whose lower bound cannot beat the best value found,
    /// and pass the remaining budget down as a cutoff. Never changes the
    /// result.
    pub prune: bool,
    /// Reconstruct an optimal labeling alongside the value.
    pub collect_certificate: bool,
    pub stats: StatLevel,
    /// Checked between partition iterations.
    pub deadline: Option<Instant>,
}

impl SolverOptions {
    pub fn pruned() -> Self {
        SolverOptions {
            prune: true,
            ..Self::default()
        }
    }

    pub fn with_full_stats(mut self) -> Self {
        self.stats = StatLevel::Full;
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RunStats {
    /// Recursive calls, including calls on empty sets.
    pub nodes: u64,
    /// Deepest call; the root has depth 1.
    pub max_depth: u32,
    /// G-correct partitions examined.
    pub partitions: u64,
    /// Candidate functions `Y -> {0, 1, 2}` tested by base cases.
    pub base_case_labelings: u64,
    /// Maximum auxiliary words live at once along a recursion path
    /// (zero unless `StatLevel::Full`).
    pub peak_aux: usize,
}

impl RunStats {
    /// Folds in stats from an independent run: counters add, peaks take the max.
    pub fn merge(&mut self, other: &RunStats) {
        self.nodes += other.nodes;
        self.partitions += other.partitions;
        self.base_case_labelings += other.base_case_labelings;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.peak_aux = self.peak_aux.max(other.peak_aux);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanResult {
    /// `Λ_Z^M(Y, G)`.
    pub value: u32,
    pub certificate: Option<PartialLabeling>,
    pub stats: RunStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("deadline reached after {} recursion nodes", stats.nodes)]
    Timeout { stats: RunStats },
}

struct Interrupted;

/// Labels separating `A` from `B`: one for `X` itself, plus one unused
/// label when `X` is at the bottom and meets `Z` (label 0 forbidden) or at
/// the top and meets `M` (top label forbidden).
///
/// Panics if both parts are empty; that case never survives the base case,
/// because then `Y = X` is a 2-packing and three labels suffice.
pub fn kx_value(a_empty: bool, b_empty: bool, x_meets_z: bool, x_meets_m: bool) -> u32 {
    match (a_empty, b_empty) {
        (false, false) => 1,
        (true, false) => 1 + u32::from(x_meets_z),
        (false, true) => 1 + u32::from(x_meets_m),
        (true, true) => panic!("G-correct partition with A and B both empty reached the split"),
    }
}

/// Builds a labeling of `A ∪ X ∪ B` from optimal labelings of the halves.
fn compose(
    p: &CorrectPartition,
    kx: u32,
    ka: u32,
    ca: PartialLabeling,
    cb: PartialLabeling,
) -> PartialLabeling {
    let mut c = ca;
    match (p.a.is_empty(), p.b.is_empty()) {
        // A below, X on k_A, B shifted above
        (false, false) => {
            c.extend_from(&PartialLabeling::constant(&p.x, ka));
            c.extend_from(&cb.shift(i64::from(ka) + 1).expect("upward shift"));
        }
        // X on 0, or on 1 when label 0 is forbidden on part of X
        (true, false) => {
            let x_label = kx - 1;
            c.extend_from(&PartialLabeling::constant(&p.x, x_label));
            c.extend_from(&cb.shift(i64::from(kx)).expect("upward shift"));
        }
        // X on k_A; with k_X = 2 the top label k_A + 1 stays unused
        (false, true) => {
            c.extend_from(&PartialLabeling::constant(&p.x, ka));
        }
        (true, true) => unreachable!("rejected by kx_value"),
    }
    c
}

struct Search<'g> {
    g: &'g Graph,
    sq: &'g [VertexSet],
    prune: bool,
    track_aux: bool,
    deadline: Option<Instant>,
    stats: RunStats,
    live_aux: usize,
    ticks: u32,
}

const UNBOUNDED: u32 = u32::MAX;

impl<'g> Search<'g> {
    fn new(g: &'g Graph, opts: &SolverOptions) -> Self {
        Search {
            g,
            sq: g.square_adjacency(),
            prune: opts.prune,
            track_aux: opts.stats == StatLevel::Full,
            deadline: opts.deadline,
            stats: RunStats::default(),
            live_aux: 0,
            ticks: 0,
        }
    }

    fn enter_node(&mut self, depth: u32) {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
    }

    fn hold(&mut self, words: usize) {
        if self.track_aux {
            self.live_aux += words;
            self.stats.peak_aux = self.stats.peak_aux.max(self.live_aux);
        }
    }

    fn release(&mut self, words: usize) {
        if self.track_aux {
            self.live_aux -= words;
        }
    }

    fn tick(&mut self) -> Result<(), Interrupted> {
        self.stats.partitions += 1;
        self.ticks = self.ticks.wrapping_add(1);
        match self.deadline {
            Some(d) if self.ticks % 64 == 0 && Instant::now() >= d => Err(Interrupted),
            _ => Ok(()),
        }
    }

    fn base_case(&mut self, y: &VertexSet, z: &VertexSet, m: &VertexSet, witness: bool) -> base_case::BaseCase {
        let out = base_case::scan(self.g, y, z, m, witness);
        self.stats.base_case_labelings += out.candidates;
        self.hold(out.aux_words);
        self.release(out.aux_words);
        out
    }

    /// `Λ_Z^M(Y)` when it is below `bound`; otherwise some value `>= bound`.
    /// Without pruning `bound` is ignored and the value is always exact.
    fn lambda(&mut self, y: VertexSet, z: VertexSet, m: VertexSet, depth: u32, bound: u32) -> Result<u32, Interrupted> {
        self.enter_node(depth);
        if y.is_empty() {
            return Ok(0);
        }
        if let Some(k) = self.base_case(&y, &z, &m, false).k {
            return Ok(k);
        }

        let mut parts = CorrectPartitions::new(self.sq, y);
        let held = FRAME_WORDS + parts.aux_words();
        self.hold(held);
        let result = self.split_min(&mut parts, z, m, depth, bound);
        self.release(held);
        result.map(|(k, _)| k)
    }

    /// Minimum of `k_A + k_X + k_B` over the partitions, with the argmin.
    fn split_min(
        &mut self,
        parts: &mut CorrectPartitions,
        z: VertexSet,
        m: VertexSet,
        depth: u32,
        bound: u32,
    ) -> Result<(u32, Option<(CorrectPartition, u32)>), Interrupted> {
        let mut best = if self.prune { bound } else { UNBOUNDED };
        let mut argmin = None;
        for p in parts {
            self.tick()?;
            let kx = kx_value(p.a.is_empty(), p.b.is_empty(), p.x.intersects(&z), p.x.intersects(&m));
            let nx = self.g.open_neighborhood(&p.x);
            let total = if self.prune {
                let lb_a = u32::from(!p.a.is_empty());
                let lb_b = u32::from(!p.b.is_empty());
                if kx + lb_a + lb_b >= best {
                    continue;
                }
                let ka = self.lambda(p.a, z, nx, depth + 1, best - kx - lb_b)?;
                if ka + kx + lb_b >= best {
                    continue;
                }
                let kb = self.lambda(p.b, nx, m, depth + 1, best - ka - kx)?;
                ka + kx + kb
            } else {
                let ka = self.lambda(p.a, z, nx, depth + 1, UNBOUNDED)?;
                let kb = self.lambda(p.b, nx, m, depth + 1, UNBOUNDED)?;
                ka + kx + kb
            };
            if total < best {
                best = total;
                argmin = Some((p, kx));
            }
        }
        Ok((best, argmin))
    }

    /// Exact `Λ_Z^M(Y)` with an optimal labeling. Finds the argmin partition
    /// by value-only search, then certifies its two halves recursively.
    fn certify(&mut self, y: VertexSet, z: VertexSet, m: VertexSet, depth: u32) -> Result<(u32, PartialLabeling), Interrupted> {
        self.enter_node(depth);
        if y.is_empty() {
            return Ok((0, PartialLabeling::new()));
        }
        let base = self.base_case(&y, &z, &m, true);
        if let Some(k) = base.k {
            return Ok((k, base.witness.expect("witness requested")));
        }

        let mut parts = CorrectPartitions::new(self.sq, y);
        let held = FRAME_WORDS + parts.aux_words();
        self.hold(held);
        let found = self.split_min(&mut parts, z, m, depth, UNBOUNDED);
        let found = match found {
            Ok(f) => f,
            Err(e) => {
                self.release(held);
                return Err(e);
            }
        };
        let (k, (p, kx)) = match found {
            (k, Some(arg)) => (k, arg),
            (_, None) => unreachable!("a G-correct partition exists whenever more than three labels are needed"),
        };
        let nx = self.g.open_neighborhood(&p.x);
        let (ka, ca) = match self.certify(p.a, z, nx, depth + 1) {
            Ok(a) => a,
            Err(e) => {
                self.release(held);
                return Err(e);
            }
        };
        // the labeling of A stays live while B is certified
        let held_a = 2 * ca.len();
        self.hold(held_a);
        let b = self.certify(p.b, nx, m, depth + 1);
        self.release(held_a);
        self.release(held);
        let (kb, cb) = b?;
        debug_assert_eq!(ka + kx + kb, k);
        Ok((k, compose(&p, kx, ka, ca, cb)))
    }
}

/// Computes `Λ_Z^M(Y, G)` under `opts`, honoring the deadline.
pub fn solve(inst: &Instance, opts: &SolverOptions) -> Result<SpanResult, SolveError> {
    let mut search = Search::new(inst.graph, opts);
    let outcome = if opts.collect_certificate {
        search
            .certify(inst.y, inst.z, inst.m, 1)
            .map(|(k, c)| (k, Some(c)))
    } else {
        search
            .lambda(inst.y, inst.z, inst.m, 1, UNBOUNDED)
            .map(|k| (k, None))
    };
    match outcome {
        Ok((value, certificate)) => Ok(SpanResult {
            value,
            certificate,
            stats: search.stats,
        }),
        Err(Interrupted) => Err(SolveError::Timeout {
            stats: search.stats,
        }),
    }
}

/// `Λ_Z^M(Y, G)` and the run statistics. Any deadline in `opts` is ignored.
pub fn find_lambda(inst: &Instance, opts: &SolverOptions) -> (u32, RunStats) {
    let opts = SolverOptions {
        deadline: None,
        collect_certificate: false,
        ..*opts
    };
    match solve(inst, &opts) {
        Ok(r) => (r.value, r.stats),
        Err(SolveError::Timeout { .. }) => unreachable!("no deadline set"),
    }
}

/// The L(2,1)-span λ(G) = Λ(V, ∅, ∅) − 1. The graph on zero vertices gives −1.
pub fn lambda_span(g: &Graph, opts: &SolverOptions) -> (i64, RunStats) {
    let (k, stats) = find_lambda(&Instance::whole(g), opts);
    (i64::from(k) - 1, stats)
}

/// `Λ_Z^M(Y, G)` together with an optimal labeling.
pub fn find_labeling(inst: &Instance) -> (u32, PartialLabeling) {
    let opts = SolverOptions {
        collect_certificate: true,
        ..SolverOptions::default()
    };
    match solve(inst, &opts) {
        Ok(SpanResult {
            value,
            certificate: Some(c),
            ..
        }) => (value, c),
        _ => unreachable!("certificate requested without a deadline"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, petersen};
    use crate::labeling::is_valid_labeling;

    fn none() -> VertexSet {
        VertexSet::empty()
    }

    #[test]
    fn kx_table() {
        for z in [false, true] {
            for m in [false, true] {
                assert_eq!(kx_value(false, false, z, m), 1);
            }
        }
        assert_eq!(kx_value(true, false, false, true), 1);
        assert_eq!(kx_value(true, false, true, false), 2);
        assert_eq!(kx_value(false, true, true, false), 1);
        assert_eq!(kx_value(false, true, false, true), 2);
    }

    #[test]
    #[should_panic]
    fn kx_rejects_both_empty() {
        kx_value(true, true, false, false);
    }

    #[test]
    fn empty_domain() {
        let g = path(3).unwrap();
        let all = g.vertices();
        let inst = Instance::new(&g, none(), all, all).unwrap();
        assert_eq!(find_lambda(&inst, &SolverOptions::default()).0, 0);
    }

    #[test]
    fn small_values() {
        let opts = SolverOptions::default();
        assert_eq!(find_lambda(&Instance::whole(&complete(2).unwrap()), &opts).0, 3);
        assert_eq!(find_lambda(&Instance::whole(&path(4).unwrap()), &opts).0, 4);
        let g = path(1).unwrap();
        let v = VertexSet::singleton(0);
        assert_eq!(find_lambda(&Instance::new(&g, v, v, v).unwrap(), &opts).0, 3);
    }

    #[test]
    fn classical_spans() {
        let opts = SolverOptions::default();
        assert_eq!(lambda_span(&complete(2).unwrap(), &opts).0, 2);
        assert_eq!(lambda_span(&cycle(4).unwrap(), &opts).0, 4);
        assert_eq!(lambda_span(&complete(5).unwrap(), &opts).0, 8);
        assert_eq!(lambda_span(&Graph::empty(0).unwrap(), &opts).0, -1);
    }

    #[test]
    fn petersen_pruned() {
        let (span, stats) = lambda_span(&petersen(), &SolverOptions::pruned());
        assert_eq!(span, 9);
        assert!(stats.max_depth <= 5);
    }

    #[test]
    fn certificates() {
        let g = complete(2).unwrap();
        let (k, c) = find_labeling(&Instance::whole(&g));
        assert_eq!(k, 3);
        let mut labels: Vec<u32> = c.iter().map(|(_, l)| l).collect();
        labels.sort();
        assert_eq!(labels, vec![0, 2]);

        let g = path(3).unwrap();
        let inst = Instance::whole(&g);
        let (k, c) = find_labeling(&inst);
        assert_eq!(k, 4);
        assert!(is_valid_labeling(&inst, &c, k));
        assert!(c.span().unwrap() <= 3);
    }

    #[test]
    fn compose_bottom_case_with_z() {
        // K2 with Z = M = both: labels 1 and 3 of 0..5
        let g = complete(2).unwrap();
        let all = g.vertices();
        let inst = Instance::new(&g, all, all, all).unwrap();
        let (k, c) = find_labeling(&inst);
        assert_eq!(k, 5);
        assert!(is_valid_labeling(&inst, &c, k));
    }

    #[test]
    fn timeout_reports_partial_stats() {
        let g = complete(9).unwrap();
        let opts = SolverOptions {
            deadline: Some(Instant::now()),
            ..SolverOptions::default()
        };
        match solve(&Instance::whole(&g), &opts) {
            Err(SolveError::Timeout { stats }) => assert!(stats.partitions >= 64),
            Ok(_) => panic!("expected a timeout"),
        }
    }

    #[test]
    fn full_stats_track_aux() {
        let g = cycle(6).unwrap();
        let (_, stats) = find_lambda(&Instance::whole(&g), &SolverOptions::default().with_full_stats());
        assert!(stats.peak_aux > 0);
        let (_, stats) = find_lambda(&Instance::whole(&g), &SolverOptions::default());
        assert_eq!(stats.peak_aux, 0);
    }
}
