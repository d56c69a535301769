//! Enumeration of G-correct partitions `(A, X, B)` of a vertex set `Y`:
//! `X` is a nonempty 2-packing and both `|A|` and `|B|` are at most
//! `floor(|Y| / 2)`.
//!
//! `X` is generated first, as a nonempty independent set of the square
//! restricted to `Y`, by a depth-first search in increasing vertex order.
//! For each `X` the remaining vertices are split into `(A, B)` by walking
//! the admissible sizes of `A` and, for each size, the combinations of that
//! size in colexicographic order.

use crate::bitset::{VertexSet, WORDS};
use crate::labeling::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorrectPartition {
    pub a: VertexSet,
    pub x: VertexSet,
    pub b: VertexSet,
}

/// Streaming enumerator; holds O(|Y|) words of state.
pub struct CorrectPartitions<'g> {
    sq: &'g [VertexSet],
    y: VertexSet,
    half: usize,
    /// Search frames `(X, candidates still addable to X)`.
    stack: Vec<(VertexSet, VertexSet)>,
    x: VertexSet,
    rest: Vec<usize>,
    size: usize,
    max_size: usize,
    pending: Option<u64>,
}

impl<'g> CorrectPartitions<'g> {
    pub(crate) fn new(sq: &'g [VertexSet], y: VertexSet) -> Self {
        let n = y.len();
        let mut stack = Vec::with_capacity(n + 1);
        stack.push((VertexSet::empty(), y));
        CorrectPartitions {
            sq,
            y,
            half: n / 2,
            stack,
            x: VertexSet::empty(),
            rest: Vec::with_capacity(n),
            size: 0,
            max_size: 0,
            pending: None,
        }
    }

    /// Machine words of state held by the enumerator.
    pub fn aux_words(&self) -> usize {
        self.stack.capacity() * 2 * WORDS + self.rest.capacity() + 2 * WORDS + 4
    }

    fn next_x(&mut self) -> Option<VertexSet> {
        loop {
            let (x, cand) = self.stack.last_mut()?;
            match cand.pop_first() {
                Some(v) => {
                    let mut grown = *x;
                    grown.insert(v);
                    let narrowed = cand.difference(&self.sq[v]);
                    self.stack.push((grown, narrowed));
                    return Some(grown);
                }
                None => {
                    self.stack.pop();
                }
            }
        }
    }

    fn start_x(&mut self, x: VertexSet) {
        self.x = x;
        self.rest.clear();
        self.rest.extend(self.y.difference(&x).iter());
        let r = self.rest.len();
        assert!(r < 64, "too many vertices left to split");
        let lo = r.saturating_sub(self.half);
        let hi = r.min(self.half);
        if lo > hi {
            self.pending = None;
            return;
        }
        self.size = lo;
        self.max_size = hi;
        self.pending = Some(first_combination(lo));
    }

    fn advance(&mut self, current: u64) {
        let r = self.rest.len();
        self.pending = next_combination(current, r);
        if self.pending.is_none() && self.size < self.max_size {
            self.size += 1;
            self.pending = Some(first_combination(self.size));
        }
    }
}

fn first_combination(size: usize) -> u64 {
    if size == 0 {
        0
    } else {
        u64::MAX >> (64 - size)
    }
}

/// Next bitmask with the same popcount below `1 << width` (Gosper).
fn next_combination(c: u64, width: usize) -> Option<u64> {
    if c == 0 {
        return None;
    }
    let low = c & c.wrapping_neg();
    let ripple = c.checked_add(low)?;
    let next = ripple | (((c ^ ripple) >> 2) / low);
    (next >> width == 0).then_some(next)
}

impl Iterator for CorrectPartitions<'_> {
    type Item = CorrectPartition;

    fn next(&mut self) -> Option<CorrectPartition> {
        loop {
            if let Some(mask) = self.pending {
                self.advance(mask);
                let mut a = VertexSet::empty();
                let mut bits = mask;
                while bits != 0 {
                    a.insert(self.rest[bits.trailing_zeros() as usize]);
                    bits &= bits - 1;
                }
                let b = self
                    .rest
                    .iter()
                    .copied()
                    .filter(|&v| !a.contains(v))
                    .collect();
                return Some(CorrectPartition { a, x: self.x, b });
            }
            let x = self.next_x()?;
            self.start_x(x);
        }
    }
}

/// Every G-correct partition of `inst.y`, each exactly once, in a fixed
/// order determined by the graph and `Y`.
pub fn enumerate_correct_partitions<'g>(inst: &Instance<'g>) -> CorrectPartitions<'g> {
    CorrectPartitions::new(inst.graph.square_adjacency(), inst.y)
}
