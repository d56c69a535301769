//! Exhaustive check for spans of at most three labels.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::labeling::{Instance, PartialLabeling};

/// Outcome of scanning all `c: Y -> {0, 1, 2}`.
pub(crate) struct BaseCase {
    /// Smallest `k <= 3` admitting a `(k-1)`-labeling.
    pub k: Option<u32>,
    /// A labeling achieving `k`, when requested.
    pub witness: Option<PartialLabeling>,
    /// Number of candidate functions examined.
    pub candidates: u64,
    /// Words of scratch state held during the scan.
    pub aux_words: usize,
}

/// Smallest `k` in `1..=3` for which the labeling with label classes
/// `classes` is a `(k-1)`-labeling, or `None`.
fn min_k_for(g: &Graph, sq: &[VertexSet], classes: &[VertexSet; 3], z: &VertexSet, m: &VertexSet) -> Option<u32> {
    if classes[0].intersects(z) {
        return None;
    }
    // equal labels need distance > 2
    for class in classes {
        if class.iter().any(|v| sq[v].intersects(class)) {
            return None;
        }
    }
    // consecutive labels need distance > 1
    for pair in classes.windows(2) {
        if pair[0].iter().any(|v| g.neighbors(v).intersects(&pair[1])) {
            return None;
        }
    }
    let used = classes.iter().rposition(|c| !c.is_empty()).unwrap_or(0) as u32;
    (used + 1..=3).find(|&k| !classes[(k - 1) as usize].intersects(m))
}

/// Scans every function `Y -> {0, 1, 2}` in odometer order and returns the
/// least `k` any of them achieves. An empty `Y` gives `k = 0`.
pub(crate) fn scan(g: &Graph, y: &VertexSet, z: &VertexSet, m: &VertexSet, want_witness: bool) -> BaseCase {
    if y.is_empty() {
        return BaseCase {
            k: Some(0),
            witness: want_witness.then(PartialLabeling::new),
            candidates: 0,
            aux_words: 0,
        };
    }
    let sq = g.square_adjacency();
    let verts: Vec<usize> = y.iter().collect();
    let mut digits = vec![0u8; verts.len()];
    let aux_words = verts.capacity() + digits.capacity().div_ceil(8) + 3 * crate::bitset::WORDS;

    let mut classes = [*y, VertexSet::empty(), VertexSet::empty()];
    let mut best: Option<(u32, Vec<u8>)> = None;
    let mut candidates = 0u64;
    loop {
        candidates += 1;
        if let Some(k) = min_k_for(g, sq, &classes, z, m) {
            if best.as_ref().is_none_or(|(b, _)| k < *b) {
                best = Some((k, if want_witness { digits.clone() } else { Vec::new() }));
                if k == 1 {
                    break;
                }
            }
        }
        // advance the odometer
        let mut i = 0;
        loop {
            if i == verts.len() {
                return finish(best, &verts, candidates, aux_words);
            }
            let v = verts[i];
            let d = digits[i] as usize;
            classes[d].remove(v);
            if d == 2 {
                digits[i] = 0;
                classes[0].insert(v);
                i += 1;
            } else {
                digits[i] = d as u8 + 1;
                classes[d + 1].insert(v);
                break;
            }
        }
    }
    finish(best, &verts, candidates, aux_words)
}

fn finish(best: Option<(u32, Vec<u8>)>, verts: &[usize], candidates: u64, aux_words: usize) -> BaseCase {
    match best {
        Some((k, digits)) => BaseCase {
            k: Some(k),
            witness: (!digits.is_empty()).then(|| {
                verts
                    .iter()
                    .zip(digits.iter())
                    .map(|(&v, &d)| (v, u32::from(d)))
                    .collect()
            }),
            candidates,
            aux_words,
        },
        None => BaseCase {
            k: None,
            witness: None,
            candidates,
            aux_words,
        },
    }
}

/// Smallest `k` in `{1, 2, 3}` admitting a `(k-1)`-labeling of `inst`, found
/// by trying all `3^|Y|` functions `Y -> {0, 1, 2}`; `Some(0)` when `Y` is
/// empty and `None` when more than three labels are needed.
pub fn base_case_span(inst: &Instance) -> Option<u32> {
    scan(inst.graph, &inst.y, &inst.z, &inst.m, false).k
}
