//! Partial labelings and the generalized L(2,1) validity condition.
//!
//! A `(k-1)`-labeling of an [`Instance`] `(G, Y, Z, M)` assigns every vertex
//! of `Y` a label in `0..k` so that no vertex of `Z` gets label 0, no vertex
//! of `M` gets label `k-1`, adjacent vertices differ by at least 2 and
//! vertices at distance 2 differ. Distances are always taken in the full
//! graph `G`, never in `G[Y]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{GraphError, LabelError};
use crate::graph::Graph;

/// A map from a set of vertices to nonnegative labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialLabeling {
    labels: BTreeMap<usize, u32>,
}

impl PartialLabeling {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every vertex of `domain` gets `label`.
    pub fn constant(domain: &VertexSet, label: u32) -> Self {
        domain.iter().map(|v| (v, label)).collect()
    }

    pub fn set(&mut self, v: usize, label: u32) {
        self.labels.insert(v, label);
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.labels.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `(vertex, label)` pairs in vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.labels.iter().map(|(&v, &l)| (v, l))
    }

    /// The labeled vertices. Vertices beyond the bitset width are dropped.
    pub fn domain(&self) -> VertexSet {
        self.labels.keys().copied().filter(|&v| v < crate::MAX_VERTICES).collect()
    }

    /// Largest assigned label; `None` on the empty labeling.
    pub fn span(&self) -> Option<u32> {
        self.labels.values().copied().max()
    }

    /// Adds `delta` to every label.
    pub fn shift(&self, delta: i64) -> Result<Self, LabelError> {
        self.iter()
            .map(|(v, l)| {
                let shifted = i64::from(l) + delta;
                u32::try_from(shifted)
                    .map(|s| (v, s))
                    .map_err(|_| LabelError::NegativeLabel {
                        vertex: v,
                        label: l,
                        delta,
                    })
            })
            .collect()
    }

    /// Mirrors labels inside `0..k`: `l` becomes `k - 1 - l`.
    pub fn reverse(&self, k: u32) -> Result<Self, LabelError> {
        let top = i64::from(k) - 1;
        self.iter()
            .map(|(v, l)| {
                if i64::from(l) > top {
                    Err(LabelError::OutOfRange {
                        vertex: v,
                        label: l,
                        top,
                    })
                } else {
                    Ok((v, k - 1 - l))
                }
            })
            .collect()
    }

    /// Keeps only the vertices of `keep`.
    pub fn restrict(&self, keep: &VertexSet) -> Self {
        self.iter().filter(|&(v, _)| keep.contains(v)).collect()
    }

    /// Adds every assignment of `other`, overwriting on overlap.
    pub fn extend_from(&mut self, other: &PartialLabeling) {
        self.labels.extend(other.labels.iter());
    }
}

impl FromIterator<(usize, u32)> for PartialLabeling {
    fn from_iter<I: IntoIterator<Item = (usize, u32)>>(iter: I) -> Self {
        PartialLabeling {
            labels: iter.into_iter().collect(),
        }
    }
}

/// A graph together with the sets `Y` (to label), `Z` (label 0 forbidden)
/// and `M` (top label forbidden). `Z` and `M` need not lie inside `Y`.
#[derive(Debug, Clone, Copy)]
pub struct Instance<'g> {
    pub graph: &'g Graph,
    pub y: VertexSet,
    pub z: VertexSet,
    pub m: VertexSet,
}

impl<'g> Instance<'g> {
    pub fn new(
        graph: &'g Graph,
        y: VertexSet,
        z: VertexSet,
        m: VertexSet,
    ) -> Result<Self, GraphError> {
        let all = graph.vertices();
        for set in [&y, &z, &m] {
            if let Some(v) = set.difference(&all).first() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: graph.n(),
                });
            }
        }
        Ok(Instance { graph, y, z, m })
    }

    /// `(G, V(G), ∅, ∅)`: the classical L(2,1) problem.
    pub fn whole(graph: &'g Graph) -> Self {
        Instance {
            graph,
            y: graph.vertices(),
            z: VertexSet::empty(),
            m: VertexSet::empty(),
        }
    }

    /// The same instance with the roles of `Z` and `M` exchanged.
    pub fn swapped(&self) -> Self {
        Instance {
            z: self.m,
            m: self.z,
            ..*self
        }
    }
}

/// The first constraint a labeling breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Unlabeled(usize),
    Extraneous(usize),
    LabelTooLarge { vertex: usize, label: u32, top: i64 },
    ZeroOnZ(usize),
    TopOnM { vertex: usize, label: u32 },
    AdjacentTooClose { u: usize, v: usize, lu: u32, lv: u32 },
    DistanceTwoClash { u: usize, v: usize, label: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Unlabeled(v) => write!(f, "vertex {v} has no label"),
            Violation::Extraneous(v) => write!(f, "vertex {v} is labeled but not in the domain"),
            Violation::LabelTooLarge { vertex, label, top } => {
                write!(f, "vertex {vertex} has label {label} above the top label {top}")
            }
            Violation::ZeroOnZ(v) => write!(f, "vertex {v} has the forbidden label 0"),
            Violation::TopOnM { vertex, label } => {
                write!(f, "vertex {vertex} has the forbidden top label {label}")
            }
            Violation::AdjacentTooClose { u, v, lu, lv } => write!(
                f,
                "adjacent vertices {u} and {v} have labels {lu} and {lv} (need a gap of 2)"
            ),
            Violation::DistanceTwoClash { u, v, label } => write!(
                f,
                "vertices {u} and {v} at distance 2 share label {label}"
            ),
        }
    }
}

/// Checks that `c` is a `(k-1)`-labeling of `inst`, reporting the first
/// broken constraint. Runs in O(|Y|^2) against the cached square.
pub fn check_labeling(inst: &Instance, c: &PartialLabeling, k: u32) -> Result<(), Violation> {
    let g = inst.graph;
    let top = i64::from(k) - 1;
    for (v, label) in c.iter() {
        if !inst.y.contains(v) {
            return Err(Violation::Extraneous(v));
        }
        if i64::from(label) > top {
            return Err(Violation::LabelTooLarge {
                vertex: v,
                label,
                top,
            });
        }
        if label == 0 && inst.z.contains(v) {
            return Err(Violation::ZeroOnZ(v));
        }
        if i64::from(label) == top && inst.m.contains(v) {
            return Err(Violation::TopOnM { vertex: v, label });
        }
    }
    if let Some(v) = inst.y.iter().find(|&v| c.get(v).is_none()) {
        return Err(Violation::Unlabeled(v));
    }

    let sq = g.square_adjacency();
    for u in inst.y.iter() {
        let lu = c.get(u).expect("domain checked");
        for v in sq[u].intersection(&inst.y).iter().filter(|&v| v > u) {
            let lv = c.get(v).expect("domain checked");
            if g.is_adjacent(u, v) {
                if lu.abs_diff(lv) < 2 {
                    return Err(Violation::AdjacentTooClose { u, v, lu, lv });
                }
            } else if lu == lv {
                return Err(Violation::DistanceTwoClash { u, v, label: lu });
            }
        }
    }
    Ok(())
}

pub fn is_valid_labeling(inst: &Instance, c: &PartialLabeling, k: u32) -> bool {
    check_labeling(inst, c, k).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, path};

    fn lab(pairs: &[(usize, u32)]) -> PartialLabeling {
        pairs.iter().copied().collect()
    }

    #[test]
    fn constant_one_on_packing_is_valid() {
        let g = path(7).unwrap();
        let y: VertexSet = [0, 3, 6].into_iter().collect();
        assert!(g.is_2packing(&y));
        let everything = g.vertices();
        let inst = Instance::new(&g, y, everything, everything).unwrap();
        assert!(is_valid_labeling(&inst, &PartialLabeling::constant(&y, 1), 3));
    }

    #[test]
    fn adjacent_difference_one_rejected() {
        let g = complete(2).unwrap();
        let inst = Instance::whole(&g);
        let c = lab(&[(0, 0), (1, 1)]);
        assert!(!is_valid_labeling(&inst, &c, 2));
        assert_eq!(
            check_labeling(&inst, &c, 2),
            Err(Violation::AdjacentTooClose { u: 0, v: 1, lu: 0, lv: 1 })
        );
        assert!(is_valid_labeling(&inst, &lab(&[(0, 0), (1, 2)]), 3));
    }

    #[test]
    fn zero_on_z_rejected() {
        let g = path(1).unwrap();
        let v = VertexSet::singleton(0);
        let inst = Instance::new(&g, v, v, VertexSet::empty()).unwrap();
        assert_eq!(check_labeling(&inst, &lab(&[(0, 0)]), 2), Err(Violation::ZeroOnZ(0)));
        assert!(is_valid_labeling(&inst, &lab(&[(0, 1)]), 2));
    }

    #[test]
    fn top_on_m_and_range() {
        let g = path(1).unwrap();
        let v = VertexSet::singleton(0);
        let inst = Instance::new(&g, v, VertexSet::empty(), v).unwrap();
        assert!(!is_valid_labeling(&inst, &lab(&[(0, 1)]), 2));
        assert!(is_valid_labeling(&inst, &lab(&[(0, 1)]), 3));
        assert!(!is_valid_labeling(&inst, &lab(&[(0, 3)]), 3));
    }

    #[test]
    fn domain_must_match() {
        let g = path(3).unwrap();
        let inst = Instance::whole(&g);
        assert_eq!(
            check_labeling(&inst, &lab(&[(0, 0), (1, 3)]), 4),
            Err(Violation::Unlabeled(2))
        );
        let sub = Instance::new(&g, VertexSet::singleton(0), VertexSet::empty(), VertexSet::empty())
            .unwrap();
        assert_eq!(
            check_labeling(&sub, &lab(&[(0, 0), (1, 3)]), 4),
            Err(Violation::Extraneous(1))
        );
        // empty labeling of the empty set, including k = 0
        let none = Instance::new(&g, VertexSet::empty(), VertexSet::empty(), VertexSet::empty())
            .unwrap();
        assert!(is_valid_labeling(&none, &PartialLabeling::new(), 0));
    }

    #[test]
    fn distance_two_clash_uses_full_graph() {
        // endpoints of P3 are at distance 2 even when the middle vertex is not in Y
        let g = path(3).unwrap();
        let y: VertexSet = [0, 2].into_iter().collect();
        let inst = Instance::new(&g, y, VertexSet::empty(), VertexSet::empty()).unwrap();
        assert_eq!(
            check_labeling(&inst, &lab(&[(0, 0), (2, 0)]), 1),
            Err(Violation::DistanceTwoClash { u: 0, v: 2, label: 0 })
        );
    }

    #[test]
    fn span_examples() {
        assert_eq!(lab(&[(0, 0), (1, 2)]).span(), Some(2));
        assert_eq!(lab(&[(4, 5)]).span(), Some(5));
        assert_eq!(lab(&[(0, 1), (1, 1)]).span(), Some(1));
        assert_eq!(PartialLabeling::new().span(), None);
    }

    #[test]
    fn shift_examples() {
        let c = lab(&[(0, 0), (1, 2)]);
        assert_eq!(c.shift(1).unwrap(), lab(&[(0, 1), (1, 3)]));
        assert_eq!(c.shift(0).unwrap(), c);
        assert_eq!(
            lab(&[(3, 0)]).shift(-1),
            Err(LabelError::NegativeLabel { vertex: 3, label: 0, delta: -1 })
        );
    }

    #[test]
    fn reverse_examples() {
        let c = lab(&[(0, 0), (1, 2)]);
        assert_eq!(c.reverse(3).unwrap(), lab(&[(0, 2), (1, 0)]));
        let ones = lab(&[(0, 1), (1, 1)]);
        assert_eq!(ones.reverse(3).unwrap(), ones);
        assert_eq!(c.reverse(3).unwrap().reverse(3).unwrap(), c);
        assert!(c.reverse(2).is_err());
    }

    #[test]
    fn instance_rejects_out_of_range_sets() {
        let g = path(3).unwrap();
        let bad = VertexSet::singleton(5);
        assert!(Instance::new(&g, VertexSet::empty(), bad, VertexSet::empty()).is_err());
    }
}
