//! Simple undirected graphs with a cached square.

use std::fmt;
use std::sync::OnceLock;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::GraphError;

/// An undirected simple graph on the vertices `0..n`.
///
/// The square (the distance-at-most-2 relation) is computed on first use
/// and cached, so every later `dist_le2` query is a bit test. A `Graph` is
/// never mutated after construction and can be shared freely across threads.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adjacency: Vec<VertexSet>,
    square: OnceLock<Vec<VertexSet>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adjacency: vec![VertexSet::empty(); n],
            square: OnceLock::new(),
        })
    }

    /// Builds a graph from an edge list, rejecting self-loops, repeated
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adjacency[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        self.square = OnceLock::new();
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// N(X): every vertex adjacent to some member of `x`.
    pub fn open_neighborhood(&self, x: &VertexSet) -> VertexSet {
        x.iter()
            .fold(VertexSet::empty(), |acc, v| acc.union(&self.adjacency[v]))
    }

    /// Per-vertex sets of vertices at distance 1 or 2.
    pub fn square_adjacency(&self) -> &[VertexSet] {
        self.square.get_or_init(|| {
            (0..self.n)
                .map(|v| {
                    let mut reach = self.adjacency[v];
                    for u in self.adjacency[v].iter() {
                        reach = reach.union(&self.adjacency[u]);
                    }
                    reach.remove(v);
                    reach
                })
                .collect()
        })
    }

    #[inline]
    pub fn square_neighbors(&self, v: usize) -> &VertexSet {
        &self.square_adjacency()[v]
    }

    /// The square of this graph as a graph in its own right.
    pub fn square(&self) -> Graph {
        let adjacency = self.square_adjacency().to_vec();
        Graph {
            n: self.n,
            adjacency,
            square: OnceLock::new(),
        }
    }

    /// True iff `u != v` and the two are at distance at most 2.
    pub fn dist_le2(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.square_adjacency()[u].contains(v))
    }

    /// True iff the members of `x` are pairwise at distance greater than 2.
    pub fn is_2packing(&self, x: &VertexSet) -> bool {
        let sq = self.square_adjacency();
        x.iter().all(|v| v < self.n && !sq[v].intersects(x))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_neighborhood(&frontier).difference(&seen);
            seen = seen.union(&next);
            frontier = next;
        }
        seen.len() == self.n
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
