//! Exact L(2,1)-span computation in polynomial space.
//!
//! An L(2,1)-labeling gives every vertex a nonnegative integer so that
//! adjacent vertices differ by at least 2 and vertices at distance 2
//! differ. The span `λ(G)` is the least possible largest label.
//!
//! The solver works with a generalized quantity `Λ_Z^M(Y, G)` (see
//! [`solver`]) and splits the vertex set around a 2-packing that takes a
//! single separating label, recursing on two halves of at most half the
//! size. It never stores tables indexed by vertex subsets.
//!
//! ```
//! use l21span::{generate, solver::{lambda_span, SolverOptions}};
//!
//! let g = generate::cycle(5).unwrap();
//! let (span, _stats) = lambda_span(&g, &SolverOptions::default());
//! assert_eq!(span, 4);
//! ```

pub mod bench;
pub mod bitset;
pub mod cli;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod oracle;
pub mod solver;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use error::{GraphError, LabelError, ParseError, ParseErrorKind};
pub use generate::GraphFamily;
pub use graph::Graph;
pub use io::GraphFormat;
pub use labeling::{check_labeling, is_valid_labeling, Instance, PartialLabeling, Violation};
pub use solver::{find_labeling, find_lambda, lambda_span, RunStats, SolverOptions, SpanResult};
