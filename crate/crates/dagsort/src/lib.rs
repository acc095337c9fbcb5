//! Sorting the vertices of a DAG under a hidden total order, spending close
//! to the information-theoretic minimum number of comparisons.
//!
//! The arcs of the input DAG are comparison outcomes that are already known:
//! `u -> v` means u is below v. The number of comparisons any sorter still
//! needs is at least log2 T, where T is the number of topological orders of
//! the DAG. [`sorter::topological_heapsort`] gets within O(n + log T) by
//! running Kahn's algorithm with the current sources in a pairing heap, and
//! [`sorter::topological_heapsort_with_insertion`] removes the linear term
//! by sorting a reduced graph around a longest path and merging the result
//! back by exponential-then-binary insertion.
//!
//! Around the algorithms: [`oracle::ComparisonProvider`] hides the total
//! order and counts queries, [`extensions`] counts and samples topological
//! orders exactly at desk scale and estimates log2 T by sampling,
//! [`analysis`] turns heap lifetimes into clique-partition and working-set
//! certificates for the comparison bounds, [`gen`] builds planted-order
//! instances, and [`io`] reads and writes the text files understood by the
//! `dagsort` binary. Start with the `examples/` directory for runnable
//! tours of each piece.

pub mod analysis;
pub mod dag;
mod error;
pub mod extensions;
pub mod gen;
pub mod heap;
pub mod io;
pub mod oracle;
pub mod sorter;

pub use dag::{Dag, VertexId};
pub use error::Error;
pub use oracle::ComparisonProvider;
