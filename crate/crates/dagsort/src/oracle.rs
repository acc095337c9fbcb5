//! The hidden total order and the counting comparison gateway. Sorting
//! algorithms learn about the order only through [`ComparisonProvider::less`],
//! so the provider's count is exactly the comparison complexity of a run.

use crate::dag::{self, Dag, VertexId};
use crate::error::Error;

/// A total order on the vertices, stored as a rank per vertex.
struct HiddenOrder {
    rank: Vec<u32>,
}

/// Answers `u < v` queries against a hidden total order and counts them.
///
/// Construction checks the order against the DAG: it must be a permutation
/// of the vertices and a topological order, otherwise the arcs would
/// contradict the comparisons and no output could satisfy both.
pub struct ComparisonProvider {
    hidden: HiddenOrder,
    count: u64,
}

impl ComparisonProvider {
    /// `order` lists the vertices in ascending hidden order.
    pub fn new(dag: &Dag, order: &[VertexId]) -> Result<ComparisonProvider, Error> {
        let rank = dag::positions(dag, order)?;
        for &(u, v) in dag.arcs() {
            if rank[u.index()] > rank[v.index()] {
                return Err(Error::InconsistentOrder { u, v });
            }
        }
        Ok(ComparisonProvider {
            hidden: HiddenOrder { rank },
            count: 0,
        })
    }

    /// A provider that skips the consistency check, for exercising the
    /// algorithms on inputs a checked provider would reject.
    #[cfg(test)]
    pub(crate) fn new_unchecked(rank: Vec<u32>) -> ComparisonProvider {
        ComparisonProvider {
            hidden: HiddenOrder { rank },
            count: 0,
        }
    }

    /// One comparison. Comparing a vertex with itself is a caller bug.
    pub fn less(&mut self, u: VertexId, v: VertexId) -> bool {
        assert_ne!(u, v, "comparison of vertex {u} with itself");
        self.count += 1;
        self.hidden.rank[u.index()] < self.hidden.rank[v.index()]
    }

    /// Comparisons answered so far.
    pub fn count(&self) -> u64 {
        self.count
    }
}
