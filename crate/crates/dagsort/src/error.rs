use crate::dag::VertexId;

/// Errors shared by graph construction, validation, counting, and the
/// sorting algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arc endpoint {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    /// The witness lists a directed cycle in arc order, smallest vertex first.
    #[error("graph contains a cycle: {}", fmt_cycle(.0))]
    Cycle(Vec<VertexId>),

    #[error("order is not a permutation of the {n} vertices")]
    NotAPermutation { n: usize },

    #[error("order contradicts arc {u} -> {v}")]
    InconsistentOrder { u: VertexId, v: VertexId },

    #[error("graph has {n} vertices, exact counting is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
}

fn fmt_cycle(cycle: &[VertexId]) -> String {
    let mut s = String::new();
    for v in cycle {
        s.push_str(&v.to_string());
        s.push_str(" -> ");
    }
    if let Some(first) = cycle.first() {
        s.push_str(&first.to_string());
    }
    s
}
