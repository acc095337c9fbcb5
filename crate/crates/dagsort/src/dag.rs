//! DAG representation and the comparison-free graph passes: Kahn's
//! topological sort, longest paths by vertex count, and the layer
//! decomposition induced by longest-path lengths.

use crate::error::Error;

/// Index of a vertex. Vertex ids are dense in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// A directed graph on vertices `0..n`, expected to be acyclic.
///
/// Construction rejects malformed arcs (endpoints out of range, self-loops);
/// longer cycles are only detected by [`kahn_order`], which every consumer
/// that needs acyclicity runs first. Duplicate arcs are kept as given:
/// in-degrees count multiplicity, so a vertex becomes a source only after
/// every copy of each incoming arc is accounted for.
#[derive(Debug, Clone)]
pub struct Dag {
    arcs: Vec<(VertexId, VertexId)>,
    out_adj: Vec<Vec<VertexId>>,
    in_degree: Vec<u32>,
}

impl Dag {
    pub fn new(n: usize, arcs: &[(u32, u32)]) -> Result<Dag, Error> {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_degree = vec![0u32; n];
        let mut kept = Vec::with_capacity(arcs.len());
        for &(u, v) in arcs {
            if u as usize >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v as usize >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(VertexId(u)));
            }
            out_adj[u as usize].push(VertexId(v));
            in_degree[v as usize] += 1;
            kept.push((VertexId(u), VertexId(v)));
        }
        Ok(Dag {
            arcs: kept,
            out_adj,
            in_degree,
        })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.out_adj.len()
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in input order, duplicates included.
    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    pub fn successors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[v.index()]
    }

    pub fn in_degrees(&self) -> &[u32] {
        &self.in_degree
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.out_adj.len() as u32).map(VertexId)
    }
}

/// Topological order by Kahn's algorithm, without comparisons: sources are
/// kept in a FIFO queue seeded in ascending vertex order, so the result is
/// deterministic. On a cyclic input the error carries a cycle witness.
pub fn kahn_order(dag: &Dag) -> Result<Vec<VertexId>, Error> {
    let n = dag.vertex_count();
    let mut in_deg = dag.in_degrees().to_vec();
    let mut queue = std::collections::VecDeque::new();
    for v in dag.vertices() {
        if in_deg[v.index()] == 0 {
            queue.push_back(v);
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut removed = vec![false; n];
    while let Some(v) = queue.pop_front() {
        removed[v.index()] = true;
        order.push(v);
        for &w in dag.successors(v) {
            in_deg[w.index()] -= 1;
            if in_deg[w.index()] == 0 {
                queue.push_back(w);
            }
        }
    }
    if order.len() < n {
        return Err(Error::Cycle(find_cycle_among(dag, &removed)));
    }
    Ok(order)
}

/// Extracts a cycle from the subgraph of vertices not yet removed. Every
/// remaining vertex has a remaining predecessor (otherwise Kahn's algorithm
/// would have processed it), so walking backward must repeat a vertex.
/// The walk starts at the smallest remaining vertex and always steps to the
/// smallest remaining predecessor; the witness is returned in forward arc
/// order, rotated so the smallest vertex on the cycle comes first.
pub(crate) fn find_cycle_among(dag: &Dag, removed: &[bool]) -> Vec<VertexId> {
    let n = dag.vertex_count();
    let mut preds: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &(u, v) in dag.arcs() {
        if !removed[u.index()] && !removed[v.index()] {
            preds[v.index()].push(u);
        }
    }
    let start = (0..n)
        .find(|&v| !removed[v])
        .expect("cycle extraction on a fully removed graph");
    let mut seen_at = vec![usize::MAX; n];
    let mut walk: Vec<VertexId> = Vec::new();
    let mut cur = VertexId(start as u32);
    loop {
        if seen_at[cur.index()] != usize::MAX {
            let mut cycle = walk[seen_at[cur.index()]..].to_vec();
            cycle.reverse();
            let min_pos = cycle
                .iter()
                .enumerate()
                .min_by_key(|&(_, v)| v)
                .map(|(i, _)| i)
                .unwrap();
            cycle.rotate_left(min_pos);
            return cycle;
        }
        seen_at[cur.index()] = walk.len();
        walk.push(cur);
        cur = *preds[cur.index()]
            .iter()
            .min()
            .expect("remaining vertex with no remaining predecessor");
    }
}

/// A longest path and the per-vertex longest-path lengths it was built from.
/// Lengths count vertices, so an isolated vertex has length 1.
pub struct Path {
    vertices: Vec<VertexId>,
    lengths: Vec<u32>,
}

impl Path {
    /// The path itself, in arc direction.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// `lengths()[v]` is the number of vertices on a longest path ending at `v`.
    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Longest path in the DAG, found by relaxing arcs in topological order.
/// Deterministic: the endpoint is the smallest vertex of maximum length and
/// each backward step takes the smallest predecessor of maximum length.
pub fn longest_path(dag: &Dag) -> Result<Path, Error> {
    let order = kahn_order(dag)?;
    let n = dag.vertex_count();
    let mut lengths = vec![1u32; n];
    for &v in &order {
        for &w in dag.successors(v) {
            let cand = lengths[v.index()] + 1;
            if cand > lengths[w.index()] {
                lengths[w.index()] = cand;
            }
        }
    }
    if n == 0 {
        return Ok(Path {
            vertices: Vec::new(),
            lengths,
        });
    }
    let mut in_adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &(u, v) in dag.arcs() {
        in_adj[v.index()].push(u);
    }
    let mut end = VertexId(0);
    for v in dag.vertices() {
        if lengths[v.index()] > lengths[end.index()] {
            end = v;
        }
    }
    let mut rev = vec![end];
    let mut cur = end;
    while lengths[cur.index()] > 1 {
        let mut best: Option<VertexId> = None;
        for &u in &in_adj[cur.index()] {
            let better = match best {
                None => true,
                Some(b) => {
                    lengths[u.index()] > lengths[b.index()]
                        || (lengths[u.index()] == lengths[b.index()] && u < b)
                }
            };
            if better {
                best = Some(u);
            }
        }
        cur = best.expect("vertex of length > 1 with no predecessor");
        rev.push(cur);
    }
    rev.reverse();
    Ok(Path {
        vertices: rev,
        lengths,
    })
}

/// Partition of the vertices by longest-path length: layer `i` holds the
/// vertices of length `i + 1`, each layer in ascending vertex order. Every
/// layer is an antichain, and layer `i + 1` is nonempty only if layer `i` is.
pub struct LayerPartition {
    layers: Vec<Vec<VertexId>>,
}

impl LayerPartition {
    pub fn layers(&self) -> &[Vec<VertexId>] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }
}

pub fn layers(dag: &Dag) -> Result<LayerPartition, Error> {
    let path = longest_path(dag)?;
    let mut layers: Vec<Vec<VertexId>> = vec![Vec::new(); path.len()];
    for v in dag.vertices() {
        layers[(path.lengths()[v.index()] - 1) as usize].push(v);
    }
    Ok(LayerPartition { layers })
}

/// Whether `order` lists every vertex exactly once with all arcs pointing
/// forward. A list that is not a permutation of the vertex set is an error,
/// not a `false`.
pub fn is_topological_order(dag: &Dag, order: &[VertexId]) -> Result<bool, Error> {
    let pos = positions(dag, order)?;
    for &(u, v) in dag.arcs() {
        if pos[u.index()] > pos[v.index()] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Position of each vertex in `order`, checking that `order` is a
/// permutation of `0..n`.
pub(crate) fn positions(dag: &Dag, order: &[VertexId]) -> Result<Vec<u32>, Error> {
    let n = dag.vertex_count();
    if order.len() != n {
        return Err(Error::NotAPermutation { n });
    }
    let mut pos = vec![u32::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v.index() >= n || pos[v.index()] != u32::MAX {
            return Err(Error::NotAPermutation { n });
        }
        pos[v.index()] = i as u32;
    }
    Ok(pos)
}
