//! The two sorting algorithms. Both recover the hidden total order of a
//! DAG's vertices and report the number of comparisons spent.
//!
//! `topological_heapsort` is Kahn's algorithm with the current sources kept
//! in a pairing heap: delete-min always yields the globally smallest
//! remaining vertex, so the pop sequence is the hidden order.
//!
//! `topological_heapsort_with_insertion` first extracts a longest path P,
//! shrinks the graph to the off-path vertices plus the path vertices that
//! interact with them, sorts that reduced graph with the basic algorithm,
//! and threads the results back into P by exponential-then-binary insertion.
//! Path vertices that survive into the reduced graph pin down how far along
//! P the merge has progressed, so their own emission costs no comparisons.

use crate::dag::{self, Dag, Path, VertexId};
use crate::error::Error;
use crate::heap::PairingHeap;
use crate::oracle::ComparisonProvider;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    TopologicalHeapsort,
    TopologicalHeapsortWithInsertion,
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Algorithm::TopologicalHeapsort => "ths",
            Algorithm::TopologicalHeapsortWithInsertion => "thsi",
        })
    }
}

/// Heap lifetime of one vertex: inserted at `t_in`, removed by delete-min at
/// `t_out`. Timestamps come from a run-global event counter that ticks at
/// every insert and every delete-min, so no two stamps in a run collide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalRecord {
    pub vertex: VertexId,
    pub t_in: u64,
    pub t_out: u64,
}

/// Result of one sorting run. `comparisons` counts only this run's queries,
/// even when the provider was used before. `intervals` records heap
/// lifetimes in pop order; for the insertion variant these cover the reduced
/// graph's vertices, the only ones that touch the heap.
#[derive(Debug, Clone)]
pub struct SortRun {
    pub order: Vec<VertexId>,
    pub comparisons: u64,
    pub intervals: Vec<IntervalRecord>,
    pub algorithm: Algorithm,
}

/// The source-heap loop shared by both algorithms. `shape` is the graph
/// being swept; its vertex `i` is presented to the heap and the provider as
/// `to_label[i]`, and `label_index` inverts that map. `on_delete` runs once
/// per popped vertex, in pop order, and may itself query the provider.
fn run_algorithm1(
    shape: &Dag,
    to_label: &[VertexId],
    label_index: &[u32],
    heap_capacity: usize,
    provider: &mut ComparisonProvider,
    mut on_delete: impl FnMut(VertexId, &mut ComparisonProvider),
) -> Result<Vec<IntervalRecord>, Error> {
    let n = shape.vertex_count();
    let mut in_deg = shape.in_degrees().to_vec();
    let mut heap = PairingHeap::new(heap_capacity);
    let mut clock: u64 = 0;
    let mut t_in = vec![0u64; n];
    let mut removed = vec![false; n];
    let mut intervals = Vec::with_capacity(n);
    for i in 0..n {
        if in_deg[i] == 0 {
            t_in[i] = clock;
            clock += 1;
            heap.insert(to_label[i], provider);
        }
    }
    while let Some(v) = heap.delete_min(provider) {
        let i = label_index[v.index()] as usize;
        intervals.push(IntervalRecord {
            vertex: v,
            t_in: t_in[i],
            t_out: clock,
        });
        clock += 1;
        removed[i] = true;
        on_delete(v, provider);
        for &w in shape.successors(VertexId(i as u32)) {
            in_deg[w.index()] -= 1;
            if in_deg[w.index()] == 0 {
                t_in[w.index()] = clock;
                clock += 1;
                heap.insert(to_label[w.index()], provider);
            }
        }
    }
    if intervals.len() < n {
        let witness = dag::find_cycle_among(shape, &removed)
            .iter()
            .map(|v| to_label[v.index()])
            .collect();
        return Err(Error::Cycle(witness));
    }
    Ok(intervals)
}

/// Sorts by Kahn's algorithm with the current sources in a pairing heap.
/// Spends at most one comparison per heap insert plus `c - 1` per delete-min
/// with `c` children; across a run this is O(n + log T) where T counts the
/// DAG's topological orders.
pub fn topological_heapsort(
    dag: &Dag,
    provider: &mut ComparisonProvider,
) -> Result<SortRun, Error> {
    let start = provider.count();
    let n = dag.vertex_count();
    let to_label: Vec<VertexId> = dag.vertices().collect();
    let label_index: Vec<u32> = (0..n as u32).collect();
    let mut order = Vec::with_capacity(n);
    let intervals = run_algorithm1(dag, &to_label, &label_index, n, provider, |v, _| {
        order.push(v)
    })?;
    Ok(SortRun {
        order,
        comparisons: provider.count() - start,
        intervals,
        algorithm: Algorithm::TopologicalHeapsort,
    })
}

/// The reduced instance built around a longest path P.
///
/// Kept vertices are the off-path vertices plus the marked path vertices;
/// `dag` indexes them densely in ascending original id, `to_original` maps
/// back. Arcs are the off-path arcs, the surviving path attachments (for
/// each off-path v, the last path vertex with an arc into v and the first
/// with an arc out of v), and a chain through the marked path vertices in
/// path order. Building this performs no comparisons.
pub struct ReducedDag {
    pub dag: Dag,
    pub to_original: Vec<VertexId>,
    /// The longest path P, in path order; the insertion list L.
    pub path: Vec<VertexId>,
    /// `marked[i]` says whether path position `i` survives in `dag`.
    pub marked: Vec<bool>,
}

const UNPLACED: u32 = u32::MAX;

pub fn build_reduced_dag(dag: &Dag, path: &Path) -> ReducedDag {
    let n = dag.vertex_count();
    let p = path.vertices();
    let ell = p.len();
    let mut path_pos = vec![UNPLACED; n];
    for (i, &v) in p.iter().enumerate() {
        path_pos[v.index()] = i as u32;
    }
    let mut marked = vec![false; ell];
    if ell > 0 {
        marked[ell - 1] = true;
    }
    // For each off-path vertex, the path positions of its kept attachments.
    let mut last_in = vec![UNPLACED; n];
    let mut first_out = vec![UNPLACED; n];
    for &(a, b) in dag.arcs() {
        let (pa, pb) = (path_pos[a.index()], path_pos[b.index()]);
        if pa != UNPLACED && pb == UNPLACED {
            if last_in[b.index()] == UNPLACED || pa > last_in[b.index()] {
                last_in[b.index()] = pa;
            }
        } else if pa == UNPLACED && pb != UNPLACED && pb < first_out[a.index()] {
            first_out[a.index()] = pb;
        }
    }
    for v in 0..n {
        if path_pos[v] != UNPLACED {
            continue;
        }
        if last_in[v] != UNPLACED {
            marked[last_in[v] as usize] = true;
        }
        if first_out[v] != UNPLACED {
            marked[first_out[v] as usize] = true;
        }
    }
    let keep = |v: usize| path_pos[v] == UNPLACED || marked[path_pos[v] as usize];
    let to_original: Vec<VertexId> = (0..n as u32)
        .map(VertexId)
        .filter(|v| keep(v.index()))
        .collect();
    let mut reduced_index = vec![UNPLACED; n];
    for (ri, &v) in to_original.iter().enumerate() {
        reduced_index[v.index()] = ri as u32;
    }
    let mut arcs: Vec<(u32, u32)> = Vec::new();
    for &(a, b) in dag.arcs() {
        let (pa, pb) = (path_pos[a.index()], path_pos[b.index()]);
        let keep_arc = match (pa != UNPLACED, pb != UNPLACED) {
            (false, false) => true,
            (true, false) => last_in[b.index()] == pa,
            (false, true) => first_out[a.index()] == pb,
            // arcs inside P are replaced by the chain below
            (true, true) => false,
        };
        if keep_arc {
            arcs.push((reduced_index[a.index()], reduced_index[b.index()]));
        }
    }
    let marked_positions: Vec<usize> = (0..ell).filter(|&i| marked[i]).collect();
    for w in marked_positions.windows(2) {
        arcs.push((
            reduced_index[p[w[0]].index()],
            reduced_index[p[w[1]].index()],
        ));
    }
    let reduced = Dag::new(to_original.len(), &arcs)
        .expect("reduced arcs are in range and loop-free by construction");
    ReducedDag {
        dag: reduced,
        to_original,
        path: p.to_vec(),
        marked,
    }
}

/// How many elements of `suffix` lie below `v` in the hidden order, assuming
/// `suffix` is sorted ascending and `v` is not in it. Exponential probes at
/// positions 1, 2, 4, ... elements in, then binary search between the last
/// two probes. For an answer `k` this spends at most
/// `2 * floor(log2(k + 1)) + 2` comparisons.
pub fn insert_search(
    suffix: &[VertexId],
    v: VertexId,
    provider: &mut ComparisonProvider,
) -> usize {
    let m = suffix.len();
    let mut lo = 0usize;
    let mut hi = m;
    let mut probe = 0usize;
    let mut step = 1usize;
    while probe < m {
        if provider.less(v, suffix[probe]) {
            hi = probe;
            break;
        }
        lo = probe + 1;
        probe += step;
        step *= 2;
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if provider.less(v, suffix[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ThsiOptions {
    /// When set to ε, skip the path reduction entirely if the longest path
    /// covers at most a (1 - ε) fraction of the vertices; the reduced graph
    /// would hold most of the graph anyway, so the detour buys nothing.
    pub skip_reduction_epsilon: Option<f64>,
}

pub fn topological_heapsort_with_insertion(
    dag: &Dag,
    provider: &mut ComparisonProvider,
) -> Result<SortRun, Error> {
    topological_heapsort_with_insertion_opts(dag, provider, ThsiOptions::default())
}

pub fn topological_heapsort_with_insertion_opts(
    dag: &Dag,
    provider: &mut ComparisonProvider,
    opts: ThsiOptions,
) -> Result<SortRun, Error> {
    let start = provider.count();
    let n = dag.vertex_count();
    let path = dag::longest_path(dag)?;
    if let Some(eps) = opts.skip_reduction_epsilon {
        if (path.len() as f64) <= (1.0 - eps) * n as f64 {
            let mut run = topological_heapsort(dag, provider)?;
            run.algorithm = Algorithm::TopologicalHeapsortWithInsertion;
            return Ok(run);
        }
    }
    let reduced = build_reduced_dag(dag, &path);
    let l = reduced.path.as_slice();
    let mut l_pos = vec![UNPLACED; n];
    for (i, &v) in l.iter().enumerate() {
        if reduced.marked[i] {
            l_pos[v.index()] = i as u32;
        }
    }
    let mut label_index = vec![UNPLACED; n];
    for (ri, &v) in reduced.to_original.iter().enumerate() {
        label_index[v.index()] = ri as u32;
    }
    let mut order = Vec::with_capacity(n);
    let mut cursor = 0usize;
    let intervals = run_algorithm1(
        &reduced.dag,
        &reduced.to_original,
        &label_index,
        n,
        provider,
        |v, provider| {
            let lp = l_pos[v.index()];
            if lp != UNPLACED {
                // a surviving path vertex pops only after everything ahead
                // of it in L has been emitted, so emission is positional
                let end = lp as usize + 1;
                debug_assert!(cursor < end);
                order.extend_from_slice(&l[cursor..end]);
                cursor = end;
            } else {
                let k = insert_search(&l[cursor..], v, provider);
                order.extend_from_slice(&l[cursor..cursor + k]);
                cursor += k;
                order.push(v);
            }
        },
    )?;
    order.extend_from_slice(&l[cursor..]);
    Ok(SortRun {
        order,
        comparisons: provider.count() - start,
        intervals,
        algorithm: Algorithm::TopologicalHeapsortWithInsertion,
    })
}
