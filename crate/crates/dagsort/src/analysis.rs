//! Heap-lifetime analysis: the interval graph of a run, its greedy clique
//! partition, and the comparison-count certificates built from both.
//!
//! Each sorted vertex occupies the heap over a closed time interval; two
//! vertices were compared only if their intervals overlap. The greedy
//! partition repeatedly takes the earliest time point covered by the most
//! remaining intervals and makes those intervals a clique. Cliques certify
//! order information: a clique of size s contributes s log2 s - s log2 e
//! to a lower bound on log2 T, and twice the partition's size-log-size sum
//! caps the working-set cost of the whole run.

use crate::dag::VertexId;
use crate::sorter::IntervalRecord;

/// Clique partition of a run's interval graph, ordered by critical time.
pub struct CliquePartition {
    cliques: Vec<Vec<VertexId>>,
    critical_times: Vec<u64>,
    selection_order: Vec<usize>,
}

impl CliquePartition {
    /// Cliques in ascending critical time; members in insertion order.
    pub fn cliques(&self) -> &[Vec<VertexId>] {
        &self.cliques
    }

    /// The critical time of each clique: the latest heap-insertion time
    /// among its members, which is the point the clique was selected at.
    pub fn critical_times(&self) -> &[u64] {
        &self.critical_times
    }

    /// Position of each greedily selected clique in the final ordering:
    /// `selection_order()[j]` locates the j-th selected clique in
    /// [`cliques`](Self::cliques).
    pub fn selection_order(&self) -> &[usize] {
        &self.selection_order
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Sum of |C| * log2 |C| over the cliques.
    pub fn sum_size_log_size(&self) -> f64 {
        self.cliques
            .iter()
            .map(|c| {
                let s = c.len() as f64;
                s * s.log2()
            })
            .sum()
    }
}

/// Greedy clique partition of the interval graph. Each round sweeps the
/// remaining intervals' endpoints, picks the earliest time covered by the
/// most intervals (timestamps are unique, so there are no sweep ties), and
/// removes that clique. Quadratic in the number of cliques times a sort,
/// which is fine at the scales the exact counter allows.
pub fn greedy_clique_partition(intervals: &[IntervalRecord]) -> CliquePartition {
    let mut remaining: Vec<IntervalRecord> = intervals.to_vec();
    let mut selected: Vec<(u64, Vec<VertexId>)> = Vec::new();
    while !remaining.is_empty() {
        let mut events: Vec<(u64, bool)> = Vec::with_capacity(remaining.len() * 2);
        for r in &remaining {
            events.push((r.t_in, true));
            events.push((r.t_out, false));
        }
        events.sort_unstable();
        let mut cur = 0usize;
        let mut best_count = 0usize;
        let mut best_time = 0u64;
        for (t, is_insert) in events {
            if is_insert {
                cur += 1;
                if cur > best_count {
                    best_count = cur;
                    best_time = t;
                }
            } else {
                cur -= 1;
            }
        }
        let mut members: Vec<IntervalRecord> = Vec::with_capacity(best_count);
        remaining.retain(|r| {
            if r.t_in <= best_time && best_time <= r.t_out {
                members.push(*r);
                false
            } else {
                true
            }
        });
        members.sort_unstable_by_key(|r| r.t_in);
        // the member inserted at best_time realizes the maximum
        debug_assert_eq!(members.last().map(|r| r.t_in), Some(best_time));
        selected.push((best_time, members.iter().map(|r| r.vertex).collect()));
    }
    let k = selected.len();
    let mut by_time: Vec<usize> = (0..k).collect();
    by_time.sort_unstable_by_key(|&i| selected[i].0);
    let mut selection_order = vec![0usize; k];
    for (pos, &sel) in by_time.iter().enumerate() {
        selection_order[sel] = pos;
    }
    let mut cliques = Vec::with_capacity(k);
    let mut critical_times = Vec::with_capacity(k);
    for &i in &by_time {
        critical_times.push(selected[i].0);
        cliques.push(std::mem::take(&mut selected[i].1));
    }
    CliquePartition {
        cliques,
        critical_times,
        selection_order,
    }
}

/// The clique-partition lower bound on log2 T for a graph on `n` vertices:
/// sum |C| log2 |C| minus n log2 e. Can be negative; it is not clamped.
pub fn partition_lower_bound(partition: &CliquePartition, n: usize) -> f64 {
    partition.sum_size_log_size() - n as f64 * std::f64::consts::LOG2_E
}

/// Working-set sizes of a run: `w(v)` counts v itself plus the largest
/// number of vertices ever simultaneously in the heap with v that were
/// inserted after v. Every comparison a pairing heap spends on v is charged
/// against log2 w(v), up to the factor two certified by the clique bound.
pub struct WorkingSetReport {
    sizes: Vec<(VertexId, usize)>,
    sum_log2: f64,
}

impl WorkingSetReport {
    /// Per-vertex sizes in ascending vertex id.
    pub fn sizes(&self) -> &[(VertexId, usize)] {
        &self.sizes
    }

    pub fn get(&self, v: VertexId) -> Option<usize> {
        self.sizes
            .binary_search_by_key(&v, |&(u, _)| u)
            .ok()
            .map(|i| self.sizes[i].1)
    }

    /// Sum of log2 w(v) over the run's vertices.
    pub fn sum_log2(&self) -> f64 {
        self.sum_log2
    }
}

pub fn working_set_sizes(intervals: &[IntervalRecord]) -> WorkingSetReport {
    let mut events: Vec<(u64, bool, usize)> = Vec::with_capacity(intervals.len() * 2);
    for (i, r) in intervals.iter().enumerate() {
        events.push((r.t_in, true, i));
        events.push((r.t_out, false, i));
    }
    events.sort_unstable();
    let mut active: Vec<usize> = Vec::new();
    let mut w = vec![1usize; intervals.len()];
    for (_, is_insert, i) in events {
        if is_insert {
            active.push(i);
            let len = active.len();
            for (pos, &j) in active.iter().enumerate() {
                if len - pos > w[j] {
                    w[j] = len - pos;
                }
            }
        } else {
            let pos = active.iter().position(|&j| j == i).expect("active interval");
            active.remove(pos);
        }
    }
    let mut sizes: Vec<(VertexId, usize)> = intervals
        .iter()
        .enumerate()
        .map(|(i, r)| (r.vertex, w[i]))
        .collect();
    sizes.sort_unstable_by_key(|&(v, _)| v);
    let sum_log2 = sizes.iter().map(|&(_, w)| (w as f64).log2()).sum();
    WorkingSetReport { sizes, sum_log2 }
}
