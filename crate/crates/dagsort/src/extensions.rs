//! Exact counting and exact-uniform sampling of topological orders, plus
//! the sampling-based estimator for log2 T.
//!
//! Counting runs a DP over subsets of the vertex set: with f(S) the number
//! of topological orders of the subgraph induced by the remaining set S,
//! f(empty) = 1 and f(S) sums f(S minus v) over the sources v of S. Only
//! states reachable from the full set are materialized. The counts stay in
//! u128 internally: every state value is at most 25! < 2^84, so within the
//! size guard the arithmetic is exact.

use std::collections::HashMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dag::{self, Dag, VertexId};
use crate::error::Error;
use crate::oracle::ComparisonProvider;
use crate::sorter;

/// Largest vertex count accepted by the exact counter and sampler. The DP
/// has up to 2^n states, so this is a desk-scale tool by design.
pub const EXACT_LIMIT: usize = 25;

/// The number of topological orders, with its base-2 logarithm. The log is
/// exact to f64 precision: the integer is below 2^84 and converts cleanly.
#[derive(Debug, Clone)]
pub struct ExtensionCount {
    pub value: BigUint,
    pub log2: f64,
}

struct Table {
    pred_mask: Vec<u32>,
    memo: HashMap<u32, u128>,
}

impl Table {
    fn build(dag: &Dag) -> Result<Table, Error> {
        let n = dag.vertex_count();
        if n > EXACT_LIMIT {
            return Err(Error::TooLarge {
                n,
                limit: EXACT_LIMIT,
            });
        }
        // a cycle would leave some state with no sources and the recursion
        // would return 0 for it; reject up front instead
        dag::kahn_order(dag)?;
        let mut pred_mask = vec![0u32; n];
        for &(u, v) in dag.arcs() {
            pred_mask[v.index()] |= 1 << u.0;
        }
        Ok(Table {
            pred_mask,
            memo: HashMap::new(),
        })
    }

    fn full(&self) -> u32 {
        if self.pred_mask.is_empty() {
            0
        } else {
            (1u32 << self.pred_mask.len()) - 1
        }
    }

    fn count(&mut self, s: u32) -> u128 {
        if s == 0 {
            return 1;
        }
        if let Some(&c) = self.memo.get(&s) {
            return c;
        }
        let mut total = 0u128;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.pred_mask[v] & s == 0 {
                total += self.count(s & !(1 << v));
            }
        }
        self.memo.insert(s, total);
        total
    }
}

/// Counts the topological orders of `dag` exactly. Errors on cyclic input
/// and on graphs past [`EXACT_LIMIT`] vertices.
pub fn count_extensions(dag: &Dag) -> Result<ExtensionCount, Error> {
    let mut table = Table::build(dag)?;
    let full = table.full();
    let value = table.count(full);
    Ok(ExtensionCount {
        value: BigUint::from(value),
        log2: (value as f64).log2(),
    })
}

/// Draws one topological order exactly uniformly: at each step the next
/// vertex v is chosen among the current sources with probability
/// f(S minus v) / f(S). Deterministic for a fixed seed.
pub fn sample_extension(dag: &Dag, seed: u64) -> Result<Vec<VertexId>, Error> {
    let mut table = Table::build(dag)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = table.full();
    let mut order = Vec::with_capacity(dag.vertex_count());
    while s != 0 {
        let total = table.count(s);
        let mut r = rng.gen_range(0..total);
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if table.pred_mask[v] & s != 0 {
                continue;
            }
            let sub = table.count(s & !(1 << v));
            if r < sub {
                order.push(VertexId(v as u32));
                s &= !(1 << v);
                break;
            }
            r -= sub;
        }
    }
    Ok(order)
}

/// Estimates log2 T by sampling one topological order uniformly, hiding it
/// behind a fresh provider, and sorting with the insertion variant; the
/// returned estimate is that run's comparison count. In expectation the
/// count is within a constant factor of log2 T plus a constant.
pub fn estimate_log_t(dag: &Dag, seed: u64) -> Result<(f64, u64), Error> {
    let order = sample_extension(dag, seed)?;
    let mut provider =
        ComparisonProvider::new(dag, &order).expect("sampled orders are topological");
    let run = sorter::topological_heapsort_with_insertion(dag, &mut provider)?;
    Ok((run.comparisons as f64, run.comparisons))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(xs: &[u32]) -> Vec<VertexId> {
        xs.iter().copied().map(VertexId).collect()
    }

    #[test]
    fn diamond_has_two_orders() {
        let dag = Dag::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let c = count_extensions(&dag).unwrap();
        assert_eq!(c.value, BigUint::from(2u32));
        assert_eq!(c.log2, 1.0);
    }

    #[test]
    fn chain_has_one_order() {
        let dag = Dag::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = count_extensions(&dag).unwrap();
        assert_eq!(c.value, BigUint::from(1u32));
        assert_eq!(c.log2, 0.0);
    }

    #[test]
    fn antichain_counts_factorially() {
        let dag = Dag::new(4, &[]).unwrap();
        let c = count_extensions(&dag).unwrap();
        assert_eq!(c.value, BigUint::from(24u32));
        let dag3 = Dag::new(3, &[]).unwrap();
        let c3 = count_extensions(&dag3).unwrap();
        assert_eq!(c3.value, BigUint::from(6u32));
        assert!((c3.log2 - 6f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn empty_graph_has_one_order() {
        let dag = Dag::new(0, &[]).unwrap();
        let c = count_extensions(&dag).unwrap();
        assert_eq!(c.value, BigUint::from(1u32));
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let cases: Vec<(usize, Vec<(u32, u32)>)> = vec![
            (4, vec![(0, 1), (0, 2), (1, 3), (2, 3)]),
            (5, vec![(0, 1), (0, 2), (3, 4)]),
            (6, vec![(0, 1), (2, 3), (4, 5)]),
            (5, vec![(0, 4), (1, 4), (2, 4), (3, 4)]),
            (6, vec![(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]),
        ];
        for (n, arcs) in cases {
            let dag = Dag::new(n, &arcs).unwrap();
            let want = brute_force_count(&dag);
            let got = count_extensions(&dag).unwrap();
            assert_eq!(got.value, BigUint::from(want), "n={n} arcs={arcs:?}");
        }
    }

    fn brute_force_count(dag: &Dag) -> u64 {
        let n = dag.vertex_count();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut count = 0u64;
        permute_all(&mut perm, 0, &mut |p| {
            let order: Vec<VertexId> = p.iter().copied().map(VertexId).collect();
            if dag::is_topological_order(dag, &order).unwrap() {
                count += 1;
            }
        });
        count
    }

    fn permute_all(xs: &mut Vec<u32>, at: usize, f: &mut impl FnMut(&[u32])) {
        if at == xs.len() {
            f(xs);
            return;
        }
        for i in at..xs.len() {
            xs.swap(at, i);
            permute_all(xs, at + 1, f);
            xs.swap(at, i);
        }
    }

    #[test]
    fn guard_rejects_large_graphs() {
        let dag = Dag::new(26, &[]).unwrap();
        assert!(matches!(
            count_extensions(&dag),
            Err(Error::TooLarge { n: 26, limit: 25 })
        ));
        assert!(matches!(
            sample_extension(&dag, 0),
            Err(Error::TooLarge { n: 26, limit: 25 })
        ));
    }

    #[test]
    fn counting_rejects_cycles() {
        let dag = Dag::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(matches!(count_extensions(&dag), Err(Error::Cycle(_))));
    }

    #[test]
    fn samples_are_topological_and_seed_deterministic() {
        let dag = Dag::new(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        for seed in 0..20 {
            let a = sample_extension(&dag, seed).unwrap();
            let b = sample_extension(&dag, seed).unwrap();
            assert_eq!(a, b);
            assert!(dag::is_topological_order(&dag, &a).unwrap());
        }
    }

    #[test]
    fn sampling_the_diamond_hits_both_orders() {
        let dag = Dag::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let mut seen = std::collections::HashSet::new();
        for seed in 0..64 {
            seen.insert(sample_extension(&dag, seed).unwrap());
        }
        assert_eq!(seen.len(), 2);
        assert!(seen.contains(&ids(&[0, 1, 2, 3])));
        assert!(seen.contains(&ids(&[0, 2, 1, 3])));
    }

    #[test]
    fn antichain_sampling_is_roughly_uniform() {
        // 4! = 24 orders, 240_000 draws: each bucket within 10% of the mean
        let dag = Dag::new(4, &[]).unwrap();
        let mut freq: HashMap<Vec<VertexId>, u64> = HashMap::new();
        for seed in 0..240_000u64 {
            *freq.entry(sample_extension(&dag, seed).unwrap()).or_insert(0) += 1;
        }
        assert_eq!(freq.len(), 24);
        for (order, count) in &freq {
            assert!(
                (*count as f64 - 10_000.0).abs() < 1_000.0,
                "{order:?}: {count}"
            );
        }
    }

    #[test]
    fn estimator_is_zero_on_chains() {
        let dag = Dag::new(10, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9)]).unwrap();
        for seed in 0..5 {
            let (est, cmp) = estimate_log_t(&dag, seed).unwrap();
            assert_eq!(est, 0.0);
            assert_eq!(cmp, 0);
        }
    }

    #[test]
    fn estimator_reports_the_run_cost() {
        let dag = Dag::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let (est, cmp) = estimate_log_t(&dag, 7).unwrap();
        assert_eq!(est, cmp as f64);
        assert!(cmp >= 1);
    }
}
