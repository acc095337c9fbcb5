//! Instance generators. Every generator plants a hidden total order and
//! only emits arcs that agree with it, so the pair (graph, order) is always
//! a valid sorting instance. All randomness is ChaCha8 seeded explicitly;
//! the same parameters give the same instance everywhere.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dag::{Dag, VertexId};

pub struct Instance {
    pub dag: Dag,
    /// Vertices in ascending hidden order.
    pub hidden_order: Vec<VertexId>,
}

fn planted_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = (0..n as u32).map(VertexId).collect();
    order.shuffle(rng);
    order
}

/// Path 0 -> 1 -> ... -> n-1; the hidden order is forced, so T = 1.
pub fn chain(n: usize) -> Instance {
    let arcs: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    Instance {
        dag: Dag::new(n, &arcs).unwrap(),
        hidden_order: (0..n as u32).map(VertexId).collect(),
    }
}

/// No arcs at all; the hidden order is a seeded random permutation.
pub fn antichain(n: usize, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Instance {
        dag: Dag::new(n, &[]).unwrap(),
        hidden_order: planted_permutation(n, &mut rng),
    }
}

/// Plants a random permutation as the hidden order and keeps each forward
/// pair as an arc independently with probability `p`. `p = 0` degenerates
/// to an antichain, `p = 1` to the full order relation.
pub fn random(n: usize, p: f64, seed: u64) -> Instance {
    assert!((0.0..=1.0).contains(&p), "arc probability {p} out of range");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = planted_permutation(n, &mut rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                arcs.push((order[i].0, order[j].0));
            }
        }
    }
    Instance {
        dag: Dag::new(n, &arcs).unwrap(),
        hidden_order: order,
    }
}

/// Splits a planted permutation into `layer_count` contiguous blocks of
/// near-equal size and draws arcs only between consecutive blocks, each
/// with probability `p`. With `p = 1` the blocks are exactly the graph's
/// longest-path layers.
pub fn layered(n: usize, layer_count: usize, p: f64, seed: u64) -> Instance {
    assert!(layer_count >= 1, "need at least one layer");
    assert!((0.0..=1.0).contains(&p), "arc probability {p} out of range");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = planted_permutation(n, &mut rng);
    let base = n / layer_count;
    let extra = n % layer_count;
    let mut bounds = Vec::with_capacity(layer_count + 1);
    let mut at = 0;
    bounds.push(0);
    for i in 0..layer_count {
        at += base + usize::from(i < extra);
        bounds.push(at);
    }
    let mut arcs = Vec::new();
    for b in 0..layer_count.saturating_sub(1) {
        for i in bounds[b]..bounds[b + 1] {
            for j in bounds[b + 1]..bounds[b + 2] {
                if rng.gen_bool(p) {
                    arcs.push((order[i].0, order[j].0));
                }
            }
        }
    }
    Instance {
        dag: Dag::new(n, &arcs).unwrap(),
        hidden_order: order,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dag;
    use crate::extensions::count_extensions;
    use crate::oracle::ComparisonProvider;
    use num_bigint::BigUint;

    fn assert_consistent(inst: &Instance) {
        ComparisonProvider::new(&inst.dag, &inst.hidden_order)
            .expect("planted order must be topological");
    }

    #[test]
    fn chain_shape() {
        let inst = chain(4);
        assert_eq!(inst.dag.arc_count(), 3);
        assert_eq!(
            inst.hidden_order,
            vec![VertexId(0), VertexId(1), VertexId(2), VertexId(3)]
        );
        assert_consistent(&inst);
        assert_eq!(
            count_extensions(&inst.dag).unwrap().value,
            BigUint::from(1u32)
        );
    }

    #[test]
    fn antichain_shape() {
        let inst = antichain(5, 3);
        assert_eq!(inst.dag.arc_count(), 0);
        assert_consistent(&inst);
        let sorted = {
            let mut o = inst.hidden_order.clone();
            o.sort();
            o
        };
        assert_eq!(sorted, (0..5).map(VertexId).collect::<Vec<_>>());
    }

    #[test]
    fn random_extremes() {
        let zero = random(6, 0.0, 9);
        assert_eq!(zero.dag.arc_count(), 0);
        let one = random(6, 1.0, 9);
        assert_eq!(one.dag.arc_count(), 15);
        assert_consistent(&one);
        // the full order relation admits exactly one topological order
        assert_eq!(
            count_extensions(&one.dag).unwrap().value,
            BigUint::from(1u32)
        );
    }

    #[test]
    fn random_instances_are_consistent_and_deterministic() {
        for seed in 0..10 {
            let a = random(12, 0.3, seed);
            let b = random(12, 0.3, seed);
            assert_eq!(a.hidden_order, b.hidden_order);
            assert_eq!(a.dag.arcs(), b.dag.arcs());
            assert_consistent(&a);
            dag::kahn_order(&a.dag).expect("generated graphs are acyclic");
        }
    }

    #[test]
    fn layered_blocks_match_layers_at_p_one() {
        let inst = layered(10, 3, 1.0, 5);
        assert_consistent(&inst);
        // block sizes 4, 3, 3; arcs only between consecutive blocks
        assert_eq!(inst.dag.arc_count(), 4 * 3 + 3 * 3);
        let layers = dag::layers(&inst.dag).unwrap();
        let sizes: Vec<usize> = layers.layers().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![4, 3, 3]);
    }

    #[test]
    fn layered_single_layer_is_an_antichain() {
        let inst = layered(6, 1, 1.0, 2);
        assert_eq!(inst.dag.arc_count(), 0);
        assert_consistent(&inst);
    }

    #[test]
    fn empty_instances() {
        assert_eq!(chain(0).dag.vertex_count(), 0);
        assert_eq!(antichain(0, 1).dag.vertex_count(), 0);
        assert_eq!(random(0, 0.5, 1).dag.vertex_count(), 0);
        assert_eq!(layered(0, 2, 0.5, 1).dag.vertex_count(), 0);
    }
}
