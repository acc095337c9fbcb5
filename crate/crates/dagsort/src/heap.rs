//! Arena-based pairing heap keyed by the hidden order.
//!
//! Every key comparison goes through the counting provider. An insert links
//! the new vertex with the current root, one comparison, and delete-min
//! recombines the root's children with the standard two-pass scheme, exactly
//! `c - 1` comparisons for `c` children. The arena is indexed by vertex id,
//! so a heap of capacity `n` allocates once and never again.

use crate::dag::VertexId;
use crate::oracle::ComparisonProvider;

const NIL: u32 = u32::MAX;

#[derive(Clone, Copy)]
struct Node {
    child: u32,
    sibling: u32,
}

pub struct PairingHeap {
    nodes: Vec<Node>,
    root: u32,
    len: usize,
}

impl PairingHeap {
    /// Heap over vertex ids below `capacity`.
    pub fn new(capacity: usize) -> PairingHeap {
        PairingHeap {
            nodes: vec![
                Node {
                    child: NIL,
                    sibling: NIL
                };
                capacity
            ],
            root: NIL,
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Inserts `v`, which must not currently be in the heap. At most one
    /// comparison; none when the heap was empty.
    pub fn insert(&mut self, v: VertexId, provider: &mut ComparisonProvider) {
        let v = v.0;
        self.nodes[v as usize] = Node {
            child: NIL,
            sibling: NIL,
        };
        self.root = if self.root == NIL {
            v
        } else {
            self.link(self.root, v, provider)
        };
        self.len += 1;
    }

    /// Removes and returns the minimum, `c - 1` comparisons for a root with
    /// `c` children.
    pub fn delete_min(&mut self, provider: &mut ComparisonProvider) -> Option<VertexId> {
        if self.root == NIL {
            return None;
        }
        let min = self.root;
        self.root = self.combine_children(self.nodes[min as usize].child, provider);
        self.len -= 1;
        Some(VertexId(min))
    }

    /// Links two roots; the larger becomes the first child of the smaller.
    fn link(&mut self, a: u32, b: u32, provider: &mut ComparisonProvider) -> u32 {
        let (parent, child) = if provider.less(VertexId(a), VertexId(b)) {
            (a, b)
        } else {
            (b, a)
        };
        self.nodes[child as usize].sibling = self.nodes[parent as usize].child;
        self.nodes[parent as usize].child = child;
        parent
    }

    /// Two passes over a sibling list: pair up left to right, then fold the
    /// results right to left. The first pass pushes each pair's winner onto
    /// `paired`, which reverses the order, so the left-to-right fold of the
    /// second pass combines right to left as required.
    fn combine_children(&mut self, first: u32, provider: &mut ComparisonProvider) -> u32 {
        if first == NIL {
            return NIL;
        }
        let mut paired = NIL;
        let mut cur = first;
        while cur != NIL {
            let a = cur;
            let b = self.nodes[a as usize].sibling;
            if b == NIL {
                self.nodes[a as usize].sibling = paired;
                paired = a;
                break;
            }
            let next = self.nodes[b as usize].sibling;
            self.nodes[a as usize].sibling = NIL;
            self.nodes[b as usize].sibling = NIL;
            let t = self.link(a, b, provider);
            self.nodes[t as usize].sibling = paired;
            paired = t;
            cur = next;
        }
        let mut acc = paired;
        cur = self.nodes[acc as usize].sibling;
        self.nodes[acc as usize].sibling = NIL;
        while cur != NIL {
            let next = self.nodes[cur as usize].sibling;
            self.nodes[cur as usize].sibling = NIL;
            acc = self.link(acc, cur, provider);
            cur = next;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn provider_with_ranks(rank: Vec<u32>) -> ComparisonProvider {
        ComparisonProvider::new_unchecked(rank)
    }

    fn identity_provider(n: u32) -> ComparisonProvider {
        provider_with_ranks((0..n).collect())
    }

    #[test]
    fn drains_in_order() {
        let mut p = identity_provider(6);
        let mut h = PairingHeap::new(6);
        for &v in &[3u32, 1, 4, 0, 5, 2] {
            h.insert(VertexId(v), &mut p);
        }
        assert_eq!(h.len(), 6);
        let mut out = Vec::new();
        while let Some(v) = h.delete_min(&mut p) {
            out.push(v.0);
        }
        assert_eq!(out, vec![0, 1, 2, 3, 4, 5]);
        assert!(h.is_empty());
    }

    #[test]
    fn insert_costs_at_most_one_comparison() {
        let mut p = identity_provider(3);
        let mut h = PairingHeap::new(3);
        h.insert(VertexId(2), &mut p);
        assert_eq!(p.count(), 0);
        h.insert(VertexId(0), &mut p);
        assert_eq!(p.count(), 1);
        h.insert(VertexId(1), &mut p);
        assert_eq!(p.count(), 2);
    }

    #[test]
    fn delete_min_costs_children_minus_one() {
        // ascending inserts hang every vertex directly off the root, so the
        // first delete-min recombines n - 1 children with n - 2 comparisons
        for n in 2u32..10 {
            let mut p = identity_provider(n);
            let mut h = PairingHeap::new(n as usize);
            for v in 0..n {
                h.insert(VertexId(v), &mut p);
            }
            assert_eq!(p.count(), (n - 1) as u64);
            assert_eq!(h.delete_min(&mut p), Some(VertexId(0)));
            assert_eq!(p.count(), (n - 1) as u64 + (n - 2) as u64);
        }
    }

    #[test]
    fn delete_on_empty_is_none() {
        let mut p = identity_provider(1);
        let mut h = PairingHeap::new(1);
        assert_eq!(h.delete_min(&mut p), None);
        h.insert(VertexId(0), &mut p);
        assert_eq!(h.delete_min(&mut p), Some(VertexId(0)));
        assert_eq!(h.delete_min(&mut p), None);
        assert_eq!(p.count(), 0);
    }

    #[test]
    fn reinserting_a_deleted_vertex_is_fine() {
        let mut p = identity_provider(4);
        let mut h = PairingHeap::new(4);
        for v in 0..4 {
            h.insert(VertexId(v), &mut p);
        }
        assert_eq!(h.delete_min(&mut p), Some(VertexId(0)));
        h.insert(VertexId(0), &mut p);
        let mut out = Vec::new();
        while let Some(v) = h.delete_min(&mut p) {
            out.push(v.0);
        }
        assert_eq!(out, vec![0, 1, 2, 3]);
    }

    #[test]
    fn interleaved_against_reference_model() {
        // Deterministic mixed workload driven by a fixed rank table; the
        // reference is a sorted list by rank.
        let ranks: Vec<u32> = vec![7, 3, 9, 1, 8, 0, 5, 2, 6, 4];
        let mut p = provider_with_ranks(ranks.clone());
        let mut h = PairingHeap::new(10);
        let mut model: Vec<u32> = Vec::new();
        let script: &[(bool, u32)] = &[
            (true, 0),
            (true, 1),
            (true, 2),
            (false, 0),
            (true, 3),
            (true, 4),
            (false, 0),
            (false, 0),
            (true, 5),
            (true, 6),
            (true, 7),
            (false, 0),
            (false, 0),
            (true, 8),
            (true, 9),
            (false, 0),
            (false, 0),
            (false, 0),
            (false, 0),
            (false, 0),
        ];
        for &(is_insert, v) in script {
            if is_insert {
                h.insert(VertexId(v), &mut p);
                model.push(v);
                model.sort_by_key(|&x| ranks[x as usize]);
            } else {
                let got = h.delete_min(&mut p).map(|x| x.0);
                let want = if model.is_empty() {
                    None
                } else {
                    Some(model.remove(0))
                };
                assert_eq!(got, want);
            }
        }
        assert!(h.is_empty() && model.is_empty());
    }
}
