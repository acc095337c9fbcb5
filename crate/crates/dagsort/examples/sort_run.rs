//! Sort one hidden instance with both algorithms and compare their
//! comparison counts against the information-theoretic floor.
//!
//!     cargo run --example sort_run

use dagsort::extensions::count_extensions;
use dagsort::gen;
use dagsort::sorter::{topological_heapsort, topological_heapsort_with_insertion};
use dagsort::ComparisonProvider;

fn main() {
    let inst = gen::random(14, 0.25, 42);
    let n = inst.dag.vertex_count();
    let m = inst.dag.arc_count();
    let log2t = count_extensions(&inst.dag).unwrap().log2;
    println!("instance: n={n} m={m}, log2 T = {log2t:.3}");
    println!(
        "hidden order: {}",
        inst.hidden_order
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );

    for run in [
        {
            let mut p = ComparisonProvider::new(&inst.dag, &inst.hidden_order).unwrap();
            topological_heapsort(&inst.dag, &mut p).unwrap()
        },
        {
            let mut p = ComparisonProvider::new(&inst.dag, &inst.hidden_order).unwrap();
            topological_heapsort_with_insertion(&inst.dag, &mut p).unwrap()
        },
    ] {
        assert_eq!(run.order, inst.hidden_order);
        println!(
            "{:>4}: {} comparisons (floor {:.1}), recovered the hidden order",
            run.algorithm.to_string(),
            run.comparisons,
            log2t
        );
    }
}
