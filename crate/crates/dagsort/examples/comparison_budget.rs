//! Sweep a grid of instances and show both algorithms staying inside their
//! comparison budgets: n + O(log T) for the plain heap sweep, O(log T) once
//! the longest path is peeled off and re-inserted.
//!
//!     cargo run --example comparison_budget

use dagsort::extensions::count_extensions;
use dagsort::gen;
use dagsort::sorter::{topological_heapsort, topological_heapsort_with_insertion};
use dagsort::ComparisonProvider;

fn main() {
    println!(
        "{:<24} {:>7} {:>8} {:>6} {:>6}",
        "instance", "log2T", "n+log2T", "ths", "thsi"
    );
    let mut grid: Vec<(String, gen::Instance)> = Vec::new();
    for n in [8, 12, 16, 20, 24] {
        for p in [0.1, 0.5, 0.9] {
            grid.push((format!("random n={n} p={p}"), gen::random(n, p, 1)));
        }
    }
    grid.push(("chain n=24".into(), gen::chain(24)));
    grid.push(("antichain n=12".into(), gen::antichain(12, 1)));

    for (label, inst) in grid {
        let log2t = count_extensions(&inst.dag).unwrap().log2;
        let n = inst.dag.vertex_count() as f64;

        let mut p = ComparisonProvider::new(&inst.dag, &inst.hidden_order).unwrap();
        let ths = topological_heapsort(&inst.dag, &mut p).unwrap();
        let mut p = ComparisonProvider::new(&inst.dag, &inst.hidden_order).unwrap();
        let thsi = topological_heapsort_with_insertion(&inst.dag, &mut p).unwrap();
        assert_eq!(ths.order, inst.hidden_order);
        assert_eq!(thsi.order, inst.hidden_order);

        println!(
            "{label:<24} {log2t:>7.2} {:>8.2} {:>6} {:>6}",
            n + log2t,
            ths.comparisons,
            thsi.comparisons
        );
    }
    println!("\nths tracks n + log2 T; thsi tracks log2 T alone, so it wins when T is small");
}
