//! Inspect one sorting run: heap lifetimes, the greedy clique partition over
//! them, the lower-bound certificate it yields, and the per-vertex working
//! sets that cap the heap's comparison cost.
//!
//!     cargo run --example analyze_run

use dagsort::analysis::{greedy_clique_partition, partition_lower_bound, working_set_sizes};
use dagsort::extensions::count_extensions;
use dagsort::gen;
use dagsort::sorter::topological_heapsort;
use dagsort::ComparisonProvider;

fn main() {
    let inst = gen::random(10, 0.3, 11);
    let n = inst.dag.vertex_count();
    let mut provider = ComparisonProvider::new(&inst.dag, &inst.hidden_order).unwrap();
    let run = topological_heapsort(&inst.dag, &mut provider).unwrap();
    println!(
        "random n={n} p=0.3: {} comparisons, {} arcs\n",
        run.comparisons,
        inst.dag.arc_count()
    );

    println!("heap lifetimes (vertex: in..out on the shared event clock):");
    for r in &run.intervals {
        println!("  {}: {:>3}..{:<3}", r.vertex, r.t_in, r.t_out);
    }

    let part = greedy_clique_partition(&run.intervals);
    println!("\ngreedy clique partition ({} cliques):", part.len());
    for (i, (c, &t)) in part
        .cliques()
        .iter()
        .zip(part.critical_times())
        .enumerate()
    {
        let members = c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        println!("  clique {i}: critical_time={t} members: {members}");
    }

    let bound = partition_lower_bound(&part, n);
    let log2t = count_extensions(&inst.dag).unwrap().log2;
    println!("\ncertified lower bound: {bound:.3} <= log2 T = {log2t:.3}");

    let ws = working_set_sizes(&run.intervals);
    println!(
        "working sets: sum log2 w = {:.3} <= {:.3} = twice the partition mass",
        ws.sum_log2(),
        2.0 * part.sum_size_log_size()
    );
}
