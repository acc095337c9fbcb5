//! Peel a longest path out of a graph and look at what is left: the reduced
//! graph keeps every off-path vertex plus the path vertices they pin down,
//! and never grows past 3(n - ell) + 1 vertices.
//!
//!     cargo run --example path_reduction

use dagsort::dag::longest_path;
use dagsort::gen;
use dagsort::sorter::build_reduced_dag;

fn main() {
    for (label, inst) in [
        ("random n=12 p=0.5", gen::random(12, 0.5, 9)),
        ("random n=12 p=0.15", gen::random(12, 0.15, 9)),
        ("layered n=12 k=4", gen::layered(12, 4, 1.0, 9)),
        ("chain n=12", gen::chain(12)),
    ] {
        let n = inst.dag.vertex_count();
        let path = longest_path(&inst.dag).unwrap();
        let ell = path.len();
        let reduced = build_reduced_dag(&inst.dag, &path);
        println!("{label}: n={n}, longest path ell={ell}");
        println!(
            "  path: {}",
            path.vertices()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" -> ")
        );
        let on_path: std::collections::HashSet<_> = path.vertices().iter().copied().collect();
        let kept: Vec<String> = reduced
            .to_original
            .iter()
            .map(|v| if on_path.contains(v) { format!("[{v}]") } else { v.to_string() })
            .collect();
        println!(
            "  reduced graph: {} vertices ({} arcs), bound 3(n-ell)+1 = {}",
            reduced.dag.vertex_count(),
            reduced.dag.arc_count(),
            3 * (n - ell) + 1
        );
        println!("  kept (path vertices in brackets): {}\n", kept.join(" "));
    }
}
