//! Draw topological orders uniformly at random and compare the empirical
//! frequencies with the exact uniform probability.
//!
//!     cargo run --example sample_orders

use std::collections::HashMap;

use dagsort::extensions::{count_extensions, sample_extension};
use dagsort::Dag;

fn main() {
    let dag = Dag::new(4, &[(0, 1), (0, 2)]).unwrap();
    let t = count_extensions(&dag).unwrap().value;
    println!("4 vertices, arcs 0->1 and 0->2, T = {t} orders\n");

    let draws = 60_000u64;
    let mut freq: HashMap<String, u64> = HashMap::new();
    for seed in 0..draws {
        let order = sample_extension(&dag, seed).unwrap();
        let key = order
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        *freq.entry(key).or_insert(0) += 1;
    }

    let mut rows: Vec<(String, u64)> = freq.into_iter().collect();
    rows.sort();
    println!("{:<12} {:>8} {:>10} {:>10}", "order", "count", "observed", "uniform");
    let uniform = 1.0 / rows.len() as f64;
    for (key, count) in rows {
        println!(
            "{key:<12} {count:>8} {:>10.4} {uniform:>10.4}",
            count as f64 / draws as f64
        );
    }
}
