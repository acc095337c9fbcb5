//! Estimate log2 T by sorting a uniformly sampled order and reading off the
//! comparison count. Cheap, and within a constant factor of the truth; the
//! exact counter checks it here on instances small enough to count.
//!
//!     cargo run --example estimate_log_t

use dagsort::extensions::{count_extensions, estimate_log_t};
use dagsort::gen;

fn main() {
    let shapes = [
        ("chain n=20", gen::chain(20).dag),
        ("antichain n=12", gen::antichain(12, 0).dag),
        ("random n=20 p=0.15", gen::random(20, 0.15, 3).dag),
        ("random n=24 p=0.4", gen::random(24, 0.4, 3).dag),
    ];
    let repeats = 40u64;
    println!(
        "{:<20} {:>10} {:>16}",
        "shape", "log2 T", "mean estimate"
    );
    for (label, dag) in shapes {
        let exact = count_extensions(&dag).unwrap().log2;
        let mean = (0..repeats)
            .map(|s| estimate_log_t(&dag, s).unwrap().0)
            .sum::<f64>()
            / repeats as f64;
        println!("{label:<20} {exact:>10.3} {mean:>16.3}");
    }
    println!("\n(each estimate is one sorting run on a sampled order; {repeats} runs averaged)");
}
