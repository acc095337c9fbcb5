//! Count topological orders exactly for a few shapes. The count is the
//! denominator of every bound in this crate: sorting needs at least
//! log2 T comparisons.
//!
//!     cargo run --example count_orders

use dagsort::extensions::count_extensions;
use dagsort::gen;
use dagsort::Dag;

fn main() {
    let diamond = Dag::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    let shapes = [
        ("chain n=10", gen::chain(10).dag),
        ("antichain n=10", gen::antichain(10, 0).dag),
        ("diamond", diamond),
        ("random n=16 p=0.2", gen::random(16, 0.2, 7).dag),
        ("layered n=12 k=3", gen::layered(12, 3, 1.0, 7).dag),
    ];
    println!("{:<20} {:>24} {:>10}", "shape", "T", "log2 T");
    for (label, dag) in shapes {
        let c = count_extensions(&dag).unwrap();
        println!("{label:<20} {:>24} {:>10.3}", c.value.to_string(), c.log2);
    }

    // the counter refuses anything past 25 vertices; estimate instead
    let wide = gen::antichain(26, 0).dag;
    println!("\nantichain n=26: {}", count_extensions(&wide).unwrap_err());
}
