//! The on-disk formats: a graph file ("n m" header then one arc per line)
//! and an order file (one vertex id per line). Write an instance, read it
//! back, sort it. The same files drive the dagsort binary.
//!
//!     cargo run --example graph_files

use dagsort::gen;
use dagsort::io;
use dagsort::sorter::topological_heapsort_with_insertion;
use dagsort::ComparisonProvider;

fn main() {
    let dir = std::env::temp_dir().join("dagsort-example");
    std::fs::create_dir_all(&dir).unwrap();
    let graph_path = dir.join("demo.graph");
    let order_path = dir.join("demo.order");

    let inst = gen::layered(8, 2, 1.0, 5);
    io::write_dag(&graph_path, &inst.dag).unwrap();
    io::write_order(&order_path, &inst.hidden_order).unwrap();
    println!("graph file ({}):", graph_path.display());
    print!("{}", std::fs::read_to_string(&graph_path).unwrap());
    println!("\norder file ({}):", order_path.display());
    print!("{}", std::fs::read_to_string(&order_path).unwrap());

    let dag = io::read_dag(&graph_path).unwrap();
    let hidden = io::read_order(&order_path).unwrap();
    let mut provider = ComparisonProvider::new(&dag, &hidden).unwrap();
    let run = topological_heapsort_with_insertion(&dag, &mut provider).unwrap();
    assert_eq!(run.order, hidden);
    println!(
        "\nread back and sorted: {} comparisons, order recovered",
        run.comparisons
    );

    // parse errors carry 1-based line numbers
    let broken = dir.join("broken.graph");
    std::fs::write(&broken, "2 1\n0 two\n").unwrap();
    println!("broken file: {}", io::read_dag(&broken).unwrap_err());
}
