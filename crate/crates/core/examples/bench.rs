//! Time the conjugacy decision on random conjugate pairs of doubling length.
//!
//! cargo run --release --example bench

use raag::bench;
use raag::graph::DefiningGraph;

fn main() {
    let g = DefiningGraph::build(
        &["a1", "a2", "a3", "a4"],
        &[("a1", "a4"), ("a2", "a3"), ("a2", "a4")],
    )
    .expect("valid presentation");
    let rows = bench::run(&g, &bench::DEFAULT_SIZES, 5, 42);
    println!("{:>8} {:>10} {:>12}", "n", "seconds", "seconds/n");
    for r in &rows {
        println!(
            "{:>8} {:>10.5} {:>12.3e}",
            r.n, r.seconds, r.seconds_per_letter
        );
    }
    let ratios: Vec<String> = bench::ratios(&rows)
        .iter()
        .map(|r| format!("{r:.2}"))
        .collect();
    println!("doubling ratios: {}", ratios.join(" "));
}
