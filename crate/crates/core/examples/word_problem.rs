//! Decide whether words represent the identity, and compare two words.
//!
//! cargo run --example word_problem

use raag::conjugacy::{equal_in_group, is_identity};
use raag::graph::DefiningGraph;
use raag::word::parse_word;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = DefiningGraph::build(
        &["a1", "a2", "a3", "a4"],
        &[("a1", "a4"), ("a2", "a3"), ("a2", "a4")],
    )?;

    for text in [
        "a1 a1^-1",
        "a1 a4 a1^-1 a4^-1",
        "a1 a2 a1^-1 a2^-1",
        "a2 a3 a4 a2^-1 a4^-1 a3^-1",
    ] {
        let w = parse_word(&g, text)?;
        println!("{text:32} identity: {}", is_identity(&g, &w));
    }

    let u = parse_word(&g, "a1 a4 a2")?;
    let v = parse_word(&g, "a4 a1 a2")?;
    println!("a1 a4 a2 = a4 a1 a2: {}", equal_in_group(&g, &u, &v));
    Ok(())
}
