//! Decide conjugacy through cyclic normal factors and cyclic matching.
//!
//! cargo run --example conjugacy

use raag::conjugacy::{cyclic_normal_factors, decide_conjugacy};
use raag::graph::DefiningGraph;
use raag::word::{format_letters, parse_word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = DefiningGraph::build(
        &["a1", "a2", "a3", "a4"],
        &[("a1", "a4"), ("a2", "a3"), ("a2", "a4")],
    )?;

    let w = parse_word(&g, "a1^-1 a2 a3 a1 a4^-1")?;
    let f = cyclic_normal_factors(&g, &w);
    println!("factors of {}:", format_letters(&g, &w));
    for factor in &f.factors {
        let names: Vec<&str> = factor.component.iter().map(|&i| g.name(i)).collect();
        println!(
            "  {{{}}}: {}",
            names.join(", "),
            format_letters(&g, &factor.word)
        );
    }
    println!("  {} cycling events", f.events.len());

    for (a, b) in [
        ("a1", "a2 a1 a2^-1"),
        ("a1", "a1^-1"),
        ("a1 a2 a3", "a3 a1 a2"),
        ("a1 a2", "a1 a3"),
    ] {
        let verdict = decide_conjugacy(&g, &parse_word(&g, a)?, &parse_word(&g, b)?);
        println!(
            "{a:10} ~ {b:12} {} (shifts {:?})",
            verdict.conjugate, verdict.shifts
        );
    }
    Ok(())
}
