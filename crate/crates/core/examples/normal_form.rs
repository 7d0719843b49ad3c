//! Build a piling from a word, print it, and read back the normal form.
//!
//! cargo run --example normal_form

use raag::conjugacy::{is_cyclic_normal, is_normal, normal_form};
use raag::graph::DefiningGraph;
use raag::piling::Piling;
use raag::word::{format_letters, format_word, parse_word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = DefiningGraph::parse_presentation(
        "gens a1 a2 a3 a4\ncommute a1 a4\ncommute a2 a3\ncommute a2 a4\n",
    )?;
    let w = parse_word(&g, "a2^-2 a4^-1 a3 a2 a4 a1 a2 a1^-1 a2^2 a4^-1")?;

    let p = Piling::from_word(&g, &w);
    println!("piling of {}:\n{p}", format_word(&g, &w));

    let nf = normal_form(&g, &w);
    println!("normal form: {}", format_letters(&g, &nf));
    println!("collapsed:   {}", format_word(&g, &nf));
    println!(
        "normal: {}, cyclic normal: {}",
        is_normal(&g, &nf),
        is_cyclic_normal(&g, &nf)
    );
    Ok(())
}
