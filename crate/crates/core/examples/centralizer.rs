//! Generators of centralizers: minimal roots of the factors plus link
//! generators, carried back to the input word.
//!
//! cargo run --example centralizer

use raag::centralizer::{centralizer_of, minimal_root};
use raag::conjugacy::normal_form;
use raag::graph::DefiningGraph;
use raag::word::{format_letters, parse_word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = DefiningGraph::build(
        &["a1", "a2", "a3", "a4"],
        &[("a1", "a4"), ("a2", "a3"), ("a2", "a4")],
    )?;

    let root = minimal_root(&parse_word(&g, "a1 a2 a1 a2 a1 a2")?)?;
    println!(
        "(a1 a2)^3 has root {} with power {}",
        format_letters(&g, &root.root),
        root.power
    );

    for text in ["a1", "a2 a3", "a1 a3 a1 a3", "a2 a1 a3 a2^-1"] {
        let w = parse_word(&g, text)?;
        let c = centralizer_of(&g, &w);
        let gens: Vec<String> = c.generators.iter().map(|u| format_letters(&g, u)).collect();
        println!("C({text}) = <{}>", gens.join(", "));
        for u in &c.generators {
            let conj = u.concat(&w).concat(&u.inverse());
            assert_eq!(normal_form(&g, &conj), normal_form(&g, &w));
        }
    }
    Ok(())
}
