//! Free homotopy of loops in a cube complex mapped to the Salvetti complex.
//! The two loops below have conjugate images in the free group, yet they
//! are not freely homotopic in the complex.
//!
//! cargo run --example groupoid

use raag::complex::{based_cycle, decide_groupoid_conjugacy, BasedWord, CubeComplexMap, Strategy};
use raag::conjugacy::conjugate_in_raag;
use raag::graph::DefiningGraph;
use raag::word::format_letters;

const COMPLEX: &str = "
vertices x1 x2
edge e1 x1 x1 a1
edge e2 x1 x2 a2
edge e3 x2 x2 a1
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = DefiningGraph::free("a", 2);
    let cx = CubeComplexMap::parse(&g, COMPLEX)?;
    let report = cx.validate(&g);
    println!(
        "valid: {}, assumed: {:?}",
        report.is_valid(),
        report.assumed
    );

    let first = BasedWord::parse(&cx, &g, "x1: a1")?;
    let second = BasedWord::parse(&cx, &g, "x1: a2 a1 a2^-1")?;
    println!(
        "images conjugate in the group: {}",
        conjugate_in_raag(&g, first.word(), second.word())
    );
    let verdict = decide_groupoid_conjugacy(&cx, &g, &first, &second, Strategy::Reachability)?;
    println!(
        "loops freely homotopic: {} ({:?})",
        verdict.conjugate, verdict.stage
    );
    println!(
        "second loop normalizes to {}: {}",
        cx.vertex_name(verdict.second.base),
        format_letters(&g, &verdict.second.word())
    );

    let cycled = based_cycle(&cx, &second)?;
    println!(
        "based cycling moves x1: a2 a1 a2^-1 to {}: {}",
        cx.vertex_name(cycled.base()),
        format_letters(&g, cycled.word())
    );
    let verdict =
        decide_groupoid_conjugacy(&cx, &g, &second, &cycled, Strategy::BoundedEnumeration)?;
    println!("and the two are freely homotopic: {}", verdict.conjugate);
    Ok(())
}
