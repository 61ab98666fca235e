// Usage: cargo run --example invariant

use std::error::Error;

use kauffman_bmw::braid::BraidWord;
use kauffman_bmw::laurent::Specialization;
use kauffman_bmw::skein::SkeinEngine;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut engine = SkeinEngine::new();
    for text in ["B2: 1", "B2:", "B2: 1^3", "B3: 1 -2 1 -2", "B3: 1 2 1 2 1 2"] {
        let b: BraidWord = text.parse()?;
        let f = engine.kauffman_f(&b);
        println!("{b}  ({} components, e = {})", b.component_count(), b.exponent_sum());
        println!("  F = {f}");
        for spec in [Specialization::osp(1), Specialization::so(1)] {
            println!("  {spec}: {}", engine.phi(&b, spec));
        }
    }
    let stats = engine.stats();
    println!("{} evaluations, {} memo hits", stats.evaluations, stats.memo_hits);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
