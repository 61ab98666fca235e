// Usage: cargo run --example markov_moves

use std::error::Error;

use kauffman_bmw::braid::BraidWord;
use kauffman_bmw::skein::SkeinEngine;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut engine = SkeinEngine::new();
    let b: BraidWord = "B3: 1 -2 1 -2".parse()?;
    let f = engine.kauffman_f(&b);
    println!("{b}: {f}");

    let a: BraidWord = "B3: 2 1".parse()?;
    let conj = b.conjugate(&a);
    let stab_pos = b.stabilize(true);
    let stab_neg = b.stabilize(false).stabilize(true);
    for (label, w) in [("conjugated", &conj), ("stabilized +", &stab_pos), ("stabilized -,+", &stab_neg)] {
        let same = engine.kauffman_f(w) == f;
        println!("{label:>15} {w}: unchanged = {same}");
    }

    let inv: BraidWord = "B3: -2".parse()?;
    let padded = b.conjugate(&inv);
    println!("free reduction: {padded} -> {}", padded.free_reduce());

    let w: BraidWord = "B3: 1 2 1 -2".parse()?;
    for rewrite in w.braid_relation_rewrites() {
        println!("{w} ~ {rewrite}: unchanged = {}", engine.kauffman_f(&rewrite) == engine.kauffman_f(&w));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
