// Usage: cargo run --example torus_links

use std::error::Error;

use kauffman_bmw::braid::BraidWord;
use kauffman_bmw::closed_forms::{g_power_coeffs, parity_check, symmetry_check, torus2_invariant};
use kauffman_bmw::skein::SkeinEngine;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for m in -2..=4 {
        let row = g_power_coeffs(m);
        println!("g^{m} = ({}) + ({}) g + ({}) e", row.a, row.b, row.c);
    }
    let mut engine = SkeinEngine::new();
    for m in -6..=8 {
        let closed = torus2_invariant(m);
        let skein = engine.kauffman_f(&BraidWord::torus2(m));
        if closed != skein {
            return Err(format!("closed form and skein disagree at m = {m}").into());
        }
        println!(
            "m = {m:>2}: agree, parity {}, flip-symmetric {}",
            parity_check(m),
            symmetry_check(m)
        );
    }
    println!("trefoil: {}", torus2_invariant(3));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
