// Usage: cargo run --example diagrams

use std::error::Error;

use kauffman_bmw::braid::BraidWord;
use kauffman_bmw::diagram::CrossingId;
use kauffman_bmw::skein::{skein_rhs, SkeinEngine};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let b: BraidWord = "B2: 1 1".parse()?;
    let d = b.closure_diagram();
    print!("{}", d.dump());

    let res = d.resolve_crossing(CrossingId(0))?;
    println!("switched:\n{}", res.switched.dump());
    println!("parallel smoothing:\n{}", res.smooth_par.dump());
    println!("cap smoothing:\n{}", res.smooth_cap.dump());

    let (bare, curls) = res.smooth_cap.remove_curls();
    println!("cap smoothing without curls: {} free loops, curl signs sum to {curls}", bare.free_loops());

    let mut engine = SkeinEngine::new();
    let lhs = &engine.lambda(&d) - &engine.lambda(&res.switched);
    let rhs = skein_rhs(&mut engine, &d, CrossingId(0));
    println!("skein identity at the first crossing: {}", lhs == rhs);

    let rotated: BraidWord = "B3: -2 1 2 2 1".parse()?;
    let original: BraidWord = "B3: 1 -2 1 2 2".parse()?;
    println!(
        "rotated word gives the same key: {}",
        rotated.closure_diagram().key() == original.closure_diagram().key()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
