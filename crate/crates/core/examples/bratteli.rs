// Usage: cargo run --example bratteli

use std::error::Error;

use kauffman_bmw::bratteli::{double_factorial, BratteliGraph};
use kauffman_bmw::laurent::Specialization;
use kauffman_bmw::young::YoungDiagram;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let generic = BratteliGraph::generic(4);
    print!("{}", generic.to_text());

    for f in 1..=6u64 {
        let g = BratteliGraph::generic(f as usize);
        println!("f = {f}: {} path pairs, (2f-1)!! = {}", g.omega_size(f as usize), double_factorial(2 * f - 1));
    }

    let truncated = BratteliGraph::truncated(Specialization::osp(1), 4);
    print!("{}", truncated.to_dot());

    let shape: YoungDiagram = "[2,1]".parse()?;
    for path in truncated.paths_to(3, &shape)? {
        let steps: Vec<String> = path.iter().map(|s| s.to_string()).collect();
        println!("path to {shape}: {}", steps.join(" -> "));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
