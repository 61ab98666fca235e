// Usage: cargo run --example verify_suites

use std::error::Error;

use kauffman_bmw::verify::{run, Bounds, Suite};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for suite in Suite::ALL {
        let report = run(suite, &Bounds::for_suite(suite));
        let failed = report.failures().count();
        println!("{suite:>10}: {} cases, {failed} failed", report.cases().len());
        if failed > 0 {
            return Err(format!("{suite} failed:\n{}", report.to_text()).into());
        }
    }
    let negative = Bounds { m: -10..=-1, ..Bounds::for_suite(Suite::Parity) };
    println!("parity for negative powers: {}", run(Suite::Parity, &negative).passed());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
