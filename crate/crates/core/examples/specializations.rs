// Usage: cargo run --example specializations

use std::error::Error;

use kauffman_bmw::closed_forms::{trace_g_power, trace_sign_check, torus2_invariant};
use kauffman_bmw::laurent::{quantum_dim, LaurentPoly2, LocalizedPoly, Specialization, Specialize};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let x = LocalizedPoly::x();
    println!("x = {x}");
    for n in 1..=3 {
        let osp = x.specialize(Specialization::osp(n));
        let so = x.specialize(Specialization::so(n));
        println!("n = {n}: osp {osp} | so {so} | quantum dim {}", quantum_dim(n));
    }

    let p = &LaurentPoly2::rs(1, 2) + &LaurentPoly2::rs(-3, 1);
    println!("p = {p}, p(-r,-s) = {}", p.flip_vars());

    let hopf = torus2_invariant(2);
    for n in 1..=2 {
        let osp = hopf.specialize(Specialization::osp(n));
        let so = hopf.specialize(Specialization::so(n));
        println!("Hopf link at n = {n}: {osp}  (equal at so: {})", osp == so);
    }

    // traces of odd powers flip sign between the two substitutions
    let t = trace_g_power(1);
    println!("tr(g) = {t}");
    println!("  osp:1 -> {}", t.specialize(Specialization::osp(1)));
    println!("  so:1  -> {}", t.specialize(Specialization::so(1)));
    println!("sign rule holds for m in 0..6: {}", (0..=6).all(|m| trace_sign_check(m, 1)));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
