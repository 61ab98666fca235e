// Usage: cargo run --example trace_weights

use std::error::Error;

use kauffman_bmw::bratteli::{is_truncation_vertex, lemma2_check, matrix_unit_trace, sum_rule_check, truncation_rule};
use kauffman_bmw::laurent::{Specialization, Specialize};
use kauffman_bmw::young::{off_diagonal_signs, partitions, q_lambda, YoungDiagram};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in ["[1]", "[2]", "[1,1]", "[2,1]"] {
        let shape: YoungDiagram = text.parse()?;
        let q = q_lambda(&shape);
        println!("Q{shape} = {q}");
        println!("  at osp:1 {}", q.specialize(Specialization::osp(1)));
        println!("  tr(E) on level {} = {}", shape.size(), matrix_unit_trace(&shape, shape.size())?);
    }

    for f in 0..=4 {
        println!("sum rule at level {f}: {}", sum_rule_check(f));
    }

    let mut checked = 0;
    for size in 0..=6 {
        for shape in partitions(size) {
            for n in 1..=3 {
                assert!(lemma2_check(&shape, n));
                let rule = truncation_rule(&shape, n);
                assert_eq!(is_truncation_vertex(&shape, Specialization::osp(n)), rule);
                checked += 1;
            }
            let (lhs, rhs) = off_diagonal_signs(&shape);
            assert_eq!(lhs, rhs);
        }
    }
    println!("{checked} (shape, n) pairs agree at osp and so, truncation rule included");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
