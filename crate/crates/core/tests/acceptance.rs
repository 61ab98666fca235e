use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use kauffman_bmw::braid::BraidWord;
use kauffman_bmw::bratteli::{
    double_factorial, is_truncation_vertex, lemma2_check, sum_rule_check, truncation_rule, BratteliGraph,
};
use kauffman_bmw::closed_forms::{parity_check, symmetry_check, torus2_invariant};
use kauffman_bmw::laurent::{quantum_dim, LocalizedPoly, Specialization, Specialize, Specialized};
use kauffman_bmw::skein::SkeinEngine;
use kauffman_bmw::verify::{BRAID_RELATION_CORPUS, MARKOV_CORPUS};
use kauffman_bmw::young::{off_diagonal_signs, partitions, strip_signs, YoungDiagram};

type Check = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn oracle() -> Check {
    let mut engine = SkeinEngine::new();
    for m in -6..=8 {
        let skein = engine.kauffman_f(&BraidWord::torus2(m));
        ensure(skein == torus2_invariant(m), || format!("m={m}"))?;
    }
    Ok(())
}

fn torus_symmetry() -> Check {
    for m in -6..=8 {
        ensure(symmetry_check(m), || format!("flip m={m}"))?;
    }
    for m in -4..=6 {
        let f = torus2_invariant(m);
        for n in 1..=2 {
            let osp = f.specialize(Specialization::osp(n));
            let so = f.specialize(Specialization::so(n));
            ensure(osp == so, || format!("specializations differ at m={m} n={n}"))?;
        }
    }
    Ok(())
}

fn corpus(words: &[&str]) -> Vec<BraidWord> {
    words.iter().map(|w| w.parse().expect("corpus parses")).collect()
}

fn markov() -> Check {
    let mut engine = SkeinEngine::new();
    for b in corpus(&MARKOV_CORPUS) {
        let f = engine.kauffman_f(&b);
        for i in 1..b.strands() as i64 {
            for a in [i, -i] {
                let g = BraidWord::from_signed(b.strands(), &[a]).unwrap();
                ensure(engine.kauffman_f(&b.conjugate(&g)) == f, || format!("{b} conjugated by {a}"))?;
            }
        }
        for positive in [true, false] {
            ensure(engine.kauffman_f(&b.stabilize(positive)) == f, || format!("{b} stabilized"))?;
        }
    }
    Ok(())
}

fn braid_relation() -> Check {
    let mut engine = SkeinEngine::new();
    for b in corpus(&BRAID_RELATION_CORPUS) {
        let f = engine.kauffman_f(&b);
        let rewrites = b.braid_relation_rewrites();
        ensure(!rewrites.is_empty(), || format!("{b} has no rewrite"))?;
        for w in rewrites {
            ensure(engine.kauffman_f(&w) == f, || format!("{b} -> {w}"))?;
        }
    }
    Ok(())
}

fn parity() -> Check {
    for m in 1..=10 {
        ensure(parity_check(m), || format!("m={m}"))?;
    }
    Ok(())
}

fn sum_rule() -> Check {
    for f in 0..=5 {
        ensure(sum_rule_check(f), || format!("f={f}"))?;
    }
    Ok(())
}

fn omega() -> Check {
    let g = BratteliGraph::generic(6);
    let sizes: Vec<u128> = (1..=6).map(|f| g.omega_size(f)).collect();
    let expected: Vec<u128> = (1..=6).map(|f| double_factorial(2 * f - 1)).collect();
    ensure(sizes == expected && sizes == [1, 3, 15, 105, 945, 10395], || format!("{sizes:?}"))
}

fn lemma2_and_signs() -> Check {
    for size in 0..=6 {
        for shape in partitions(size) {
            for n in 1..=3 {
                ensure(lemma2_check(&shape, n), || format!("{shape} n={n}"))?;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let by_size: Vec<Vec<YoungDiagram>> = (0..=8).map(partitions).collect();
    for _ in 0..50 {
        let size = rng.gen_range(0..=8);
        let shape = &by_size[size][rng.gen_range(0..by_size[size].len())];
        let (lhs, rhs) = off_diagonal_signs(shape);
        ensure(lhs == rhs, || format!("off-diagonal signs for {shape}"))?;
        for k in 1..=size {
            let (lhs, rhs) = strip_signs(shape, k);
            ensure(lhs == rhs, || format!("strip k={k} for {shape}"))?;
        }
    }
    Ok(())
}

fn truncation() -> Check {
    for size in 0..=6 {
        for shape in partitions(size) {
            for n in 1..=3 {
                let rule = truncation_rule(&shape, n);
                ensure(is_truncation_vertex(&shape, Specialization::osp(n)) == rule, || format!("osp {shape} n={n}"))?;
                ensure(is_truncation_vertex(&shape, Specialization::so(n)) == rule, || format!("so {shape} n={n}"))?;
            }
        }
    }
    let shapes = |list: &[&[usize]]| {
        let mut v: Vec<YoungDiagram> = list.iter().map(|r| YoungDiagram::new(r.to_vec()).unwrap()).collect();
        v.sort();
        v
    };
    let figure: Vec<Vec<YoungDiagram>> = vec![
        shapes(&[&[]]),
        shapes(&[&[1]]),
        shapes(&[&[2], &[1, 1], &[]]),
        shapes(&[&[3], &[2, 1], &[1, 1, 1], &[1]]),
        shapes(&[&[4], &[3, 1], &[2], &[1, 1], &[]]),
    ];
    for spec in [Specialization::osp(1), Specialization::so(1)] {
        let g = BratteliGraph::truncated(spec, 4);
        ensure(g.levels() == &figure[..], || format!("{spec} depth 4 levels {:?}", g.levels()))?;
    }
    for n in 1..=3 {
        for d in 0..=6 {
            let osp = BratteliGraph::truncated(Specialization::osp(n), d);
            let so = BratteliGraph::truncated(Specialization::so(n), d);
            ensure(osp.levels() == so.levels(), || format!("graphs differ n={n} d={d}"))?;
            ensure(osp.to_dot() == so.to_dot(), || format!("edges differ n={n} d={d}"))?;
        }
    }
    Ok(())
}

fn loop_value() -> Check {
    let x = LocalizedPoly::x();
    for n in 1..=3 {
        let dim = Specialized::Poly(quantum_dim(n));
        ensure(x.specialize(Specialization::osp(n)) == dim, || format!("osp n={n}"))?;
        ensure(x.specialize(Specialization::so(n)) == dim, || format!("so n={n}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check, u64); 10] = [
        ("1 torus oracle, m in -6..8", oracle, 1),
        ("2 flip symmetry and osp = so on torus links", torus_symmetry, 1),
        ("3 Markov invariance on 20 words", markov, 30),
        ("4 braid relation on 10 words", braid_relation, 30),
        ("5 parity of generator powers, m in 1..10", parity, 1),
        ("6 sum rule, f in 0..5", sum_rule, 10),
        ("7 same-shape path pairs are (2f-1)!!", omega, 1),
        ("8 weights agree at osp/so, sign identity", lemma2_and_signs, 30),
        ("9 truncation rule and truncated graphs", truncation, 10),
        ("10 loop value specializes to quantum dimension", loop_value, 1),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let slow = elapsed > Duration::from_secs(limit);
        match (&result, slow) {
            (Ok(()), false) => println!("PASS {name} [{elapsed:.2?}]"),
            (Ok(()), true) => {
                failed += 1;
                println!("FAIL {name} [{elapsed:.2?} over {limit}s]");
            }
            (Err(why), _) => {
                failed += 1;
                println!("FAIL {name} [{elapsed:.2?}]: {why}");
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
