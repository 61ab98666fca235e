//! Self-checks gathered into named suites with a machine-readable report.

use std::fmt::{self, Write};
use std::ops::RangeInclusive;

use serde_json::{json, Value};

use crate::braid::BraidWord;
use crate::bratteli::{
    double_factorial, is_truncation_vertex, lemma2_check, sum_rule_check, truncation_rule, BratteliGraph,
};
use crate::closed_forms::{parity_check, symmetry_check, torus2_invariant, trace_sign_check};
use crate::laurent::{quantum_dim, LocalizedPoly, Specialization, Specialize, Specialized};
use crate::skein::SkeinEngine;
use crate::young::{off_diagonal_signs, partitions, strip_signs};

/// Words on at most four strands with at most eight crossings.
pub const MARKOV_CORPUS: [&str; 20] = [
    "B2: 1^3",
    "B2: -1^5",
    "B2: 1^4",
    "B3: 1 -2",
    "B3: 1 -2 1 -2",
    "B3: 1 1 2",
    "B3: 1 2 1 2",
    "B3: 1 -2 1 1 -2",
    "B3: 1^3 -2",
    "B3: 1 1 -2 -2 1",
    "B3: -1 -1 -1 -2 1 -2",
    "B3: 1 2 1 2 1 2",
    "B4: 1 2 3",
    "B4: 1 -2 3",
    "B4: 1 -2 3 -2",
    "B4: 1 2 3 1 2",
    "B4: 1 1 3 3",
    "B4: 1 -2 1 3 -2 3",
    "B4: 1 2 -3 1 2 -3",
    "B4: 2 1 2 3 -2 3 -1 2",
];

/// Words that contain at least one rewritable `i (i+1) i` triple.
pub const BRAID_RELATION_CORPUS: [&str; 10] = [
    "B3: 1 2 1",
    "B3: -1 -2 -1",
    "B3: 1 2 1 2",
    "B3: 2 1 2 -1",
    "B3: 1 2 1 1 -2",
    "B4: 2 3 2 1",
    "B4: 1 2 1 3 2 3",
    "B4: -2 -3 -2 1 -3",
    "B4: 3 2 3 -1 2 1 2",
    "B4: 1 2 1 2 3 2",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Suite {
    Markov,
    Parity,
    Symmetry,
    Sumrule,
    Lemma2,
    Omega,
    Oracle,
    Truncation,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Markov,
        Suite::Parity,
        Suite::Symmetry,
        Suite::Sumrule,
        Suite::Lemma2,
        Suite::Omega,
        Suite::Oracle,
        Suite::Truncation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Markov => "markov",
            Suite::Parity => "parity",
            Suite::Symmetry => "symmetry",
            Suite::Sumrule => "sumrule",
            Suite::Lemma2 => "lemma2",
            Suite::Omega => "omega",
            Suite::Oracle => "oracle",
            Suite::Truncation => "truncation",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub m: RangeInclusive<i64>,
    pub max_size: usize,
    pub max_n: u32,
    pub max_f: usize,
    pub max_depth: usize,
}

impl Bounds {
    /// Defaults for a suite; ranges that differ per suite are set here.
    pub fn for_suite(suite: Suite) -> Self {
        Bounds {
            m: match suite {
                Suite::Parity => 1..=10,
                _ => -6..=8,
            },
            max_size: 6,
            max_n: 3,
            max_f: match suite {
                Suite::Sumrule => 5,
                _ => 6,
            },
            max_depth: 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub suite: Suite,
    pub ordinal: usize,
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    cases: Vec<CaseResult>,
}

impl Report {
    pub fn cases(&self) -> &[CaseResult] {
        &self.cases
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed)
    }

    pub fn merge(&mut self, other: Report) {
        self.cases.extend(other.cases);
        self.cases.sort_by_key(|c| (c.suite, c.ordinal));
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status} {} {}", c.suite, c.case);
            if !c.detail.is_empty() {
                let _ = write!(out, " ({})", c.detail);
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} cases, {} failed", self.cases.len(), failed);
        out
    }

    pub fn to_json(&self) -> Value {
        let cases: Vec<Value> = self
            .cases
            .iter()
            .map(|c| json!({ "suite": c.suite.name(), "case": c.case, "passed": c.passed, "detail": c.detail }))
            .collect();
        json!({ "schema": 1, "passed": self.passed(), "cases": cases })
    }
}

struct Recorder {
    suite: Suite,
    cases: Vec<CaseResult>,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder { suite, cases: Vec::new() }
    }

    fn check(&mut self, case: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.cases.push(CaseResult {
            suite: self.suite,
            ordinal: self.cases.len(),
            case: case.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn finish(mut self) -> Report {
        self.cases.sort_by_key(|c| c.ordinal);
        Report { cases: self.cases }
    }
}

pub fn run(suite: Suite, bounds: &Bounds) -> Report {
    let mut rec = Recorder::new(suite);
    match suite {
        Suite::Oracle => oracle(&mut rec, bounds),
        Suite::Parity => {
            for m in bounds.m.clone() {
                rec.check(format!("m={m}"), parity_check(m), "");
            }
        }
        Suite::Symmetry => symmetry(&mut rec, bounds),
        Suite::Markov => markov(&mut rec),
        Suite::Sumrule => {
            for f in 0..=bounds.max_f {
                rec.check(format!("f={f}"), sum_rule_check(f), "");
            }
        }
        Suite::Omega => {
            let g = BratteliGraph::generic(bounds.max_f);
            for f in 1..=bounds.max_f {
                let got = g.omega_size(f);
                let want = double_factorial(2 * f as u64 - 1);
                rec.check(format!("f={f}"), got == want, format!("{got}"));
            }
        }
        Suite::Lemma2 => lemma2(&mut rec, bounds),
        Suite::Truncation => truncation(&mut rec, bounds),
    }
    rec.finish()
}

pub fn run_all(bounds_for: impl Fn(Suite) -> Bounds) -> Report {
    let mut report = Report::default();
    for suite in Suite::ALL {
        report.merge(run(suite, &bounds_for(suite)));
    }
    report
}

fn oracle(rec: &mut Recorder, bounds: &Bounds) {
    let mut engine = SkeinEngine::new();
    for m in bounds.m.clone() {
        let skein = engine.kauffman_f(&BraidWord::torus2(m));
        rec.check(format!("m={m}"), skein == torus2_invariant(m), "");
    }
}

fn symmetry(rec: &mut Recorder, bounds: &Bounds) {
    for m in bounds.m.clone() {
        rec.check(format!("flip m={m}"), symmetry_check(m), "");
    }
    for m in bounds.m.clone() {
        let f = torus2_invariant(m);
        for n in 1..=bounds.max_n.min(2) {
            let osp = f.specialize(Specialization::osp(n));
            let so = f.specialize(Specialization::so(n));
            rec.check(format!("osp=so m={m} n={n}"), osp == so, "");
        }
    }
    for m in bounds.m.clone() {
        for n in 1..=bounds.max_n.min(2) {
            rec.check(format!("trace sign m={m} n={n}"), trace_sign_check(m, n), "");
        }
    }
    let x = LocalizedPoly::x();
    for n in 1..=bounds.max_n {
        let dim = Specialized::Poly(quantum_dim(n));
        let ok = x.specialize(Specialization::osp(n)) == dim && x.specialize(Specialization::so(n)) == dim;
        rec.check(format!("loop value n={n}"), ok, "");
    }
}

fn markov(rec: &mut Recorder) {
    let mut engine = SkeinEngine::new();
    for text in MARKOV_CORPUS {
        let b: BraidWord = text.parse().expect("corpus word parses");
        let f = engine.kauffman_f(&b);
        let mut moves: Vec<(String, BraidWord)> = Vec::new();
        for i in 1..b.strands() as i64 {
            for a in [i, -i] {
                let conj = BraidWord::from_signed(b.strands(), &[a]).expect("generator");
                moves.push((format!("conj {a}"), b.conjugate(&conj)));
            }
        }
        moves.push(("stab +".into(), b.stabilize(true)));
        moves.push(("stab -".into(), b.stabilize(false)));
        for (name, moved) in moves {
            rec.check(format!("{text} {name}"), engine.kauffman_f(&moved) == f, "");
        }
    }
    for text in BRAID_RELATION_CORPUS {
        let b: BraidWord = text.parse().expect("corpus word parses");
        let f = engine.kauffman_f(&b);
        let rewrites = b.braid_relation_rewrites();
        let ok = !rewrites.is_empty() && rewrites.iter().all(|w| engine.kauffman_f(w) == f);
        rec.check(format!("{text} braid relation"), ok, format!("{} rewrites", rewrites.len()));
    }
}

fn lemma2(rec: &mut Recorder, bounds: &Bounds) {
    for size in 0..=bounds.max_size {
        for shape in partitions(size) {
            let ok = (1..=bounds.max_n).all(|n| lemma2_check(&shape, n));
            rec.check(format!("{shape}"), ok, "");
        }
    }
    for size in 0..=bounds.max_size.max(8) {
        for shape in partitions(size) {
            let (l, r) = off_diagonal_signs(&shape);
            let strips = (1..=size).all(|k| {
                let (a, b) = strip_signs(&shape, k);
                a == b
            });
            rec.check(format!("signs {shape}"), l == r && strips, "");
        }
    }
}

fn truncation(rec: &mut Recorder, bounds: &Bounds) {
    for size in 0..=bounds.max_size {
        for shape in partitions(size) {
            let ok = (1..=bounds.max_n).all(|n| {
                let rule = truncation_rule(&shape, n);
                is_truncation_vertex(&shape, Specialization::osp(n)) == rule
                    && is_truncation_vertex(&shape, Specialization::so(n)) == rule
            });
            rec.check(format!("{shape}"), ok, "");
        }
    }
    for n in 1..=bounds.max_n {
        let osp = BratteliGraph::truncated(Specialization::osp(n), bounds.max_depth);
        let so = BratteliGraph::truncated(Specialization::so(n), bounds.max_depth);
        rec.check(format!("graphs n={n}"), osp.levels() == so.levels() && osp.to_dot() == so.to_dot(), "");
    }
}
