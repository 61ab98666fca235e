//! Regular-isotopy invariant of closed diagrams by descending-diagram
//! recursion, and the normalized two-variable invariant of braid closures.

use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::diagram::{CrossingId, DiagramKey, Pairing, PlanarDiagram};
use crate::laurent::{LaurentPoly2, LocalizedPoly, Specialization, Specialize, Specialized};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SkeinStats {
    pub evaluations: u64,
    pub memo_hits: u64,
}

/// Evaluates `L(D)` with an optional memo table keyed by canonical form.
#[derive(Debug, Default)]
pub struct SkeinEngine {
    memo: Option<HashMap<DiagramKey, LocalizedPoly>>,
    stats: SkeinStats,
}

impl SkeinEngine {
    pub fn new() -> Self {
        SkeinEngine { memo: Some(HashMap::new()), stats: SkeinStats::default() }
    }

    pub fn without_memo() -> Self {
        SkeinEngine { memo: None, stats: SkeinStats::default() }
    }

    pub fn stats(&self) -> SkeinStats {
        self.stats
    }

    pub fn memo_len(&self) -> usize {
        self.memo.as_ref().map_or(0, HashMap::len)
    }

    pub fn lambda(&mut self, d: &PlanarDiagram) -> LocalizedPoly {
        let (d, curls) = d.remove_curls();
        let parts = d.split();
        let mut value = LocalizedPoly::x().pow((parts.len() + d.free_loops()) as u32 - 1);
        for part in &parts {
            value = &value * &self.connected(part);
        }
        value.mul_poly(&LaurentPoly2::rs(curls, 0))
    }

    fn connected(&mut self, d: &PlanarDiagram) -> LocalizedPoly {
        let key = match &self.memo {
            Some(memo) => {
                let key = d.connected_key();
                if let Some(v) = memo.get(&key) {
                    self.stats.memo_hits += 1;
                    return v.clone();
                }
                Some(key)
            }
            None => None,
        };
        let value = self.descend(d);
        if let (Some(memo), Some(key)) = (self.memo.as_mut(), key) {
            memo.insert(key, value.clone());
        }
        value
    }

    /// Switches every crossing that the traversal meets first from below,
    /// paying `z (L(D_A) - L(D_B))` for each, until the diagram is
    /// descending.
    fn descend(&mut self, d: &PlanarDiagram) -> LocalizedPoly {
        self.stats.evaluations += 1;
        let report = d.descending_report();
        let z = LocalizedPoly::from(LaurentPoly2::z());
        let mut cur = d.clone();
        let mut acc = LocalizedPoly::zero();
        for &c in &report.non_descending {
            let a = Pairing::skein_a(cur.over_even(c));
            let diff = &self.lambda(&cur.smooth(c, a)) - &self.lambda(&cur.smooth(c, a.other()));
            acc = &acc + &(&z * &diff);
            cur.switch(c);
        }
        let base = LocalizedPoly::x()
            .pow(report.components as u32 - 1)
            .mul_poly(&LaurentPoly2::rs(cur.writhe(), 0));
        &acc + &base
    }

    /// `F = r^{-e(b)} L(closure(b))`; the unknot evaluates to 1.
    pub fn kauffman_f(&mut self, b: &BraidWord) -> LocalizedPoly {
        let e = b.exponent_sum() as i32;
        self.lambda(&b.closure_diagram()).mul_poly(&LaurentPoly2::rs(-e, 0))
    }

    pub fn phi(&mut self, b: &BraidWord, spec: Specialization) -> Specialized {
        self.kauffman_f(b).specialize(spec)
    }

    pub fn phi_osp(&mut self, b: &BraidWord, n: u32) -> Specialized {
        self.phi(b, Specialization::osp(n))
    }

    pub fn phi_so(&mut self, b: &BraidWord, n: u32) -> Specialized {
        self.phi(b, Specialization::so(n))
    }
}

/// One-shot evaluation with a fresh memo table.
pub fn lambda(d: &PlanarDiagram) -> LocalizedPoly {
    SkeinEngine::new().lambda(d)
}

pub fn kauffman_f(b: &BraidWord) -> LocalizedPoly {
    SkeinEngine::new().kauffman_f(b)
}

/// `z (L(D_A) - L(D_B))` at crossing `c`, for checking the skein identity.
pub fn skein_rhs(engine: &mut SkeinEngine, d: &PlanarDiagram, c: CrossingId) -> LocalizedPoly {
    let a = Pairing::skein_a(d.over_even(c));
    let diff = &engine.lambda(&d.smooth(c, a)) - &engine.lambda(&d.smooth(c, a.other()));
    &LocalizedPoly::from(LaurentPoly2::z()) * &diff
}
