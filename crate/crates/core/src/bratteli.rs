//! BMW Bratteli diagrams, their truncations at the `OSP(n)` / `SO(n)`
//! specializations, path statistics and trace-weight checks.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;

use serde_json::{json, Value};

use crate::laurent::{LocalizedPoly, RationalFn2, Specialization, Specialize};
use crate::young::{bmw_level, q_lambda, YoungDiagram};

/// Deepest level for which individual paths are listed.
pub const PATH_ENUMERATION_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Generic,
    Truncated(Specialization),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BratteliError {
    #[error("{shape} is not a vertex at level {level}")]
    NotAtLevel { shape: YoungDiagram, level: usize },
    #[error("path enumeration is capped at depth {cap}, asked for {depth}")]
    PathCap { depth: usize, cap: usize },
}

/// Leveled vertex sets with path counts `b(lambda)` from the root.
///
/// Vertices at each level are sorted; edges join shapes one box apart on
/// consecutive levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliGraph {
    variant: Variant,
    levels: Vec<Vec<YoungDiagram>>,
    path_counts: Vec<Vec<u64>>,
}

impl BratteliGraph {
    pub fn generic(depth: usize) -> Self {
        Self::build(Variant::Generic, depth, |_| true)
    }

    pub fn truncated(spec: Specialization, depth: usize) -> Self {
        let mut t = Truncation::new(spec);
        Self::build(Variant::Truncated(spec), depth, |l| t.contains(l))
    }

    pub fn new(variant: Variant, depth: usize) -> Self {
        match variant {
            Variant::Generic => Self::generic(depth),
            Variant::Truncated(spec) => Self::truncated(spec, depth),
        }
    }

    fn build(variant: Variant, depth: usize, mut keep: impl FnMut(&YoungDiagram) -> bool) -> Self {
        let levels: Vec<Vec<YoungDiagram>> = (0..=depth)
            .map(|k| bmw_level(k).into_iter().filter(|l| keep(l)).collect())
            .collect();
        let mut path_counts: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=depth {
            let below: HashMap<&YoungDiagram, u64> =
                levels[k - 1].iter().zip(&path_counts[k - 1]).map(|(l, &b)| (l, b)).collect();
            let counts = levels[k]
                .iter()
                .map(|mu| {
                    mu.add_one()
                        .iter()
                        .chain(&mu.remove_one())
                        .filter_map(|l| below.get(l))
                        .sum()
                })
                .collect();
            path_counts.push(counts);
        }
        BratteliGraph { variant, levels, path_counts }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, k: usize) -> &[YoungDiagram] {
        &self.levels[k]
    }

    pub fn levels(&self) -> &[Vec<YoungDiagram>] {
        &self.levels
    }

    pub fn path_counts(&self, k: usize) -> &[u64] {
        &self.path_counts[k]
    }

    pub fn path_count(&self, k: usize, shape: &YoungDiagram) -> Option<u64> {
        let i = self.levels.get(k)?.binary_search(shape).ok()?;
        Some(self.path_counts[k][i])
    }

    /// Edges from level `k` to level `k + 1` as index pairs, sorted.
    pub fn edges(&self, k: usize) -> Vec<(usize, usize)> {
        let (lo, hi) = (&self.levels[k], &self.levels[k + 1]);
        let mut out = Vec::new();
        for (i, l) in lo.iter().enumerate() {
            for (j, m) in hi.iter().enumerate() {
                if l.adjacent(m) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `sum b(lambda)^2` over level `f`: the number of same-shape path pairs.
    pub fn omega_size(&self, f: usize) -> u128 {
        self.path_counts[f].iter().map(|&b| b as u128 * b as u128).sum()
    }

    /// Every path from the root to `shape` at level `k`.
    pub fn paths_to(&self, k: usize, shape: &YoungDiagram) -> Result<Vec<Vec<YoungDiagram>>, BratteliError> {
        if k > PATH_ENUMERATION_CAP {
            return Err(BratteliError::PathCap { depth: k, cap: PATH_ENUMERATION_CAP });
        }
        if self.levels.get(k).map_or(true, |l| l.binary_search(shape).is_err()) {
            return Err(BratteliError::NotAtLevel { shape: shape.clone(), level: k });
        }
        let mut out = Vec::new();
        let mut path = vec![shape.clone()];
        self.extend_down(k, &mut path, &mut out);
        Ok(out)
    }

    fn extend_down(&self, k: usize, path: &mut Vec<YoungDiagram>, out: &mut Vec<Vec<YoungDiagram>>) {
        if k == 0 {
            out.push(path.iter().rev().cloned().collect());
            return;
        }
        let top = path.last().expect("nonempty").clone();
        for l in &self.levels[k - 1] {
            if l.adjacent(&top) {
                path.push(l.clone());
                self.extend_down(k - 1, path, out);
                path.pop();
            }
        }
    }

    /// Graphviz rendering, one rank per level.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph bratteli {\n  node [shape=box];\n");
        let id = |k: usize, i: usize| format!("v{k}_{i}");
        for (k, level) in self.levels.iter().enumerate() {
            let _ = write!(out, "  {{ rank=same;");
            for (i, shape) in level.iter().enumerate() {
                let b = self.path_counts[k][i];
                if shape.is_empty() {
                    let _ = write!(out, " {} [shape=circle, label=\"\", xlabel=\"{b}\"];", id(k, i));
                } else {
                    let _ = write!(out, " {} [label=\"{shape}\", xlabel=\"{b}\"];", id(k, i));
                }
            }
            out.push_str(" }\n");
        }
        for k in 0..self.depth() {
            for (i, j) in self.edges(k) {
                let _ = writeln!(out, "  {} -- {};", id(k, i), id(k + 1, j));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let variant = match self.variant {
            Variant::Generic => Value::String("generic".into()),
            Variant::Truncated(spec) => Value::String(spec.to_string()),
        };
        let levels: Vec<Value> = self
            .levels
            .iter()
            .zip(&self.path_counts)
            .enumerate()
            .map(|(k, (level, counts))| {
                let vertices: Vec<Value> = level
                    .iter()
                    .zip(counts)
                    .map(|(shape, b)| json!({ "shape": shape.rows(), "paths": b }))
                    .collect();
                json!({ "level": k, "vertices": vertices })
            })
            .collect();
        json!({ "schema": 1, "variant": variant, "depth": self.depth(), "levels": levels })
    }

    /// Plain-text listing, one level per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, (level, counts)) in self.levels.iter().zip(&self.path_counts).enumerate() {
            let cells: Vec<String> = level
                .iter()
                .zip(counts)
                .map(|(shape, b)| if shape.is_empty() { format!("∅:{b}") } else { format!("{shape}:{b}") })
                .collect();
            let _ = writeln!(out, "level {k}: {}", cells.join(" "));
        }
        out
    }
}

/// Inductive membership in the truncated Young lattice: the root is in, and
/// a shape is in when its specialized weight is nonzero and some shape one
/// box smaller is in.
pub struct Truncation {
    spec: Specialization,
    known: BTreeMap<YoungDiagram, bool>,
}

impl Truncation {
    pub fn new(spec: Specialization) -> Self {
        Truncation { spec, known: BTreeMap::new() }
    }

    pub fn contains(&mut self, shape: &YoungDiagram) -> bool {
        if shape.is_empty() {
            return true;
        }
        if let Some(&v) = self.known.get(shape) {
            return v;
        }
        let v = weight_nonzero(shape, self.spec)
            && shape.remove_one().iter().any(|mu| self.contains(mu));
        self.known.insert(shape.clone(), v);
        v
    }
}

/// `Q_lambda` does not vanish identically after specializing.
pub fn weight_nonzero(shape: &YoungDiagram, spec: Specialization) -> bool {
    !q_lambda(shape).specialize(spec).is_zero()
}

pub fn is_truncation_vertex(shape: &YoungDiagram, spec: Specialization) -> bool {
    Truncation::new(spec).contains(shape)
}

/// `lambda'_1 + lambda'_2 <= 2n + 1`.
pub fn truncation_rule(shape: &YoungDiagram, n: u32) -> bool {
    shape.col(1) + shape.col(2) <= 2 * n as usize + 1
}

/// `tr(E_RR) = Q_lambda / x^f` for a path `R` ending at `shape` on level `f`.
pub fn matrix_unit_trace(shape: &YoungDiagram, f: usize) -> Result<RationalFn2, BratteliError> {
    if shape.size() > f || (f - shape.size()) % 2 == 1 {
        return Err(BratteliError::NotAtLevel { shape: shape.clone(), level: f });
    }
    let x = RationalFn2::from(&LocalizedPoly::x());
    Ok(&q_lambda(shape) / &x.pow(f as u32))
}

/// `sum b(lambda) Q_lambda = x^f` over level `f` of the generic diagram.
pub fn sum_rule_check(f: usize) -> bool {
    let g = BratteliGraph::generic(f);
    let total: RationalFn2 = g
        .level(f)
        .iter()
        .zip(g.path_counts(f))
        .map(|(shape, &b)| {
            let q = q_lambda(shape);
            RationalFn2::new(q.numerator().scale(&b.into()), q.denominator().clone())
        })
        .sum();
    total == RationalFn2::from(&LocalizedPoly::x()).pow(f as u32)
}

/// `Q_lambda` takes the same value at `OSP(n)` and `SO(n)`.
pub fn lemma2_check(shape: &YoungDiagram, n: u32) -> bool {
    let q = q_lambda(shape);
    q.specialize(Specialization::osp(n)) == q.specialize(Specialization::so(n))
}

pub fn double_factorial(k: u64) -> u128 {
    (1..=k).rev().step_by(2).map(u128::from).product()
}
