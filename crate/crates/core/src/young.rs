//! Young diagrams, level sets of the Young lattice and of the BMW Bratteli
//! diagram, hook statistics and the trace weight `Q_lambda(r, s)`.

use std::fmt;
use std::str::FromStr;

use crate::laurent::{LaurentPoly2, RationalFn2, RsMono};

/// A partition, stored as weakly decreasing positive row lengths.
///
/// Ordered lexicographically by rows, so `[] < [1] < [1,1] < [2]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum YoungError {
    #[error("rows must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("box ({0}, {1}) is not in the diagram")]
    BoxOutside(usize, usize),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

impl YoungDiagram {
    pub fn empty() -> Self {
        YoungDiagram::default()
    }

    /// Zero rows are dropped; rows must otherwise be weakly decreasing.
    pub fn new(rows: impl Into<Vec<usize>>) -> Result<Self, YoungError> {
        let mut rows = rows.into();
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(YoungError::NotDecreasing(rows));
        }
        rows.retain(|&r| r > 0);
        Ok(YoungDiagram { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `lambda_i`, 1-indexed, zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        i.checked_sub(1).and_then(|i| self.rows.get(i)).copied().unwrap_or(0)
    }

    /// `lambda'_j`, 1-indexed.
    pub fn col(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.rows.iter().take_while(|&&r| r >= j).count()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.row(1);
        YoungDiagram { rows: (1..=width).map(|j| self.col(j)).collect() }
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.row(i) >= j
    }

    /// Boxes `(i, j)` in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Diagrams with one more box, sorted.
    pub fn add_one(&self) -> Vec<YoungDiagram> {
        let mut out: Vec<_> = (0..=self.rows.len())
            .filter(|&i| i == 0 || self.rows[i - 1] > self.row(i + 1))
            .map(|i| {
                let mut rows = self.rows.clone();
                match rows.get_mut(i) {
                    Some(r) => *r += 1,
                    None => rows.push(1),
                }
                YoungDiagram { rows }
            })
            .collect();
        out.sort();
        out
    }

    /// Diagrams with one box fewer, sorted.
    pub fn remove_one(&self) -> Vec<YoungDiagram> {
        let mut out: Vec<_> = (0..self.rows.len())
            .filter(|&i| self.rows[i] > self.row(i + 2))
            .map(|i| {
                let mut rows = self.rows.clone();
                rows[i] -= 1;
                rows.retain(|&r| r > 0);
                YoungDiagram { rows }
            })
            .collect();
        out.sort();
        out
    }

    /// Whether the two diagrams differ by exactly one box.
    pub fn adjacent(&self, other: &YoungDiagram) -> bool {
        let (small, big) = if self.size() < other.size() { (self, other) } else { (other, self) };
        big.size() == small.size() + 1 && (1..=small.rows.len().max(big.rows.len())).all(|i| big.row(i) >= small.row(i))
    }

    fn check_box(&self, i: usize, j: usize) -> Result<(), YoungError> {
        if self.contains(i, j) {
            Ok(())
        } else {
            Err(YoungError::BoxOutside(i, j))
        }
    }

    /// `h(i,j) = lambda_i - i + lambda'_j - j + 1`.
    pub fn hook(&self, i: usize, j: usize) -> Result<i64, YoungError> {
        self.check_box(i, j)?;
        Ok(self.row(i) as i64 - i as i64 + self.col(j) as i64 - j as i64 + 1)
    }

    pub fn d_stat(&self, i: usize, j: usize) -> Result<i64, YoungError> {
        self.check_box(i, j)?;
        let (i_, j_) = (i as i64, j as i64);
        Ok(if i <= j {
            self.row(i) as i64 + self.row(j) as i64 - i_ - j_ + 1
        } else {
            -(self.col(i) as i64) - self.col(j) as i64 + i_ + j_ - 1
        })
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = YoungError;

    /// Accepts `[2,1]`, `2,1`, `[]` and `∅`.
    fn from_str(text: &str) -> Result<Self, YoungError> {
        let t = text.trim();
        if t == "∅" {
            return Ok(YoungDiagram::empty());
        }
        let inner = t.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(t);
        if inner.trim().is_empty() {
            return Ok(YoungDiagram::empty());
        }
        let rows = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| YoungError::Parse(text.to_string()))?;
        if rows.contains(&0) {
            return Err(YoungError::Parse(text.to_string()));
        }
        YoungDiagram::new(rows)
    }
}

/// All partitions of `n`, sorted.
pub fn partitions(n: usize) -> Vec<YoungDiagram> {
    fn go(left: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if left == 0 {
            out.push(YoungDiagram { rows: prefix.clone() });
            return;
        }
        for part in (1..=left.min(max)).rev() {
            prefix.push(part);
            go(left - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn young_level(f: usize) -> Vec<YoungDiagram> {
    partitions(f)
}

/// Partitions of `f, f-2, f-4, ...`, sorted.
pub fn bmw_level(f: usize) -> Vec<YoungDiagram> {
    let mut out: Vec<_> = (0..=f / 2).flat_map(|k| partitions(f - 2 * k)).collect();
    out.sort();
    out
}

fn s_diff(h: i64) -> LaurentPoly2 {
    let h = h as i32;
    &LaurentPoly2::rs(0, h) - &LaurentPoly2::rs(0, -h)
}

/// The trace weight of a diagonal matrix unit of shape `lambda`, as an
/// unreduced product of its per-box factors.
pub fn q_lambda(lambda: &YoungDiagram) -> RationalFn2 {
    let mut num = LaurentPoly2::one();
    let mut den = LaurentPoly2::one();
    let mono = |a: i32, b: i64| LaurentPoly2::monomial(RsMono::new(a, b as i32), 1);
    for (i, j) in lambda.boxes() {
        let h = lambda.hook(i, j).expect("box of lambda");
        let factor = if i == j {
            let (row, col, j) = (lambda.row(j) as i64, lambda.col(j) as i64, j as i64);
            &(&mono(1, row - col) - &mono(-1, col - row))
                + &(&mono(0, row + col - 2 * j + 1) - &mono(0, -row - col + 2 * j - 1))
        } else {
            let d = lambda.d_stat(i, j).expect("box of lambda");
            &mono(1, d) - &mono(-1, -d)
        };
        num = &num * &factor;
        den = &den * &s_diff(h);
    }
    RationalFn2::new(num, den)
}

/// Brute-force evaluation of the box-sign identity behind the equality of
/// the two specializations of `Q_lambda`: returns `(lhs, rhs)` as `+-1`.
///
/// The left side is `(-1)` to the number of off-diagonal boxes. The right
/// side is the product of `(-1)^(lambda'_j + lambda_j)` over boxes above
/// the diagonal and `(-1)^(lambda_i + lambda'_i)` over boxes below.
pub fn off_diagonal_signs(lambda: &YoungDiagram) -> (i8, i8) {
    let mut lhs = 1i8;
    let mut rhs = 1i8;
    for (i, j) in lambda.boxes() {
        if i == j {
            continue;
        }
        lhs = -lhs;
        let k = if i < j { j } else { i };
        if (lambda.row(k) + lambda.col(k)) % 2 == 1 {
            rhs = -rhs;
        }
    }
    (lhs, rhs)
}

/// The same identity restricted to the strips through index `k`: the
/// boxes of row `k` left of the diagonal and of column `k` above it.
/// Returns `(lhs, rhs)` as `+-1`.
pub fn strip_signs(lambda: &YoungDiagram, k: usize) -> (i8, i8) {
    let strip = lambda
        .boxes()
        .filter(|&(i, j)| (i == k && j < k) || (j == k && i < k))
        .count();
    let sign = |e: usize| if e % 2 == 0 { 1 } else { -1 };
    let weight = lambda.row(k) + lambda.col(k);
    let rhs = (0..strip).fold(1, |acc, _| acc * sign(weight));
    (sign(strip), rhs)
}
