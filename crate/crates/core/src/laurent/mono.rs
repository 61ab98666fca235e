use std::fmt::{self, Write};
use std::hash::Hash;

/// Exponent vector of a Laurent monomial.
///
/// `Ord` is the canonical term order (lexicographic, ascending) used for
/// storage, display and serialization.
pub trait Monomial: Copy + Ord + Hash + fmt::Debug {
    fn one() -> Self;
    fn mul(self, other: Self) -> Self;
    fn div(self, other: Self) -> Self;
    /// Componentwise minimum.
    fn meet(self, other: Self) -> Self;
    /// True iff every exponent of `self` is at most the matching one of `other`.
    fn divides(self, other: Self) -> bool;
    /// Sum of all exponents.
    fn total_degree(self) -> i64;
    fn exponents(self) -> Vec<i32>;
    /// Writes the monomial without coefficient; never called on `one()`.
    fn write_vars(self, out: &mut String) -> fmt::Result;
}

/// `r^r * s^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RsMono {
    pub r: i32,
    pub s: i32,
}

impl RsMono {
    pub const fn new(r: i32, s: i32) -> Self {
        RsMono { r, s }
    }
}

fn write_var(out: &mut String, name: char, e: i32, first: bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !first {
        out.push('*');
    }
    out.push(name);
    if e != 1 {
        write!(out, "^{e}")?;
    }
    Ok(())
}

impl Monomial for RsMono {
    fn one() -> Self {
        RsMono::new(0, 0)
    }
    fn mul(self, o: Self) -> Self {
        RsMono::new(self.r + o.r, self.s + o.s)
    }
    fn div(self, o: Self) -> Self {
        RsMono::new(self.r - o.r, self.s - o.s)
    }
    fn meet(self, o: Self) -> Self {
        RsMono::new(self.r.min(o.r), self.s.min(o.s))
    }
    fn divides(self, o: Self) -> bool {
        self.r <= o.r && self.s <= o.s
    }
    fn total_degree(self) -> i64 {
        self.r as i64 + self.s as i64
    }
    fn exponents(self) -> Vec<i32> {
        vec![self.r, self.s]
    }
    fn write_vars(self, out: &mut String) -> fmt::Result {
        write_var(out, 'r', self.r, true)?;
        write_var(out, 's', self.s, self.r == 0)
    }
}

/// `q^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QMono(pub i32);

impl Monomial for QMono {
    fn one() -> Self {
        QMono(0)
    }
    fn mul(self, o: Self) -> Self {
        QMono(self.0 + o.0)
    }
    fn div(self, o: Self) -> Self {
        QMono(self.0 - o.0)
    }
    fn meet(self, o: Self) -> Self {
        QMono(self.0.min(o.0))
    }
    fn divides(self, o: Self) -> bool {
        self.0 <= o.0
    }
    fn total_degree(self) -> i64 {
        self.0 as i64
    }
    fn exponents(self) -> Vec<i32> {
        vec![self.0]
    }
    fn write_vars(self, out: &mut String) -> fmt::Result {
        write_var(out, 'q', self.0, true)
    }
}
