use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::mono::{Monomial, QMono, RsMono};

/// Sparse Laurent polynomial with exact integer coefficients.
///
/// Terms are kept sorted by monomial and no stored coefficient is zero, so
/// structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<M: Monomial> {
    terms: Vec<(M, BigInt)>,
}

/// Integer Laurent polynomial in `r` and `s`.
pub type LaurentPoly2 = Laurent<RsMono>;
/// Integer Laurent polynomial in `q`.
pub type LaurentPoly1 = Laurent<QMono>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("divisor does not divide exactly")]
pub struct NotDivisible;

impl<M: Monomial> Laurent<M> {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(M::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(M::one(), c)
    }

    pub fn monomial(m: M, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent { terms: vec![(m, c)] }
        }
    }

    /// Collects arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (M, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<M, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c.into();
        }
        Self::from_map(acc)
    }

    fn from_map(map: BTreeMap<M, BigInt>) -> Self {
        Laurent {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(M, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == M::one() && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, m: M) -> BigInt {
        self.terms
            .binary_search_by(|(t, _)| t.cmp(&m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: M) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies `c * m  ->  f(m) * c` termwise, then recollects.
    pub fn map_terms(&self, f: impl Fn(M, &BigInt) -> (M, BigInt)) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| f(*m, c)))
    }

    /// Componentwise minimal exponent over the support.
    fn lowest(&self) -> Option<M> {
        self.terms.iter().map(|(m, _)| *m).reduce(M::meet)
    }

    /// Gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .iter()
            .fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Exact division in the Laurent ring.
    ///
    /// Both operands are shifted by monomial units to honest polynomials
    /// with no monomial factor, then divided with the lexicographic leading
    /// term; that reduction is a well-order so the loop terminates.
    pub fn divide_exact(&self, d: &Self) -> Result<Self, NotDivisible> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let Some(lo_p) = self.lowest() else {
            return Ok(Self::zero());
        };
        let lo_d = d.lowest().expect("nonzero divisor");
        let divisor: Vec<(M, BigInt)> =
            d.terms.iter().map(|(m, c)| (m.div(lo_d), c.clone())).collect();
        let (lead_m, lead_c) = divisor.last().cloned().expect("nonzero divisor");

        let mut rem: BTreeMap<M, BigInt> =
            self.terms.iter().map(|(m, c)| (m.div(lo_p), c.clone())).collect();
        let mut quot: Vec<(M, BigInt)> = Vec::new();
        while let Some((&m, c)) = rem.iter().next_back() {
            if !lead_m.divides(m) {
                return Err(NotDivisible);
            }
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(NotDivisible);
            }
            let qm = m.div(lead_m);
            for (dm, dc) in &divisor {
                let key = qm.mul(*dm);
                let entry = rem.entry(key).or_default();
                *entry -= &qc * dc;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        let shift = lo_p.div(lo_d);
        Ok(Self::from_terms(quot.into_iter().map(|(m, c)| (m.mul(shift), c))))
    }

    /// `[[e1, .., coeff], ..]` in canonical term order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let mut row: Vec<Value> = m.exponents().into_iter().map(Value::from).collect();
                    row.push(bigint_json(c));
                    Value::Array(row)
                })
                .collect(),
        )
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(c.to_string()),
    }
}

impl LaurentPoly2 {
    pub fn r() -> Self {
        Self::monomial(RsMono::new(1, 0), 1)
    }

    pub fn s() -> Self {
        Self::monomial(RsMono::new(0, 1), 1)
    }

    /// `r^a s^b`.
    pub fn rs(a: i32, b: i32) -> Self {
        Self::monomial(RsMono::new(a, b), 1)
    }

    /// `s - s^-1`.
    pub fn z() -> Self {
        Self::from_terms([(RsMono::new(0, -1), -1), (RsMono::new(0, 1), 1)])
    }

    /// `p(-r, -s)`.
    pub fn flip_vars(&self) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.total_degree() % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }
}

impl LaurentPoly1 {
    pub fn q() -> Self {
        Self::monomial(QMono(1), 1)
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(QMono(e), 1)
    }

    /// `p(-q)`.
    pub fn negate_var(&self) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.0 % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }
}

impl<M: Monomial> fmt::Display for Laurent<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if *m == M::one() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                m.write_vars(&mut out)?;
            }
        }
        f.write_str(&out)
    }
}

impl<M: Monomial> fmt::Debug for Laurent<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn merge<M: Monomial>(a: &[(M, BigInt)], b: &[(M, BigInt)], negate_b: bool) -> Vec<(M, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let sign = |c: &BigInt| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, sign(&b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (*m, sign(c))));
    out
}

impl<M: Monomial> Add for &Laurent<M> {
    type Output = Laurent<M>;
    fn add(self, rhs: Self) -> Laurent<M> {
        Laurent { terms: merge(&self.terms, &rhs.terms, false) }
    }
}

impl<M: Monomial> Sub for &Laurent<M> {
    type Output = Laurent<M>;
    fn sub(self, rhs: Self) -> Laurent<M> {
        Laurent { terms: merge(&self.terms, &rhs.terms, true) }
    }
}

impl<M: Monomial> Mul for &Laurent<M> {
    type Output = Laurent<M>;
    fn mul(self, rhs: Self) -> Laurent<M> {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut acc: BTreeMap<M, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(*mb)).or_default() += ca * cb;
            }
        }
        Laurent::from_map(acc)
    }
}

impl<M: Monomial> Neg for &Laurent<M> {
    type Output = Laurent<M>;
    fn neg(self) -> Laurent<M> {
        Laurent { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl<M: Monomial> Neg for Laurent<M> {
    type Output = Laurent<M>;
    fn neg(self) -> Laurent<M> {
        -&self
    }
}

macro_rules! forward_owned {
    ($ty:ident, $($tr:ident :: $f:ident),*) => {$(
        impl<M: Monomial> $tr<$ty<M>> for $ty<M> {
            type Output = $ty<M>;
            fn $f(self, rhs: $ty<M>) -> $ty<M> { (&self).$f(&rhs) }
        }
        impl<M: Monomial> $tr<&$ty<M>> for $ty<M> {
            type Output = $ty<M>;
            fn $f(self, rhs: &$ty<M>) -> $ty<M> { (&self).$f(rhs) }
        }
        impl<M: Monomial> $tr<$ty<M>> for &$ty<M> {
            type Output = $ty<M>;
            fn $f(self, rhs: $ty<M>) -> $ty<M> { self.$f(&rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(Laurent, Add::add, Sub::sub, Mul::mul);

impl<M: Monomial> AddAssign<&Laurent<M>> for Laurent<M> {
    fn add_assign(&mut self, rhs: &Laurent<M>) {
        self.terms = merge(&self.terms, &rhs.terms, false);
    }
}

impl<M: Monomial> SubAssign<&Laurent<M>> for Laurent<M> {
    fn sub_assign(&mut self, rhs: &Laurent<M>) {
        self.terms = merge(&self.terms, &rhs.terms, true);
    }
}

impl<M: Monomial> std::iter::Sum for Laurent<M> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<M: Monomial> Default for Laurent<M> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: Monomial> From<i64> for Laurent<M> {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i32, i64)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(terms.iter().map(|&(a, b, c)| (RsMono::new(a, b), c)))
    }

    #[test]
    fn cancellation() {
        let sum = (LaurentPoly2::r() + LaurentPoly2::s()) + (-LaurentPoly2::s());
        assert_eq!(sum, LaurentPoly2::r());
    }

    #[test]
    fn difference_of_squares() {
        let z = LaurentPoly2::z();
        let w = p(&[(0, 1, 1), (0, -1, 1)]);
        assert_eq!(&z * &w, p(&[(0, 2, 1), (0, -2, -1)]));
    }

    #[test]
    fn divide_exact_examples() {
        let z = LaurentPoly2::z();
        assert_eq!(
            p(&[(0, 2, 1), (0, -2, -1)]).divide_exact(&z),
            Ok(p(&[(0, 1, 1), (0, -1, 1)]))
        );
        assert_eq!(p(&[(1, 1, 1), (1, -1, -1)]).divide_exact(&z), Ok(LaurentPoly2::r()));
        assert_eq!(p(&[(1, 0, 1), (0, 1, 1)]).divide_exact(&z), Err(NotDivisible));
        assert_eq!(LaurentPoly2::zero().divide_exact(&z), Ok(LaurentPoly2::zero()));
    }

    #[test]
    fn divide_exact_integer_content() {
        let two = LaurentPoly2::constant(2);
        assert_eq!(LaurentPoly2::constant(3).divide_exact(&two), Err(NotDivisible));
        assert_eq!(p(&[(1, 0, 4)]).divide_exact(&two), Ok(p(&[(1, 0, 2)])));
    }

    #[test]
    fn flip_vars_examples() {
        assert_eq!(LaurentPoly2::rs(1, 1).flip_vars(), LaurentPoly2::rs(1, 1));
        assert_eq!(LaurentPoly2::rs(1, 2).flip_vars(), -LaurentPoly2::rs(1, 2));
    }

    #[test]
    fn display_and_json_use_ascending_order() {
        let x = p(&[(2, -1, -3), (0, 0, 1)]);
        assert_eq!(x.to_string(), "1 - 3*r^2*s^-1");
        assert_eq!(x.to_json().to_string(), "[[0,0,1],[2,-1,-3]]");
        assert_eq!((-LaurentPoly2::z()).to_string(), "s^-1 - s");
        assert_eq!(LaurentPoly2::zero().to_string(), "0");
        assert_eq!(LaurentPoly1::q_pow(-2).to_string(), "q^-2");
        assert_eq!(LaurentPoly2::rs(-1, 3).to_string(), "r^-1*s^3");
    }

    #[test]
    fn big_coefficients_serialize_as_strings() {
        let big = LaurentPoly1::constant(2).pow(70);
        assert_eq!(big.to_json().to_string(), format!("[[0,\"{}\"]]", BigInt::from(2).pow(70)));
    }
}
