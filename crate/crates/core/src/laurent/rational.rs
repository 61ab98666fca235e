use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;

use super::mono::{Monomial, QMono, RsMono};
use super::poly::Laurent;

/// Unreduced quotient `num / den` of Laurent polynomials.
///
/// No gcd is ever taken. Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct Rational<M: Monomial> {
    num: Laurent<M>,
    den: Laurent<M>,
}

/// Rational function in `r`, `s` with integer coefficients.
pub type RationalFn2 = Rational<RsMono>;
/// Rational function in `q` with integer coefficients.
pub type RationalFn1 = Rational<QMono>;

impl<M: Monomial> Rational<M> {
    pub fn new(num: Laurent<M>, den: Laurent<M>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational { num, den }
    }

    pub fn zero() -> Self {
        Laurent::zero().into()
    }

    pub fn one() -> Self {
        Laurent::one().into()
    }

    pub fn numerator(&self) -> &Laurent<M> {
        &self.num
    }

    pub fn denominator(&self) -> &Laurent<M> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Self {
        Rational::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        Rational { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// The quotient as a Laurent polynomial if `den` divides `num` exactly.
    pub fn to_poly(&self) -> Option<Laurent<M>> {
        self.num.divide_exact(&self.den).ok()
    }

    /// Divides out the common integer content and shifts the denominator so
    /// that its lowest exponents are zero. Value-preserving.
    pub fn reduce_content(&self) -> Self {
        let g = self.num.content().gcd(&self.den.content());
        let (mut num, mut den) = if g > 1.into() {
            (
                self.num.divide_exact(&Laurent::constant(g.clone())).expect("content divides"),
                self.den.divide_exact(&Laurent::constant(g)).expect("content divides"),
            )
        } else {
            (self.num.clone(), self.den.clone())
        };
        if let Some(lo) = den.terms().iter().map(|(m, _)| *m).reduce(M::meet) {
            let unit = M::one().div(lo);
            num = num.mul_monomial(unit);
            den = den.mul_monomial(unit);
        }
        Rational { num, den }
    }

    pub fn map_parts<N: Monomial>(&self, f: impl Fn(&Laurent<M>) -> Laurent<N>) -> Rational<N> {
        Rational::new(f(&self.num), f(&self.den))
    }
}

impl RationalFn2 {
    pub fn flip_vars(&self) -> Self {
        Rational { num: self.num.flip_vars(), den: self.den.flip_vars() }
    }
}

impl<M: Monomial> From<Laurent<M>> for Rational<M> {
    fn from(num: Laurent<M>) -> Self {
        Rational { num, den: Laurent::one() }
    }
}

impl<M: Monomial> PartialEq for Rational<M> {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<M: Monomial> Eq for Rational<M> {}

impl<M: Monomial> PartialEq<Laurent<M>> for Rational<M> {
    fn eq(&self, other: &Laurent<M>) -> bool {
        self.num == other * &self.den
    }
}

impl<M: Monomial> fmt::Display for Rational<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<M: Monomial> fmt::Debug for Rational<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<M: Monomial> Add for &Rational<M> {
    type Output = Rational<M>;
    fn add(self, rhs: Self) -> Rational<M> {
        if self.den == rhs.den {
            return Rational { num: &self.num + &rhs.num, den: self.den.clone() };
        }
        Rational {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl<M: Monomial> Sub for &Rational<M> {
    type Output = Rational<M>;
    fn sub(self, rhs: Self) -> Rational<M> {
        self + &(-rhs)
    }
}

impl<M: Monomial> Mul for &Rational<M> {
    type Output = Rational<M>;
    fn mul(self, rhs: Self) -> Rational<M> {
        Rational { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }
}

impl<M: Monomial> Div for &Rational<M> {
    type Output = Rational<M>;
    fn div(self, rhs: Self) -> Rational<M> {
        self * &rhs.recip()
    }
}

impl<M: Monomial> Neg for &Rational<M> {
    type Output = Rational<M>;
    fn neg(self) -> Rational<M> {
        Rational { num: -&self.num, den: self.den.clone() }
    }
}

super::poly::forward_owned!(Rational, Add::add, Sub::sub, Mul::mul, Div::div);

impl<M: Monomial> std::iter::Sum for Rational<M> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}
