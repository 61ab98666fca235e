use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::LaurentPoly2;
use super::rational::RationalFn2;

/// `num / (s - s^-1)^k`, kept with the smallest possible `k`.
///
/// Because the representation is canonical, derived equality is exact
/// equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LocalizedPoly {
    num: LaurentPoly2,
    k: u32,
}

impl LocalizedPoly {
    pub fn new(num: LaurentPoly2, k: u32) -> Self {
        let mut v = LocalizedPoly { num, k };
        v.normalize();
        v
    }

    pub fn zero() -> Self {
        LocalizedPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly2::one().into()
    }

    /// The loop value `(r - r^-1)/(s - s^-1) + 1`.
    pub fn x() -> Self {
        let num = &(&LaurentPoly2::r() - &LaurentPoly2::rs(-1, 0)) + &LaurentPoly2::z();
        LocalizedPoly::new(num, 1)
    }

    pub fn numerator(&self) -> &LaurentPoly2 {
        &self.num
    }

    /// Power of `(s - s^-1)` in the denominator.
    pub fn denominator_power(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial, when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&LaurentPoly2> {
        (self.k == 0).then_some(&self.num)
    }

    pub fn pow(&self, e: u32) -> Self {
        LocalizedPoly::new(self.num.pow(e), self.k * e)
    }

    pub fn mul_poly(&self, p: &LaurentPoly2) -> Self {
        LocalizedPoly::new(&self.num * p, self.k)
    }

    /// `p(-r, -s)`; the denominator `(s - s^-1)^k` picks up `(-1)^k`.
    pub fn flip_vars(&self) -> Self {
        let num = self.num.flip_vars();
        LocalizedPoly {
            num: if self.k % 2 == 0 { num } else { -num },
            k: self.k,
        }
    }

    /// Numerator over the common denominator `(s - s^-1)^k` with `k >= self.k`.
    pub fn numerator_over(&self, k: u32) -> LaurentPoly2 {
        assert!(k >= self.k);
        &self.num * &LaurentPoly2::z().pow(k - self.k)
    }

    /// `{"numerator": [[r, s, c], ..], "z_power": k}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "numerator": self.num.to_json(), "z_power": self.k })
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.k = 0;
            return;
        }
        let z = LaurentPoly2::z();
        while self.k > 0 {
            match self.num.divide_exact(&z) {
                Ok(q) => {
                    self.num = q;
                    self.k -= 1;
                }
                Err(_) => break,
            }
        }
    }
}

impl From<LaurentPoly2> for LocalizedPoly {
    fn from(num: LaurentPoly2) -> Self {
        LocalizedPoly { num, k: 0 }
    }
}

impl From<&LocalizedPoly> for RationalFn2 {
    fn from(v: &LocalizedPoly) -> Self {
        RationalFn2::new(v.num.clone(), LaurentPoly2::z().pow(v.k))
    }
}

impl fmt::Display for LocalizedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            0 => write!(f, "{}", self.num),
            1 => write!(f, "({})/(s - s^-1)", self.num),
            k => write!(f, "({})/(s - s^-1)^{k}", self.num),
        }
    }
}

impl fmt::Debug for LocalizedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LocalizedPoly {
    type Output = LocalizedPoly;
    fn add(self, rhs: Self) -> LocalizedPoly {
        let k = self.k.max(rhs.k);
        LocalizedPoly::new(&self.numerator_over(k) + &rhs.numerator_over(k), k)
    }
}

impl Sub for &LocalizedPoly {
    type Output = LocalizedPoly;
    fn sub(self, rhs: Self) -> LocalizedPoly {
        let k = self.k.max(rhs.k);
        LocalizedPoly::new(&self.numerator_over(k) - &rhs.numerator_over(k), k)
    }
}

impl Mul for &LocalizedPoly {
    type Output = LocalizedPoly;
    fn mul(self, rhs: Self) -> LocalizedPoly {
        LocalizedPoly::new(&self.num * &rhs.num, self.k + rhs.k)
    }
}

impl Neg for &LocalizedPoly {
    type Output = LocalizedPoly;
    fn neg(self) -> LocalizedPoly {
        LocalizedPoly { num: -&self.num, k: self.k }
    }
}

impl Neg for LocalizedPoly {
    type Output = LocalizedPoly;
    fn neg(self) -> LocalizedPoly {
        -&self
    }
}

macro_rules! forward_localized {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr<LocalizedPoly> for LocalizedPoly {
            type Output = LocalizedPoly;
            fn $f(self, rhs: LocalizedPoly) -> LocalizedPoly { (&self).$f(&rhs) }
        }
        impl $tr<&LocalizedPoly> for LocalizedPoly {
            type Output = LocalizedPoly;
            fn $f(self, rhs: &LocalizedPoly) -> LocalizedPoly { (&self).$f(rhs) }
        }
        impl $tr<LocalizedPoly> for &LocalizedPoly {
            type Output = LocalizedPoly;
            fn $f(self, rhs: LocalizedPoly) -> LocalizedPoly { self.$f(&rhs) }
        }
    )*};
}

forward_localized!(Add::add, Sub::sub, Mul::mul);

impl std::iter::Sum for LocalizedPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}
