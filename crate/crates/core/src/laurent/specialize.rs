use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::localized::LocalizedPoly;
use super::mono::{QMono, RsMono};
use super::poly::{LaurentPoly1, LaurentPoly2};
use super::rational::{RationalFn1, RationalFn2};

/// The substitution `r -> sign_r * q^(2n)`, `s -> sign_s * q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Specialization {
    pub sign_r: i8,
    pub sign_s: i8,
    pub n: u32,
}

impl Specialization {
    /// `(r, s) = (-q^(2n), q)`: the `U_q(osp(1|2n))` vector invariant.
    pub fn osp(n: u32) -> Self {
        assert!(n >= 1, "rank must be positive");
        Specialization { sign_r: -1, sign_s: 1, n }
    }

    /// `(r, s) = (q^(2n), -q)`: the `U_{-q}(so(2n+1))` vector invariant.
    pub fn so(n: u32) -> Self {
        assert!(n >= 1, "rank must be positive");
        Specialization { sign_r: 1, sign_s: -1, n }
    }

    /// The partner specialization with both signs exchanged.
    pub fn partner(self) -> Self {
        Specialization { sign_r: self.sign_s, sign_s: self.sign_r, n: self.n }
    }

    pub fn name(&self) -> &'static str {
        match (self.sign_r, self.sign_s) {
            (-1, 1) => "osp",
            (1, -1) => "so",
            _ => "custom",
        }
    }

    fn image(&self, m: RsMono, c: &BigInt) -> (QMono, BigInt) {
        let odd = |sign: i8, e: i32| sign < 0 && e.rem_euclid(2) == 1;
        let neg = odd(self.sign_r, m.r) ^ odd(self.sign_s, m.s);
        let e = 2 * self.n as i32 * m.r + m.s;
        (QMono(e), if neg { -c } else { c.clone() })
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.name(), self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid specialization `{0}` (expected osp:<n> or so:<n> with n >= 1)")]
pub struct SpecParseError(pub String);

impl FromStr for Specialization {
    type Err = SpecParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || SpecParseError(text.to_string());
        let (kind, n) = text.trim().split_once(':').ok_or_else(err)?;
        let n: u32 = n.trim().parse().map_err(|_| err())?;
        if n == 0 {
            return Err(err());
        }
        match kind.trim() {
            "osp" => Ok(Specialization::osp(n)),
            "so" => Ok(Specialization::so(n)),
            _ => Err(err()),
        }
    }
}

/// A specialized value: a Laurent polynomial in `q` whenever the denominator
/// divides out, otherwise an unreduced quotient.
#[derive(Clone, Debug)]
pub enum Specialized {
    Poly(LaurentPoly1),
    Ratio(RationalFn1),
}

impl Specialized {
    fn from_ratio(v: RationalFn1) -> Self {
        assert!(!v.denominator().is_zero(), "specialized denominator vanished");
        match v.to_poly() {
            Some(p) => Specialized::Poly(p),
            None => Specialized::Ratio(v),
        }
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly1> {
        match self {
            Specialized::Poly(p) => Some(p),
            Specialized::Ratio(_) => None,
        }
    }

    pub fn to_rational(&self) -> RationalFn1 {
        match self {
            Specialized::Poly(p) => p.clone().into(),
            Specialized::Ratio(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Specialized::Poly(p) => p.is_zero(),
            Specialized::Ratio(r) => r.is_zero(),
        }
    }

    /// `{"numerator": [[q, c], ..], "denominator": [[q, c], ..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let r = self.to_rational();
        serde_json::json!({ "numerator": r.numerator().to_json(), "denominator": r.denominator().to_json() })
    }

    /// `v(-q)`.
    pub fn negate_var(&self) -> Self {
        match self {
            Specialized::Poly(p) => Specialized::Poly(p.negate_var()),
            Specialized::Ratio(r) => Specialized::Ratio(r.map_parts(|p| p.negate_var())),
        }
    }
}

impl PartialEq for Specialized {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Specialized::Poly(a), Specialized::Poly(b)) => a == b,
            _ => self.to_rational() == other.to_rational(),
        }
    }
}

impl fmt::Display for Specialized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialized::Poly(p) => write!(f, "{p}"),
            Specialized::Ratio(r) => write!(f, "{r}"),
        }
    }
}

/// Substitution of `r`, `s` by signed powers of `q`; a ring homomorphism.
pub trait Specialize {
    type Output;
    fn specialize(&self, spec: Specialization) -> Self::Output;
}

impl Specialize for LaurentPoly2 {
    type Output = LaurentPoly1;
    fn specialize(&self, spec: Specialization) -> LaurentPoly1 {
        self.terms().iter().map(|(m, c)| spec.image(*m, c)).collect_poly()
    }
}

impl Specialize for LocalizedPoly {
    type Output = Specialized;
    fn specialize(&self, spec: Specialization) -> Specialized {
        let den = LaurentPoly2::z().specialize(spec).pow(self.denominator_power());
        Specialized::from_ratio(RationalFn1::new(self.numerator().specialize(spec), den))
    }
}

impl Specialize for RationalFn2 {
    type Output = Specialized;
    fn specialize(&self, spec: Specialization) -> Specialized {
        Specialized::from_ratio(RationalFn1::new(
            self.numerator().specialize(spec),
            self.denominator().specialize(spec),
        ))
    }
}

trait CollectPoly {
    fn collect_poly(self) -> LaurentPoly1;
}

impl<I: Iterator<Item = (QMono, BigInt)>> CollectPoly for I {
    fn collect_poly(self) -> LaurentPoly1 {
        LaurentPoly1::from_terms(self)
    }
}

/// `dim_{-q}(V) = (-q^(2n) + q^(-2n))/(q - q^-1) + 1 = 1 - sum_j q^(2n-1-2j)`.
pub fn quantum_dim(n: u32) -> LaurentPoly1 {
    assert!(n >= 1);
    let n = n as i32;
    let tail = LaurentPoly1::from_terms((0..2 * n).map(|j| (QMono(2 * n - 1 - 2 * j), -1)));
    &LaurentPoly1::one() + &tail
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_substitution() {
        assert_eq!(
            LaurentPoly2::rs(1, 1).specialize(Specialization::osp(1)),
            -LaurentPoly1::q_pow(3)
        );
        assert_eq!(
            LaurentPoly2::z().specialize(Specialization::so(1)),
            &LaurentPoly1::q_pow(-1) - &LaurentPoly1::q()
        );
    }

    #[test]
    fn quantum_dim_rank_one() {
        let expected = LaurentPoly1::from_terms([(QMono(-1), -1), (QMono(0), 1), (QMono(1), -1)]);
        assert_eq!(quantum_dim(1), expected);
        let at_one: BigInt = quantum_dim(1).terms().iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(at_one, BigInt::from(-1));
    }

    #[test]
    fn quantum_dim_clears_division() {
        for n in 1..=4 {
            let lhs = &(&LaurentPoly1::q() - &LaurentPoly1::q_pow(-1))
                * &(&quantum_dim(n) - &LaurentPoly1::one());
            let two_n = 2 * n as i32;
            assert_eq!(lhs, &LaurentPoly1::q_pow(-two_n) - &LaurentPoly1::q_pow(two_n));
        }
    }

    #[test]
    fn x_specializes_to_quantum_dim() {
        for n in 1..=3 {
            let osp = LocalizedPoly::x().specialize(Specialization::osp(n));
            let so = LocalizedPoly::x().specialize(Specialization::so(n));
            assert_eq!(osp.as_poly(), Some(&quantum_dim(n)));
            assert_eq!(so, osp);
        }
    }

    #[test]
    fn parse_specialization() {
        assert_eq!("osp:2".parse(), Ok(Specialization::osp(2)));
        assert_eq!("so:1".parse(), Ok(Specialization::so(1)));
        assert!("so:0".parse::<Specialization>().is_err());
        assert!("sp:1".parse::<Specialization>().is_err());
        assert_eq!(Specialization::osp(3).to_string(), "osp:3");
        assert_eq!(Specialization::osp(3).partner(), Specialization::so(3));
    }
}
