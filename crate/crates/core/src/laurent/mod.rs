//! Exact arithmetic over `Z[r^±1, s^±1]`, its localization at `s - s^-1`,
//! unreduced rational functions, and the specializations to `Z[q^±1]`.

mod localized;
mod mono;
mod poly;
mod rational;
mod specialize;

pub use localized::LocalizedPoly;
pub use mono::{Monomial, QMono, RsMono};
pub use poly::{Laurent, LaurentPoly1, LaurentPoly2, NotDivisible};
pub use rational::{Rational, RationalFn1, RationalFn2};
pub use specialize::{quantum_dim, Specialization, SpecParseError, Specialize, Specialized};

#[cfg(test)]
mod props;
