//! Powers of a single BMW generator in the basis `{1, g, e}`, their traces,
//! and the two-strand torus link invariants built from them.

use crate::laurent::{LaurentPoly2, LocalizedPoly, RationalFn2, Specialization, Specialize};

/// `g^m = a + b g + c e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPowerCoeffs {
    pub m: i64,
    pub a: LaurentPoly2,
    pub b: LaurentPoly2,
    pub c: LaurentPoly2,
}

impl GPowerCoeffs {
    pub fn identity() -> Self {
        GPowerCoeffs {
            m: 0,
            a: LaurentPoly2::one(),
            b: LaurentPoly2::zero(),
            c: LaurentPoly2::zero(),
        }
    }

    /// Right multiplication by `g`, using `g^2 = 1 + z g - z r^-1 e` and
    /// `e g = r^-1 e`.
    pub fn step_up(&self) -> Self {
        let z = LaurentPoly2::z();
        let r_inv = LaurentPoly2::rs(-1, 0);
        GPowerCoeffs {
            m: self.m + 1,
            a: self.b.clone(),
            b: &self.a + &(&self.b * &z),
            c: &(&self.c - &(&self.b * &z)) * &r_inv,
        }
    }

    /// Right multiplication by `g^-1 = g - z + z e`, with `e g^-1 = r e`.
    pub fn step_down(&self) -> Self {
        let z = LaurentPoly2::z();
        GPowerCoeffs {
            m: self.m - 1,
            a: &self.b - &(&self.a * &z),
            b: self.a.clone(),
            c: &(&self.a * &z) + &(&self.c * &LaurentPoly2::r()),
        }
    }
}

pub fn g_power_coeffs(m: i64) -> GPowerCoeffs {
    let mut row = GPowerCoeffs::identity();
    while row.m < m {
        row = row.step_up();
    }
    while row.m > m {
        row = row.step_down();
    }
    row
}

/// `tr(g^m) = a + (b r + c) / x`.
///
/// `1/x` lies outside the localized ring, so this is a plain quotient with
/// denominator `r - r^-1 + z`.
pub fn trace_g_power(m: i64) -> RationalFn2 {
    let row = g_power_coeffs(m);
    let z = LaurentPoly2::z();
    let x_num = &(&LaurentPoly2::r() - &LaurentPoly2::rs(-1, 0)) + &z;
    let rest = &(&row.b * &LaurentPoly2::r()) + &row.c;
    RationalFn2::new(&(&row.a * &x_num) + &(&rest * &z), x_num)
}

/// `F` of the closure of `sigma_1^m` in `B_2`: `r^-m (a x + b r + c)`.
pub fn torus2_invariant(m: i64) -> LocalizedPoly {
    let row = g_power_coeffs(m);
    let rest = &(&row.b * &LaurentPoly2::r()) + &row.c;
    (&(&LocalizedPoly::x() * &LocalizedPoly::from(row.a)) + &LocalizedPoly::from(rest))
        .mul_poly(&LaurentPoly2::rs(-(m as i32), 0))
}

fn all_terms_have_parity(p: &LaurentPoly2, parity: i64) -> bool {
    p.terms()
        .iter()
        .all(|(m, _)| (m.r as i64 + m.s as i64 - parity).rem_euclid(2) == 0)
}

/// `a_m` and `c_m` have total degrees `= m`, `b_m` has total degrees
/// `= m + 1`, all mod 2.
pub fn parity_check(m: i64) -> bool {
    let row = g_power_coeffs(m);
    all_terms_have_parity(&row.a, m)
        && all_terms_have_parity(&row.c, m)
        && all_terms_have_parity(&row.b, m + 1)
}

/// `F(-r, -s) = F(r, s)` for the closure of `sigma_1^m`.
pub fn symmetry_check(m: i64) -> bool {
    let f = torus2_invariant(m);
    let k = f.denominator_power();
    let flipped = f.flip_vars();
    flipped.numerator_over(k) == f.numerator_over(k) && flipped == f
}

/// `tr(g^m)` at `SO(n)` is `(-1)^m` times its value at `OSP(n)`.
pub fn trace_sign_check(m: i64, n: u32) -> bool {
    let t = trace_g_power(m);
    let osp = t.specialize(Specialization::osp(n));
    let so = t.specialize(Specialization::so(n));
    if m.rem_euclid(2) == 0 {
        osp == so
    } else {
        osp.to_rational() == -&so.to_rational()
    }
}
