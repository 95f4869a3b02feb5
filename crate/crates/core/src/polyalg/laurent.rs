use std::fmt;
use std::ops::Mul;

use super::poly::{push_term, term_string};
use super::{PolyQi, RatFuncQi, RealImagPair};
use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;

/// Nonzero Laurent polynomial `t^order * body` with `body(0) != 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentQi {
    order: i64,
    body: PolyQi,
}

impl LaurentQi {
    /// Normalizes `t^order * poly`, moving any factor of `t` out of `poly`.
    pub fn new(order: i64, poly: PolyQi) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroInput("LaurentQi"));
        }
        let low = poly.low_order();
        Ok(LaurentQi { order: order + low as i64, body: poly.unshift(low) })
    }

    pub fn from_poly(poly: PolyQi) -> Result<Self> {
        LaurentQi::new(0, poly)
    }

    pub fn constant(c: GaussianRational) -> Result<Self> {
        LaurentQi::new(0, PolyQi::constant(c))
    }

    pub fn one() -> Self {
        LaurentQi { order: 0, body: PolyQi::one() }
    }

    /// `t^k`
    pub fn t_pow(k: i64) -> Self {
        LaurentQi { order: k, body: PolyQi::one() }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn body(&self) -> &PolyQi {
        &self.body
    }

    /// Largest exponent carrying a nonzero coefficient.
    pub fn top_exponent(&self) -> i64 {
        self.order + self.body.degree().unwrap() as i64
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: i64) -> GaussianRational {
        let idx = k - self.order;
        if idx < 0 {
            GaussianRational::zero()
        } else {
            self.body.coeff(idx as usize)
        }
    }

    /// True when the value is a single monomial `c t^k`, i.e. a unit.
    pub fn is_monomial(&self) -> bool {
        self.body.is_constant()
    }

    pub fn conj(&self) -> Self {
        LaurentQi { order: self.order, body: self.body.conj() }
    }

    pub fn scale(&self, c: &GaussianRational) -> Result<Self> {
        LaurentQi::new(self.order, self.body.scale(c))
    }

    /// `None` when the sum vanishes.
    pub fn checked_add(&self, o: &LaurentQi) -> Option<LaurentQi> {
        let base = self.order.min(o.order);
        let a = self.body.shift((self.order - base) as usize);
        let b = o.body.shift((o.order - base) as usize);
        LaurentQi::new(base, &a + &b).ok()
    }

    pub fn checked_sub(&self, o: &LaurentQi) -> Option<LaurentQi> {
        let neg = LaurentQi { order: o.order, body: -&o.body };
        self.checked_add(&neg)
    }

    pub fn pow(&self, n: u32) -> LaurentQi {
        LaurentQi { order: self.order * n as i64, body: self.body.pow(n) }
    }

    /// Inverse, defined only for monomials.
    pub fn inv(&self) -> Option<LaurentQi> {
        if !self.is_monomial() {
            return None;
        }
        let c = self.body.coeff(0).inv()?;
        Some(LaurentQi { order: -self.order, body: PolyQi::constant(c) })
    }

    /// Splits coefficients into real and imaginary parts.
    pub fn real_imag_split(&self) -> RealImagPair<RatFuncQi> {
        let p = self.body.real_imag_split();
        let shift = |b: PolyQi| match LaurentQi::new(self.order, b) {
            Ok(l) => RatFuncQi::from_laurent(&l),
            Err(_) => RatFuncQi::zero(),
        };
        RealImagPair { f1: shift(p.f1), f2: shift(p.f2) }
    }

    pub fn to_ratfunc(&self) -> RatFuncQi {
        RatFuncQi::from_laurent(self)
    }

    pub fn fmt_var(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.body.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            push_term(&mut out, &term_string(c, var, self.order + k as i64));
        }
        out
    }
}

impl<'a> Mul<&'a LaurentQi> for &'a LaurentQi {
    type Output = LaurentQi;
    fn mul(self, o: &LaurentQi) -> LaurentQi {
        // body(0) * o.body(0) != 0, so no renormalization is needed
        LaurentQi { order: self.order + o.order, body: &self.body * &o.body }
    }
}

impl Mul for LaurentQi {
    type Output = LaurentQi;
    fn mul(self, o: LaurentQi) -> LaurentQi {
        &self * &o
    }
}

impl fmt::Display for LaurentQi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("t"))
    }
}

impl fmt::Debug for LaurentQi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQi({})", self.fmt_var("t"))
    }
}
