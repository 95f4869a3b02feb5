//! Univariate polynomials, Laurent polynomials and rational functions over Q(i).
//!
//! The variable carries no name here; contexts print it as `x` or `t`.

mod laurent;
mod poly;
mod ratfunc;

pub use laurent::LaurentQi;
pub use poly::{gcd_monic, PolyQi};
pub use ratfunc::RatFuncQi;

/// `f = f1 + i f2` with both parts real.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealImagPair<T> {
    pub f1: T,
    pub f2: T,
}

impl RealImagPair<PolyQi> {
    pub fn reassemble_poly(&self) -> PolyQi {
        &self.f1 + &self.f2.scale(&crate::exactnum::GaussianRational::i())
    }
}

impl RealImagPair<RatFuncQi> {
    pub fn reassemble(&self) -> RatFuncQi {
        &self.f1 + &self.f2.scale(&crate::exactnum::GaussianRational::i())
    }
}
