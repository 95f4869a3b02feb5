//! Exact scalars: Q, Q(i) and Z[i].
//!
//! Everything the library computes lives over Q(i); no floating point is
//! used anywhere, so every equality test below is decided exactly.

mod gaussian;
mod gint;

pub use gaussian::{CircleLocation, GaussianRational, HalfPlane};
pub use gint::{factor_gaussian, hilbert90, GaussianFactorization, GaussianInteger};

/// Reduced fraction of big integers with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `GaussianRational::from_fracs`.
pub fn qi(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> GaussianRational {
    GaussianRational::from_fracs(re_num, re_den, im_num, im_den)
}
