use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Position of a point relative to the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CircleLocation {
    Inside,
    On,
    Outside,
}

/// Position of a point relative to the real axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfPlane {
    Upper,
    Real,
    Lower,
}

/// An exact element `re + im*i` of Q(i).
///
/// Ordering is lexicographic on `(re, im)`; it has no algebraic meaning and
/// only serves to give root tables a deterministic layout.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()))
    }

    /// `(re_num/re_den) + (im_num/im_den) i`; panics on a zero denominator.
    pub fn from_fracs(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational::new(Rational::new(re_num.into(), re_den.into()), Rational::new(im_num.into(), im_den.into()))
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::from_ints(n, 0)
    }

    pub fn zero() -> Self {
        GaussianRational::from_ints(0, 0)
    }

    pub fn one() -> Self {
        GaussianRational::from_ints(1, 0)
    }

    pub fn i() -> Self {
        GaussianRational::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `re^2 + im^2`, the exact square of the modulus.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv().ok_or(Error::DivisionByZero)? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = GaussianRational::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational::new(&self.re * r, &self.im * r)
    }

    pub fn circle_location(&self) -> CircleLocation {
        let n = self.norm_sq();
        match n.cmp(&Rational::one()) {
            std::cmp::Ordering::Less => CircleLocation::Inside,
            std::cmp::Ordering::Equal => CircleLocation::On,
            std::cmp::Ordering::Greater => CircleLocation::Outside,
        }
    }

    pub fn half_plane_location(&self) -> HalfPlane {
        if self.im.is_positive() {
            HalfPlane::Upper
        } else if self.im.is_negative() {
            HalfPlane::Lower
        } else {
            HalfPlane::Real
        }
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denom_lcm(&self) -> BigInt {
        num_integer::lcm(self.re.denom().clone(), self.im.denom().clone())
    }

    /// Renders this scalar as a parenthesised factor when it is a sum of
    /// a real and an imaginary part or carries a sign.
    pub fn to_factor_string(&self) -> String {
        let s = self.to_string();
        if (!self.re.is_zero() && !self.im.is_zero()) || s.starts_with('-') {
            format!("({})", s)
        } else {
            s
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Prints in the literal syntax accepted by the expression parser,
/// e.g. `3/5+4/5*i`, `-i`, `7/2`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write_rational(f, &self.re);
        }
        if !self.re.is_zero() {
            write_rational(f, &self.re)?;
            if self.im.is_positive() {
                write!(f, "+")?;
            }
        }
        if self.im.is_one() {
            write!(f, "i")
        } else if (-&self.im).is_one() {
            write!(f, "-i")
        } else {
            write_rational(f, &self.im)?;
            write!(f, "*i")
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if o.im.is_zero() {
            return self.scale(&o.re);
        }
        if self.im.is_zero() {
            return o.scale(&self.re);
        }
        GaussianRational::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

/// Panics on division by zero, like the integer operators.
impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &GaussianRational) -> GaussianRational {
        self * &o.inv().expect("division by zero in Q(i)")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: &GaussianRational) -> GaussianRational {
                (&self).$m(o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, o: &GaussianRational) {
        *self = &*self * o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::from_fracs(a, b, c, d)
    }

    #[test]
    fn conj_examples() {
        assert_eq!(GaussianRational::from_ints(3, 4).conj(), GaussianRational::from_ints(3, -4));
        assert_eq!(GaussianRational::from_int(5).conj(), GaussianRational::from_int(5));
        let z = q(1, 2, 7, 3);
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn norm_sq_examples() {
        assert_eq!(q(3, 5, 4, 5).norm_sq(), Rational::one());
        assert_eq!(GaussianRational::from_ints(1, 1).norm_sq(), Rational::from_integer(2.into()));
        let z = GaussianRational::from_ints(2, 1);
        let w = GaussianRational::from_ints(1, -3);
        assert_eq!((&z * &w).norm_sq(), Rational::from_integer(50.into()));
        assert_eq!(z.norm_sq() * w.norm_sq(), Rational::from_integer(50.into()));
    }

    #[test]
    fn locations() {
        assert_eq!(q(3, 5, 4, 5).circle_location(), CircleLocation::On);
        assert_eq!(q(1, 2, 0, 1).circle_location(), CircleLocation::Inside);
        assert_eq!(GaussianRational::from_ints(0, 2).circle_location(), CircleLocation::Outside);
        assert_eq!(GaussianRational::i().half_plane_location(), HalfPlane::Upper);
        assert_eq!(q(-7, 2, 0, 1).half_plane_location(), HalfPlane::Real);
        assert_eq!(GaussianRational::from_ints(1, -1).half_plane_location(), HalfPlane::Lower);
    }

    #[test]
    fn display_literal_syntax() {
        assert_eq!(q(3, 5, 4, 5).to_string(), "3/5+4/5*i");
        assert_eq!(GaussianRational::from_ints(0, -1).to_string(), "-i");
        assert_eq!(q(-7, 2, 0, 1).to_string(), "-7/2");
        assert_eq!(q(1, 1, -3, 2).to_string(), "1-3/2*i");
        assert_eq!(GaussianRational::zero().to_string(), "0");
    }

    #[test]
    fn pow_and_inverse() {
        let z = GaussianRational::from_ints(1, 1);
        assert_eq!(z.pow(2).unwrap(), GaussianRational::from_ints(0, 2));
        assert_eq!(z.pow(-1).unwrap(), q(1, 2, -1, 2));
        assert!(GaussianRational::zero().pow(-1).is_err());
    }
}
