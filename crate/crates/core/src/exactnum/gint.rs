use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{GaussianRational, Rational};
use crate::error::{Error, Result};

/// A Gaussian integer `a + b i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInteger {
    pub a: BigInt,
    pub b: BigInt,
}

impl GaussianInteger {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GaussianInteger { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        GaussianInteger::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianInteger::new(1, 0)
    }

    /// The four units `1, i, -1, -i` in that order.
    pub fn units() -> [GaussianInteger; 4] {
        [
            GaussianInteger::new(1, 0),
            GaussianInteger::new(0, 1),
            GaussianInteger::new(-1, 0),
            GaussianInteger::new(0, -1),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.b * &self.b
    }

    pub fn conj(&self) -> Self {
        GaussianInteger { a: self.a.clone(), b: -&self.b }
    }

    pub fn mul(&self, o: &GaussianInteger) -> GaussianInteger {
        GaussianInteger { a: &self.a * &o.a - &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a }
    }

    /// Exact quotient, or `None` when `o` does not divide `self`.
    pub fn div_exact(&self, o: &GaussianInteger) -> Option<GaussianInteger> {
        if o.is_zero() {
            return None;
        }
        let n = o.norm();
        let num = self.mul(&o.conj());
        if num.a.is_multiple_of(&n) && num.b.is_multiple_of(&n) {
            Some(GaussianInteger { a: num.a / &n, b: num.b / &n })
        } else {
            None
        }
    }

    /// The associate with `a > 0, b >= 0`, together with the unit `u` such
    /// that `self = u * associate`.
    pub fn canonical_associate(&self) -> (GaussianInteger, GaussianInteger) {
        assert!(!self.is_zero(), "zero has no canonical associate");
        for u in GaussianInteger::units() {
            let cand = self.mul(&u);
            if cand.a.is_positive() && !cand.b.is_negative() {
                // self = cand * u^{-1} = cand * conj(u)
                return (cand, u.conj());
            }
        }
        unreachable!("every nonzero Gaussian integer has a first-quadrant associate")
    }

    pub fn to_rational(&self) -> GaussianRational {
        GaussianRational::new(Rational::from_integer(self.a.clone()), Rational::from_integer(self.b.clone()))
    }

    /// Gaussian gcd by the Euclidean algorithm with rounded quotients.
    pub fn gcd(&self, o: &GaussianInteger) -> GaussianInteger {
        let mut x = self.clone();
        let mut y = o.clone();
        while !y.is_zero() {
            let r = x.rem_round(&y);
            x = y;
            y = r;
        }
        if x.is_zero() {
            x
        } else {
            x.canonical_associate().0
        }
    }

    fn rem_round(&self, o: &GaussianInteger) -> GaussianInteger {
        let n = o.norm();
        let num = self.mul(&o.conj());
        let qa = round_div(&num.a, &n);
        let qb = round_div(&num.b, &n);
        let q = GaussianInteger { a: qa, b: qb };
        let prod = q.mul(o);
        GaussianInteger { a: &self.a - prod.a, b: &self.b - prod.b }
    }
}

fn round_div(x: &BigInt, n: &BigInt) -> BigInt {
    // floor((2x + n) / 2n)
    let two = BigInt::from(2);
    (x * &two + n).div_floor(&(n * &two))
}

impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

impl fmt::Debug for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `n = unit * prod(prime^exp)`, primes canonical (first quadrant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianFactorization {
    pub unit: GaussianInteger,
    pub factors: Vec<(GaussianInteger, u32)>,
}

impl GaussianFactorization {
    pub fn product(&self) -> GaussianInteger {
        let mut acc = self.unit.clone();
        for (p, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(p);
            }
        }
        acc
    }

    /// Every divisor up to units, as canonical associates.
    pub fn divisors(&self) -> Vec<GaussianInteger> {
        let mut out = vec![GaussianInteger::one()];
        for (p, e) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
            for d in &out {
                let mut cur = d.clone();
                next.push(cur.clone());
                for _ in 0..*e {
                    cur = cur.mul(p);
                    next.push(cur.clone());
                }
            }
            out = next;
        }
        out.into_iter().map(|d| d.canonical_associate().0).collect()
    }
}

fn factor_u128(mut m: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p: u128 = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn pow_mod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1u128;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// `p = a^2 + b^2` for a prime `p = 1 mod 4` (Hermite-Serret descent).
fn two_squares(p: u128) -> (u128, u128) {
    let mut c = 2u128;
    let root = loop {
        let r = pow_mod(c, (p - 1) / 4, p);
        if r * r % p == p - 1 {
            break r;
        }
        c += 1;
    };
    let bound = isqrt(p);
    let (mut a, mut b) = (p, root);
    while b > bound {
        let r = a % b;
        a = b;
        b = r;
    }
    let rest = p - b * b;
    let other = isqrt(rest);
    debug_assert_eq!(other * other + b * b, p);
    (b, other)
}

/// Factors a nonzero Gaussian integer into canonical primes and a unit.
///
/// The norm is factored by trial division, so it must fit in 64 bits.
pub fn factor_gaussian(n: &GaussianInteger) -> Result<GaussianFactorization> {
    if n.is_zero() {
        return Err(Error::ZeroInput("factor_gaussian"));
    }
    let norm = n.norm();
    let norm_u = norm.to_u64().ok_or_else(|| Error::NormTooLarge(norm.to_string()))? as u128;
    let mut rest = n.clone();
    let mut factors = Vec::new();
    for (p, e) in factor_u128(norm_u) {
        if p == 2 {
            let pi = GaussianInteger::new(1, 1);
            let mut k = 0;
            while let Some(q) = rest.div_exact(&pi) {
                rest = q;
                k += 1;
            }
            debug_assert_eq!(k, e);
            factors.push((pi, k));
        } else if p % 4 == 3 {
            let pi = GaussianInteger::new(BigInt::from(p), 0);
            let mut k = 0;
            while let Some(q) = rest.div_exact(&pi) {
                rest = q;
                k += 1;
            }
            debug_assert_eq!(2 * k, e);
            factors.push((pi, k));
        } else {
            let (a, b) = two_squares(p);
            let pi = GaussianInteger::new(BigInt::from(a), BigInt::from(b)).canonical_associate().0;
            let pi_bar = pi.conj().canonical_associate().0;
            for cand in [pi, pi_bar] {
                let mut k = 0;
                while let Some(q) = rest.div_exact(&cand) {
                    rest = q;
                    k += 1;
                }
                if k > 0 {
                    factors.push((cand, k));
                }
            }
        }
    }
    debug_assert!(rest.is_unit());
    factors.sort_by(|x, y| (x.0.norm(), &x.0).cmp(&(y.0.norm(), &y.0)));
    Ok(GaussianFactorization { unit: rest, factors })
}

/// Returns `u` with `conj(u)/u = w` for any `w` of square norm 1.
///
/// Uses `u = 1 + conj(w)`, which works for every `w != -1`; `w = -1` is
/// solved by `u = i` and `w = 1` by `u = 1`.
pub fn hilbert90(w: &GaussianRational) -> Result<GaussianRational> {
    if !w.norm_sq().is_one() {
        return Err(Error::NormNotOne(w.norm_sq().to_string()));
    }
    if w.is_one() {
        return Ok(GaussianRational::one());
    }
    if *w == GaussianRational::from_int(-1) {
        return Ok(GaussianRational::i());
    }
    Ok(&GaussianRational::one() + &w.conj())
}
