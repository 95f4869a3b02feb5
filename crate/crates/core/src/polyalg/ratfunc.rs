use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{gcd_monic, LaurentQi, PolyQi, RealImagPair};
use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;

/// Reduced rational function `num / den` over Q(i).
///
/// `den` is monic and coprime to `num`; zero is stored as `0 / 1`. Laurent
/// polynomials are the rational functions whose denominator is `v^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFuncQi {
    num: PolyQi,
    den: PolyQi,
}

impl RatFuncQi {
    pub fn new(num: PolyQi, den: PolyQi) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFuncQi::zero());
        }
        let g = gcd_monic(&num, &den)?;
        let (n, d) = if g.is_one() { (num, den) } else { (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap()) };
        Ok(RatFuncQi::normalized(n, d))
    }

    /// Makes a coprime pair's denominator monic.
    fn normalized(n: PolyQi, d: PolyQi) -> Self {
        let l = d.lead().unwrap().clone();
        if l.is_one() {
            return RatFuncQi { num: n, den: d };
        }
        let li = l.inv().unwrap();
        RatFuncQi { num: n.scale(&li), den: d.scale(&li) }
    }

    pub fn zero() -> Self {
        RatFuncQi { num: PolyQi::zero(), den: PolyQi::one() }
    }

    pub fn one() -> Self {
        RatFuncQi::from_poly(PolyQi::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        RatFuncQi::from_poly(PolyQi::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        RatFuncQi::constant(GaussianRational::from_int(n))
    }

    pub fn var() -> Self {
        RatFuncQi::from_poly(PolyQi::var())
    }

    /// `v^k` for any integer `k`.
    pub fn var_pow(k: i64) -> Self {
        if k >= 0 {
            RatFuncQi::from_poly(PolyQi::monomial(GaussianRational::one(), k as usize))
        } else {
            RatFuncQi { num: PolyQi::one(), den: PolyQi::monomial(GaussianRational::one(), (-k) as usize) }
        }
    }

    /// `v - z`
    pub fn linear(z: &GaussianRational) -> Self {
        RatFuncQi::from_poly(PolyQi::linear(z))
    }

    pub fn from_poly(p: PolyQi) -> Self {
        RatFuncQi { num: p, den: PolyQi::one() }
    }

    pub fn from_laurent(l: &LaurentQi) -> Self {
        let k = l.order();
        if k >= 0 {
            RatFuncQi::from_poly(l.body().shift(k as usize))
        } else {
            RatFuncQi { num: l.body().clone(), den: PolyQi::monomial(GaussianRational::one(), (-k) as usize) }
        }
    }

    pub fn num(&self) -> &PolyQi {
        &self.num
    }

    pub fn den(&self) -> &PolyQi {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The scalar value when this is a constant.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn as_poly(&self) -> Option<&PolyQi> {
        self.den.is_one().then_some(&self.num)
    }

    /// `Some` when the denominator is a power of the variable and the value is nonzero.
    pub fn as_laurent(&self) -> Option<LaurentQi> {
        let dd = self.den.degree()?;
        if self.den.low_order() != dd || self.is_zero() {
            return None;
        }
        LaurentQi::new(-(dd as i64), self.num.clone()).ok()
    }

    /// `c v^k` with `c != 0`, returned as `(c, k)`.
    pub fn as_monomial(&self) -> Option<(GaussianRational, i64)> {
        let l = self.as_laurent()?;
        l.is_monomial().then(|| (l.body().coeff(0), l.order()))
    }

    /// `deg num - deg den`; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap() as i64)
    }

    /// Ratio of leading coefficients.
    pub fn lead(&self) -> Option<GaussianRational> {
        self.num.lead().cloned()
    }

    pub fn conj(&self) -> Self {
        RatFuncQi { num: self.num.conj(), den: self.den.conj() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFuncQi::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &RatFuncQi) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        RatFuncQi { num: self.num.scale(c), den: if c.is_zero() { PolyQi::one() } else { self.den.clone() } }
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let e = n.unsigned_abs() as u32;
        Ok(RatFuncQi { num: base.num.pow(e), den: base.den.pow(e) })
    }

    pub fn eval(&self, z: &GaussianRational) -> Result<GaussianRational> {
        self.num.eval(z).checked_div(&self.den.eval(z))
    }

    /// Order of vanishing at `z` (negative for a pole).
    pub fn ord_at(&self, z: &GaussianRational) -> i64 {
        self.num.root_order(z).0 as i64 - self.den.root_order(z).0 as i64
    }

    /// Substitutes `v -> s / v` (for `s != 0`), leaving coefficients alone.
    pub fn compose_inversion(&self, s: &GaussianRational) -> Self {
        if self.is_zero() {
            return RatFuncQi::zero();
        }
        // f(s/v) = v^{-deg N} rev_s(N) / (v^{-deg D} rev_s(D))
        let n = self.num.reversed_scaled(s);
        let d = self.den.reversed_scaled(s);
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let (n, d) = if dn >= dd { (n, d.shift(dn - dd)) } else { (n.shift(dd - dn), d) };
        // reversals of coprime polynomials stay coprime and never vanish at 0
        RatFuncQi::normalized(n, d)
    }

    /// `f = f1 + i f2` with real-coefficient parts, `f1 = (f + conj f)/2`.
    pub fn real_imag_split(&self) -> RealImagPair<RatFuncQi> {
        let c = self.conj();
        let half = GaussianRational::from_fracs(1, 2, 0, 1);
        let neg_half_i = GaussianRational::from_fracs(0, 1, -1, 2);
        RealImagPair { f1: (self + &c).scale(&half), f2: (self - &c).scale(&neg_half_i) }
    }

    /// `(f * conj f, 2 f1)`.
    pub fn norm_trace(&self) -> (RatFuncQi, RatFuncQi) {
        let norm = self * &self.conj();
        let trace = self + &self.conj();
        (norm, trace)
    }

    pub fn is_real(&self) -> bool {
        self.num.is_real() && self.den.is_real()
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if let Some(l) = self.as_laurent() {
            if l.order() < 0 {
                return l.fmt_var(var);
            }
        }
        if self.den.is_one() {
            return self.num.fmt_var(var);
        }
        format!("({})/({})", self.num.fmt_var(var), self.den.fmt_var(var))
    }
}

/// Monic gcd of two nonzero polynomials, skipping the work when one is constant.
fn small_gcd(a: &PolyQi, b: &PolyQi) -> PolyQi {
    if a.is_constant() || b.is_constant() {
        return PolyQi::one();
    }
    gcd_monic(a, b).expect("nonzero inputs")
}

// Sums and products of reduced fractions cancel only across the known
// factors, so only small gcds are taken.
impl<'a> Add<&'a RatFuncQi> for &'a RatFuncQi {
    type Output = RatFuncQi;
    fn add(self, o: &RatFuncQi) -> RatFuncQi {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let g = small_gcd(&self.den, &o.den);
        let (d1, d2) = (self.den.div_exact(&g).unwrap(), o.den.div_exact(&g).unwrap());
        let t = &(&self.num * &d2) + &(&o.num * &d1);
        if t.is_zero() {
            return RatFuncQi::zero();
        }
        let h = small_gcd(&t, &g);
        let (n, d) = if h.is_one() {
            (t, &d1 * &o.den)
        } else {
            (t.div_exact(&h).unwrap(), &d1 * &o.den.div_exact(&h).unwrap())
        };
        RatFuncQi::normalized(n, d)
    }
}

impl<'a> Sub<&'a RatFuncQi> for &'a RatFuncQi {
    type Output = RatFuncQi;
    fn sub(self, o: &RatFuncQi) -> RatFuncQi {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFuncQi> for &'a RatFuncQi {
    type Output = RatFuncQi;
    fn mul(self, o: &RatFuncQi) -> RatFuncQi {
        if self.is_zero() || o.is_zero() {
            return RatFuncQi::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFuncQi::from_poly(&self.num * &o.num);
        }
        let g1 = small_gcd(&self.num, &o.den);
        let g2 = small_gcd(&o.num, &self.den);
        let cut = |p: &PolyQi, g: &PolyQi| if g.is_one() { p.clone() } else { p.div_exact(g).unwrap() };
        let n = &cut(&self.num, &g1) * &cut(&o.num, &g2);
        let d = &cut(&self.den, &g2) * &cut(&o.den, &g1);
        RatFuncQi::normalized(n, d)
    }
}

impl Neg for &RatFuncQi {
    type Output = RatFuncQi;
    fn neg(self) -> RatFuncQi {
        RatFuncQi { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFuncQi {
    type Output = RatFuncQi;
    fn add(self, o: RatFuncQi) -> RatFuncQi {
        &self + &o
    }
}

impl Sub for RatFuncQi {
    type Output = RatFuncQi;
    fn sub(self, o: RatFuncQi) -> RatFuncQi {
        &self - &o
    }
}

impl Mul for RatFuncQi {
    type Output = RatFuncQi;
    fn mul(self, o: RatFuncQi) -> RatFuncQi {
        &self * &o
    }
}

impl From<PolyQi> for RatFuncQi {
    fn from(p: PolyQi) -> Self {
        RatFuncQi::from_poly(p)
    }
}

impl From<&LaurentQi> for RatFuncQi {
    fn from(l: &LaurentQi) -> Self {
        RatFuncQi::from_laurent(l)
    }
}

impl fmt::Display for RatFuncQi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("x"))
    }
}

impl fmt::Debug for RatFuncQi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFuncQi({})", self.fmt_var("v"))
    }
}
