use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::RealImagPair;
use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, Rational};

/// Dense univariate polynomial over Q(i); `coeffs[k]` multiplies `v^k`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQi {
    coeffs: Vec<GaussianRational>,
}

impl PolyQi {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyQi { coeffs }
    }

    pub fn zero() -> Self {
        PolyQi { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQi::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        PolyQi::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        PolyQi::monomial(GaussianRational::one(), 1)
    }

    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); k];
        coeffs.push(c);
        PolyQi::new(coeffs)
    }

    /// `v - z`
    pub fn linear(z: &GaussianRational) -> Self {
        PolyQi::new(vec![-z, GaussianRational::one()])
    }

    /// `prod (v - z)` over the listed roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a GaussianRational>) -> Self {
        roots.into_iter().fold(PolyQi::one(), |acc, z| &acc * &PolyQi::linear(z))
    }

    /// Builds a polynomial from integer real parts, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        PolyQi::new(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn lead(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| c.is_one())
    }

    /// True when every coefficient is real.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    /// Multiplicity of the root `v = 0`.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return PolyQi::zero();
        }
        PolyQi::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return PolyQi::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyQi { coeffs }
    }

    /// Divides by `v^k`; the low coefficients must vanish.
    pub fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.low_order() >= k || self.is_zero());
        PolyQi::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => PolyQi::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }

    pub fn eval(&self, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        PolyQi::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_integer((k as i64).into())))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = PolyQi::one();
        let mut sq = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divmod(&self, d: &PolyQi) -> Result<(PolyQi, PolyQi)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.lead().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return Ok((PolyQi::zero(), self.clone()));
        }
        let mut q = vec![GaussianRational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[k + j] -= &t;
            }
            q[k] = c;
        }
        rem.truncate(dd);
        Ok((PolyQi::new(q), PolyQi::new(rem)))
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &PolyQi) -> Option<PolyQi> {
        let (q, r) = self.divmod(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Multiplicity of `z` as a root together with the cofactor.
    pub fn root_order(&self, z: &GaussianRational) -> (usize, PolyQi) {
        let mut cur = self.clone();
        let mut k = 0;
        if cur.is_zero() {
            return (0, cur);
        }
        let lin = PolyQi::linear(z);
        while let Some(q) = cur.div_exact(&lin) {
            cur = q;
            k += 1;
        }
        (k, cur)
    }

    /// Coefficient-wise complex conjugate.
    pub fn conj(&self) -> Self {
        PolyQi { coeffs: self.coeffs.iter().map(|c| c.conj()).collect() }
    }

    /// `f = f1 + i f2` with real-coefficient `f1, f2`.
    pub fn real_imag_split(&self) -> RealImagPair<PolyQi> {
        let f1 = PolyQi::new(self.coeffs.iter().map(|c| GaussianRational::real(c.re.clone())).collect());
        let f2 = PolyQi::new(self.coeffs.iter().map(|c| GaussianRational::real(c.im.clone())).collect());
        RealImagPair { f1, f2 }
    }

    /// Determinant and trace of the matrix form `[[f1, -f2], [f2, f1]]`.
    pub fn norm_trace(&self) -> (PolyQi, PolyQi) {
        let pair = self.real_imag_split();
        let norm = self * &self.conj();
        let trace = pair.f1.scale(&GaussianRational::from_int(2));
        (norm, trace)
    }

    /// Reverses the coefficient list; `v^deg f(1/v)`.
    pub fn reversed(&self) -> Self {
        PolyQi::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `sum c_k s^k v^{deg - k}`, i.e. `v^deg f(s / v)`.
    pub fn reversed_scaled(&self, s: &GaussianRational) -> Self {
        let mut pow = GaussianRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pow);
            pow = &pow * s;
        }
        out.reverse();
        PolyQi::new(out)
    }

    /// Renders with the given variable name, in parser syntax.
    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = term_string(c, var, k as i64);
            push_term(&mut out, &term);
        }
        out
    }
}

pub(crate) fn monomial_string(var: &str, k: i64) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{}^{}", var, k),
    }
}

pub(crate) fn term_string(c: &GaussianRational, var: &str, k: i64) -> String {
    let mono = monomial_string(var, k);
    if mono.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        return mono;
    }
    if *c == GaussianRational::from_int(-1) {
        return format!("-{}", mono);
    }
    if !c.re.is_zero() && !c.im.is_zero() {
        format!("({})*{}", c, mono)
    } else {
        format!("{}*{}", c, mono)
    }
}

pub(crate) fn push_term(out: &mut String, term: &str) {
    if out.is_empty() || term.starts_with('-') {
        out.push_str(term);
    } else {
        out.push('+');
        out.push_str(term);
    }
}

/// Prime `1 mod 4`, so Q(i) reduces into F_p through a square root of -1.
const P: u64 = 1_000_000_009;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

fn sqrt_minus_one() -> u64 {
    // c^((p-1)/4) squares to -1 for any quadratic non-residue c
    let c = (2..).find(|&c| pow_mod(c, (P - 1) / 2) == P - 1).unwrap();
    pow_mod(c, (P - 1) / 4)
}

fn rational_mod(r: &Rational) -> Option<u64> {
    let m = num_bigint::BigInt::from(P);
    let reduce = |n: &num_bigint::BigInt| -> u64 {
        let v = ((n % &m) + &m) % &m;
        v.try_into().unwrap()
    };
    let d = reduce(r.denom());
    if d == 0 {
        return None;
    }
    Some(reduce(r.numer()) * pow_mod(d, P - 2) % P)
}

fn reduce_mod(f: &PolyQi, sqrt_m1: u64) -> Option<Vec<u64>> {
    let mut out = Vec::with_capacity(f.coeffs.len());
    for c in &f.coeffs {
        out.push((rational_mod(&c.re)? + rational_mod(&c.im)? * sqrt_m1) % P);
    }
    // the image must keep its degree
    (*out.last()? != 0).then_some(out)
}

fn degree_of_gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), P - 2);
        while a.len() >= b.len() {
            let c = a.last().unwrap() * inv % P;
            let shift = a.len() - b.len();
            for (k, bc) in b.iter().enumerate() {
                a[k + shift] = (a[k + shift] + P - c * bc % P) % P;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True only when `f` and `g` are certainly coprime: their images mod `P`
/// keep their degrees and share no factor.
fn coprime_by_reduction(f: &PolyQi, g: &PolyQi) -> bool {
    let s = sqrt_minus_one();
    match (reduce_mod(f, s), reduce_mod(g, s)) {
        (Some(a), Some(b)) => degree_of_gcd_mod(a, b) == 0,
        _ => false,
    }
}

impl PolyQi {
    /// True only when `z` is certainly not a root, judged by the image mod `P`.
    pub(crate) fn certainly_not_root(&self, z: &GaussianRational) -> bool {
        let s = sqrt_minus_one();
        let image = |c: &GaussianRational| Some((rational_mod(&c.re)? + rational_mod(&c.im)? * s) % P);
        let Some(zp) = image(z) else { return false };
        let mut acc = 0;
        for c in self.coeffs.iter().rev() {
            let Some(cp) = image(c) else { return false };
            acc = (acc * zp + cp) % P;
        }
        acc != 0
    }
}

/// Monic gcd by the Euclidean algorithm; rejects two zero inputs.
pub fn gcd_monic(f: &PolyQi, g: &PolyQi) -> Result<PolyQi> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroInput("gcd_monic"));
    }
    if f.degree() == Some(0) || g.degree() == Some(0) {
        return Ok(PolyQi::one());
    }
    if !f.is_zero() && !g.is_zero() && coprime_by_reduction(f, g) {
        return Ok(PolyQi::one());
    }
    let mut a = f.monic();
    let mut b = g.monic();
    while !b.is_zero() {
        let (_, r) = a.divmod(&b)?;
        a = b;
        b = r.monic();
    }
    Ok(a.monic())
}

impl fmt::Display for PolyQi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("x"))
    }
}

impl fmt::Debug for PolyQi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQi({})", self.fmt_var("v"))
    }
}

impl<'a> Add<&'a PolyQi> for &'a PolyQi {
    type Output = PolyQi;
    fn add(self, o: &PolyQi) -> PolyQi {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyQi::new((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a PolyQi> for &'a PolyQi {
    type Output = PolyQi;
    fn sub(self, o: &PolyQi) -> PolyQi {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyQi::new((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }
}

fn integral_coeffs(c: &[GaussianRational]) -> (BigInt, Vec<(BigInt, BigInt)>) {
    let d = c.iter().fold(BigInt::from(1), |acc, z| num_integer::lcm(acc, z.denom_lcm()));
    let ints = c
        .iter()
        .map(|z| {
            let scale = |q: &Rational| q.numer() * (&d / q.denom());
            (scale(&z.re), scale(&z.im))
        })
        .collect();
    (d, ints)
}

impl<'a> Mul<&'a PolyQi> for &'a PolyQi {
    type Output = PolyQi;
    fn mul(self, o: &PolyQi) -> PolyQi {
        if self.is_zero() || o.is_zero() {
            return PolyQi::zero();
        }
        if self.coeffs.len() == 1 {
            return o.scale(&self.coeffs[0]);
        }
        if o.coeffs.len() == 1 {
            return self.scale(&o.coeffs[0]);
        }
        // convolve over Z[i] after clearing denominators, normalize once per coefficient
        let (da, a) = integral_coeffs(&self.coeffs);
        let (db, b) = integral_coeffs(&o.coeffs);
        let n = a.len() + b.len() - 1;
        let mut re = vec![BigInt::zero(); n];
        let mut im = vec![BigInt::zero(); n];
        for (i, (ar, ai)) in a.iter().enumerate() {
            if ar.is_zero() && ai.is_zero() {
                continue;
            }
            for (j, (br, bi)) in b.iter().enumerate() {
                re[i + j] += ar * br - ai * bi;
                im[i + j] += ar * bi + ai * br;
            }
        }
        let d = da * db;
        let out = re
            .into_iter()
            .zip(im)
            .map(|(r, i)| GaussianRational::new(Rational::new(r, d.clone()), Rational::new(i, d.clone())))
            .collect();
        PolyQi::new(out)
    }
}

impl Neg for &PolyQi {
    type Output = PolyQi;
    fn neg(self) -> PolyQi {
        PolyQi { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for PolyQi {
    type Output = PolyQi;
    fn add(self, o: PolyQi) -> PolyQi {
        &self + &o
    }
}

impl Sub for PolyQi {
    type Output = PolyQi;
    fn sub(self, o: PolyQi) -> PolyQi {
        &self - &o
    }
}

impl Mul for PolyQi {
    type Output = PolyQi;
    fn mul(self, o: PolyQi) -> PolyQi {
        &self * &o
    }
}

impl Zero for PolyQi {
    fn zero() -> Self {
        PolyQi::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::qi;

    fn i() -> GaussianRational {
        GaussianRational::i()
    }

    #[test]
    fn product_of_conjugate_linears() {
        let f = &PolyQi::linear(&i()) * &PolyQi::linear(&-i());
        assert_eq!(f, PolyQi::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn divmod_exact_and_zero_divisor() {
        let (q, r) = PolyQi::from_ints(&[1, 0, 1]).divmod(&PolyQi::linear(&i())).unwrap();
        assert_eq!(q, PolyQi::linear(&-i()));
        assert!(r.is_zero());
        assert_eq!(PolyQi::one().divmod(&PolyQi::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(PolyQi::linear(&i()).conj(), PolyQi::linear(&-i()));
        let real = PolyQi::from_ints(&[1, 0, 1]);
        assert_eq!(real.conj(), real);
    }

    #[test]
    fn real_imag_split_examples() {
        // (1+i)x + 3
        let f = PolyQi::new(vec![GaussianRational::from_int(3), qi(1, 1, 1, 1)]);
        let p = f.real_imag_split();
        assert_eq!(p.f1, PolyQi::from_ints(&[3, 1]));
        assert_eq!(p.f2, PolyQi::from_ints(&[0, 1]));

        let p = PolyQi::from_ints(&[1, 0, 1]).real_imag_split();
        assert!(p.f2.is_zero());

        // (x^2+1)(x-i) = x^3 - i x^2 + x - i
        let f = &PolyQi::from_ints(&[1, 0, 1]) * &PolyQi::linear(&i());
        assert_eq!(f, PolyQi::new(vec![-i(), GaussianRational::one(), -i(), GaussianRational::one()]));
        let p = f.real_imag_split();
        assert_eq!(p.f1, PolyQi::from_ints(&[0, 1, 0, 1]));
        assert_eq!(p.f2, PolyQi::from_ints(&[-1, 0, -1]));
        assert_eq!(p.reassemble_poly(), f);
    }

    #[test]
    fn gcd_examples() {
        let x2p1 = PolyQi::from_ints(&[1, 0, 1]);
        assert_eq!(gcd_monic(&x2p1, &PolyQi::linear(&i())).unwrap(), PolyQi::linear(&i()));
        assert_eq!(gcd_monic(&x2p1, &PolyQi::from_ints(&[-2, 1])).unwrap(), PolyQi::one());
        let f = &x2p1 * &PolyQi::linear(&i());
        assert_eq!(gcd_monic(&f, &f.conj()).unwrap(), x2p1);
        assert_eq!(gcd_monic(&PolyQi::zero(), &PolyQi::zero()), Err(Error::ZeroInput("gcd_monic")));
        assert_eq!(gcd_monic(&PolyQi::zero(), &f).unwrap(), f.monic());
    }

    #[test]
    fn norm_trace_examples() {
        let (n, t) = PolyQi::linear(&i()).norm_trace();
        assert_eq!(n, PolyQi::from_ints(&[1, 0, 1]));
        assert_eq!(t, PolyQi::from_ints(&[0, 2]));
        let (n, t) = PolyQi::constant(i()).norm_trace();
        assert_eq!(n, PolyQi::one());
        assert!(t.is_zero());

        let f = PolyQi::linear(&i());
        let g = PolyQi::linear(&qi(1, 1, 1, 1));
        // (x^2+1)(x^2-2x+2), expanded by hand
        let expected = PolyQi::from_ints(&[2, -2, 3, -2, 1]);
        assert_eq!((&f * &g).norm_trace().0, expected);
        assert_eq!(&f.norm_trace().0 * &g.norm_trace().0, expected);
    }

    #[test]
    fn formatting() {
        let f = PolyQi::new(vec![-i(), GaussianRational::one(), qi(3, 5, 4, 5), GaussianRational::from_int(-2)]);
        assert_eq!(f.fmt_var("x"), "-2*x^3+(3/5+4/5*i)*x^2+x-i");
        assert_eq!(PolyQi::zero().fmt_var("t"), "0");
    }

    #[test]
    fn root_order_counts_multiplicity() {
        let z = qi(3, 5, 4, 5);
        let f = PolyQi::from_roots([&z, &z, &GaussianRational::from_int(2)]);
        let (k, rest) = f.root_order(&z);
        assert_eq!(k, 2);
        assert_eq!(rest, PolyQi::linear(&GaussianRational::from_int(2)));
    }
}
