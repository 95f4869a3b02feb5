//! Divisor-level view of polynomials: roots over Q(i) with multiplicity.
//!
//! Roots are found by the rational root argument in Z\[i\]: after clearing
//! denominators and removing the content, every root `p/q` in lowest terms
//! has `p` dividing the trailing coefficient and `q` dividing the leading
//! one. Candidates are enumerated from the Gaussian factorizations of both,
//! filtered by the divisibility conditions `(q m - p) | f(m)` for
//! `m = 1, -1`, and confirmed by exact evaluation.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{factor_gaussian, GaussianInteger, GaussianRational, Rational};
use crate::polyalg::{gcd_monic, LaurentQi, PolyQi, RatFuncQi};

/// Root table: point -> nonzero exponent.
pub type RootMultiset = BTreeMap<GaussianRational, i64>;

/// `unit * v^t_exp * prod (v - z)^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitForm {
    pub unit: GaussianRational,
    pub t_exp: i64,
    pub roots: RootMultiset,
}

/// A partial splitting: `split_part * residual` is the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnsplitReport {
    pub split_part: SplitForm,
    /// Monic, degree at least 2, no root in Q(i).
    pub residual: PolyQi,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Split {
    Full(SplitForm),
    Partial(UnsplitReport),
}

impl Split {
    pub fn full(self) -> Result<SplitForm> {
        match self {
            Split::Full(s) => Ok(s),
            Split::Partial(r) => Err(Error::Unsplittable { residual: r.residual.fmt_var("v") }),
        }
    }
}

/// Roots found in `f` and the monic root-free cofactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootsOutcome {
    pub roots: RootMultiset,
    pub residual: PolyQi,
}

pub(crate) fn add_root(table: &mut RootMultiset, z: GaussianRational, e: i64) {
    if e == 0 {
        return;
    }
    match table.entry(z) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += e;
            if *o.get() == 0 {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(e);
        }
    }
}

impl SplitForm {
    pub fn unit_only(unit: GaussianRational) -> Self {
        SplitForm { unit, t_exp: 0, roots: RootMultiset::new() }
    }

    pub fn new(unit: GaussianRational, t_exp: i64, roots: impl IntoIterator<Item = (GaussianRational, i64)>) -> Self {
        let mut table = RootMultiset::new();
        for (z, e) in roots {
            add_root(&mut table, z, e);
        }
        SplitForm { unit, t_exp, roots: table }
    }

    /// Conjugates the unit and every root; exponents and `t_exp` are kept.
    pub fn conj(&self) -> Self {
        SplitForm {
            unit: self.unit.conj(),
            t_exp: self.t_exp,
            roots: self.roots.iter().map(|(z, e)| (z.conj(), *e)).collect(),
        }
    }

    pub fn mul(&self, o: &SplitForm) -> SplitForm {
        let mut roots = self.roots.clone();
        for (z, e) in &o.roots {
            add_root(&mut roots, z.clone(), *e);
        }
        SplitForm { unit: &self.unit * &o.unit, t_exp: self.t_exp + o.t_exp, roots }
    }

    pub fn inv(&self) -> SplitForm {
        SplitForm {
            unit: self.unit.inv().expect("split unit is nonzero"),
            t_exp: -self.t_exp,
            roots: self.roots.iter().map(|(z, e)| (z.clone(), -e)).collect(),
        }
    }

    /// Folds a root at 0 into `t_exp`.
    pub fn absorb_zero_root(mut self) -> SplitForm {
        if let Some(e) = self.roots.remove(&GaussianRational::zero()) {
            self.t_exp += e;
        }
        self
    }

    /// Total root count with multiplicity (plus `t_exp`): the degree for polynomials.
    pub fn degree(&self) -> i64 {
        self.t_exp + self.roots.values().sum::<i64>()
    }

    pub fn assemble(&self) -> RatFuncQi {
        assemble(self)
    }

    /// The polynomial value, when no exponent is negative.
    pub fn assemble_poly(&self) -> Option<PolyQi> {
        if self.t_exp < 0 || self.roots.values().any(|&e| e < 0) {
            return None;
        }
        let mut p = PolyQi::constant(self.unit.clone()).shift(self.t_exp as usize);
        for (z, e) in &self.roots {
            p = &p * &PolyQi::linear(z).pow(*e as u32);
        }
        Some(p)
    }

    /// The Laurent value, when every root exponent is nonnegative.
    pub fn assemble_laurent(&self) -> Option<LaurentQi> {
        if self.roots.values().any(|&e| e < 0) {
            return None;
        }
        let mut p = PolyQi::constant(self.unit.clone());
        for (z, e) in &self.roots {
            p = &p * &PolyQi::linear(z).pow(*e as u32);
        }
        LaurentQi::new(self.t_exp, p).ok()
    }

    pub fn to_json(&self) -> SplitFormJson {
        SplitFormJson {
            unit: self.unit.to_string(),
            t_exp: self.t_exp,
            roots: self.roots.iter().map(|(z, e)| RootJson { z: z.to_string(), e: *e }).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RootJson {
    pub z: String,
    pub e: i64,
}

/// JSON shape `{"unit": "...", "t_exp": n, "roots": [{"z": "...", "e": k}]}`.
#[derive(Debug, Clone, Serialize)]
pub struct SplitFormJson {
    pub unit: String,
    pub t_exp: i64,
    pub roots: Vec<RootJson>,
}

/// Exact product; negative exponents land in the denominator.
pub fn assemble(s: &SplitForm) -> RatFuncQi {
    let mut num = PolyQi::constant(s.unit.clone());
    let mut den = PolyQi::one();
    if s.t_exp >= 0 {
        num = num.shift(s.t_exp as usize);
    } else {
        den = den.shift((-s.t_exp) as usize);
    }
    for (z, e) in &s.roots {
        let lin = PolyQi::linear(z).pow(e.unsigned_abs() as u32);
        if *e > 0 {
            num = &num * &lin;
        } else {
            den = &den * &lin;
        }
    }
    RatFuncQi::new(num, den).expect("nonzero denominator")
}

fn to_gaussian_integers(f: &PolyQi) -> Vec<GaussianInteger> {
    let l = f.coeffs().iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom_lcm()));
    let lr = Rational::from_integer(l);
    let ints: Vec<GaussianInteger> = f
        .coeffs()
        .iter()
        .map(|c| {
            let s = c.scale(&lr);
            GaussianInteger::new(s.re.to_integer(), s.im.to_integer())
        })
        .collect();
    let content = ints.iter().fold(GaussianInteger::zero(), |g, c| g.gcd(c));
    ints.into_iter().map(|c| c.div_exact(&content).expect("content divides")).collect()
}

fn eval_int(coeffs: &[GaussianInteger], m: &GaussianInteger) -> GaussianInteger {
    let mut acc = GaussianInteger::zero();
    for c in coeffs.iter().rev() {
        let t = acc.mul(m);
        acc = GaussianInteger { a: t.a + &c.a, b: t.b + &c.b };
    }
    acc
}

fn divides(d: &GaussianInteger, n: &GaussianInteger) -> bool {
    if d.is_zero() {
        return n.is_zero();
    }
    n.div_exact(d).is_some()
}

/// Candidate roots `u p / q` for a content-free Z\[i\] polynomial with
/// nonzero constant term.
fn candidates(coeffs: &[GaussianInteger]) -> Result<Vec<GaussianRational>> {
    let trail = &coeffs[0];
    let lead = coeffs.last().unwrap();
    let ps = factor_gaussian(trail)?.divisors();
    let qs = factor_gaussian(lead)?.divisors();
    let f_one = eval_int(coeffs, &GaussianInteger::one());
    let f_minus = eval_int(coeffs, &GaussianInteger::new(-1, 0));
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for q in &qs {
        for p0 in &ps {
            if !p0.gcd(q).is_unit() {
                continue;
            }
            for u in GaussianInteger::units() {
                let p = p0.mul(&u);
                // (q*1 - p) | f(1)  and  (q*(-1) - p) | f(-1)
                let d1 = GaussianInteger { a: &q.a - &p.a, b: &q.b - &p.b };
                let d2 = GaussianInteger { a: -&q.a - &p.a, b: -&q.b - &p.b };
                if !divides(&d1, &f_one) || !divides(&d2, &f_minus) {
                    continue;
                }
                let z = p.to_rational().checked_div(&q.to_rational())?;
                if seen.insert(z.clone()) {
                    out.push(z);
                }
            }
        }
    }
    Ok(out)
}

/// All Q(i)-rational roots of `f` with multiplicity, and the monic cofactor.
pub fn find_roots(f: &PolyQi) -> Result<RootsOutcome> {
    if f.is_zero() {
        return Err(Error::ZeroInput("find_roots"));
    }
    let mut roots = RootMultiset::new();
    let low = f.low_order();
    if low > 0 {
        roots.insert(GaussianRational::zero(), low as i64);
    }
    let mut cur = f.unshift(low).monic();
    if cur.degree().unwrap_or(0) >= 2 {
        // same roots, smaller coefficients
        let g = gcd_monic(&cur, &cur.derivative())?;
        let squarefree = cur.div_exact(&g).expect("gcd divides");
        let ints = to_gaussian_integers(&squarefree);
        for z in candidates(&ints)? {
            if cur.degree().unwrap() < 2 {
                break;
            }
            if squarefree.certainly_not_root(&z) {
                continue;
            }
            let (k, rest) = cur.root_order(&z);
            if k > 0 {
                roots.insert(z, k as i64);
                cur = rest;
            }
        }
    }
    if cur.degree() == Some(1) {
        let z = -&cur.coeff(0);
        add_root(&mut roots, z, 1);
        cur = PolyQi::one();
    }
    Ok(RootsOutcome { roots, residual: cur })
}

/// Splits a nonzero polynomial; root 0 stays in the table.
pub fn split_poly(f: &PolyQi) -> Result<Split> {
    let unit = f.lead().ok_or(Error::ZeroInput("split"))?.clone();
    let out = find_roots(f)?;
    let split_part = SplitForm { unit, t_exp: 0, roots: out.roots };
    if out.residual.is_constant() {
        Ok(Split::Full(split_part))
    } else {
        Ok(Split::Partial(UnsplitReport { split_part, residual: out.residual }))
    }
}

/// Splits a Laurent polynomial; the power of `t` goes to `t_exp`.
pub fn split_laurent(f: &LaurentQi) -> Result<Split> {
    Ok(match split_poly(f.body())? {
        Split::Full(mut s) => {
            s.t_exp = f.order();
            Split::Full(s)
        }
        Split::Partial(mut r) => {
            r.split_part.t_exp = f.order();
            Split::Partial(r)
        }
    })
}

/// Splits numerator and denominator of a nonzero rational function.
///
/// With `laurent` set, a root at 0 is reported through `t_exp`.
pub fn split_ratfunc(f: &RatFuncQi, laurent: bool) -> Result<SplitForm> {
    if f.is_zero() {
        return Err(Error::ZeroInput("split"));
    }
    let n = split_poly(f.num())?.full()?;
    let d = split_poly(f.den())?.full()?;
    let s = n.mul(&d.inv());
    Ok(if laurent { s.absorb_zero_root() } else { s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::qi;

    fn i() -> GaussianRational {
        GaussianRational::i()
    }

    #[test]
    fn roots_of_x2_plus_1() {
        let out = find_roots(&PolyQi::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(out.roots, RootMultiset::from([(i(), 1), (-i(), 1)]));
        assert!(out.residual.is_one());
    }

    #[test]
    fn recovers_constructed_roots() {
        let z = qi(3, 5, 4, 5);
        let two = GaussianRational::from_int(2);
        let f = PolyQi::from_roots([&z, &z, &two]);
        let out = find_roots(&f).unwrap();
        assert_eq!(out.roots, RootMultiset::from([(z, 2), (two, 1)]));
    }

    #[test]
    fn sqrt_two_is_not_in_qi() {
        let f = PolyQi::from_ints(&[-2, 0, 1]);
        let out = find_roots(&f).unwrap();
        assert!(out.roots.is_empty());
        assert_eq!(out.residual, f);
        match split_poly(&f).unwrap() {
            Split::Partial(r) => assert_eq!(r.residual, f),
            Split::Full(_) => panic!("x^2-2 must not split"),
        }
    }

    #[test]
    fn zero_rejected() {
        assert!(find_roots(&PolyQi::zero()).is_err());
        assert!(split_poly(&PolyQi::zero()).is_err());
    }

    #[test]
    fn split_laurent_example() {
        // 2i t^-1 (t - i)
        let body = PolyQi::linear(&i()).scale(&GaussianRational::from_ints(0, 2));
        let l = LaurentQi::new(-1, body).unwrap();
        let s = split_laurent(&l).unwrap().full().unwrap();
        assert_eq!(s.unit, GaussianRational::from_ints(0, 2));
        assert_eq!(s.t_exp, -1);
        assert_eq!(s.roots, RootMultiset::from([(i(), 1)]));
    }

    #[test]
    fn split_cubic_with_double_root() {
        // x^3 - i x^2 + x - i = (x - i)(x^2 + 1) = (x - i)^2 (x + i)
        let f = PolyQi::new(vec![-i(), GaussianRational::one(), -i(), GaussianRational::one()]);
        let s = split_poly(&f).unwrap().full().unwrap();
        assert_eq!(s.unit, GaussianRational::one());
        assert_eq!(s.roots, RootMultiset::from([(i(), 2), (-i(), 1)]));
        assert_eq!(s.assemble_poly().unwrap(), f);
    }

    #[test]
    fn assemble_examples() {
        let s = SplitForm::new(GaussianRational::one(), 0, [(i(), 1), (-i(), 1)]);
        assert_eq!(s.assemble_poly().unwrap(), PolyQi::from_ints(&[1, 0, 1]));
        let s = SplitForm::new(GaussianRational::one(), 1, []);
        assert_eq!(s.assemble_laurent().unwrap(), LaurentQi::t_pow(1));
        let s = SplitForm::new(GaussianRational::one(), 0, [(i(), -1), (GaussianRational::from_ints(0, 2), 1)]);
        let expected =
            RatFuncQi::new(PolyQi::linear(&GaussianRational::from_ints(0, 2)), PolyQi::linear(&i())).unwrap();
        assert_eq!(assemble(&s), expected);
    }

    #[test]
    fn zero_root_absorbed_in_laurent_mode() {
        let f = RatFuncQi::from_poly(PolyQi::from_ints(&[0, 0, 1, 1]));
        let s = split_ratfunc(&f, true).unwrap();
        assert_eq!(s.t_exp, 2);
        assert_eq!(s.roots, RootMultiset::from([(GaussianRational::from_int(-1), 1)]));
        let s = split_ratfunc(&f, false).unwrap();
        assert_eq!(s.t_exp, 0);
        assert_eq!(s.roots.get(&GaussianRational::zero()), Some(&2));
    }

    #[test]
    fn json_shape() {
        let s = SplitForm::new(GaussianRational::from_ints(0, 2), -1, [(i(), 1)]);
        let j = serde_json::to_string(&s.to_json()).unwrap();
        assert_eq!(j, r#"{"unit":"2*i","t_exp":-1,"roots":[{"z":"i","e":1}]}"#);
    }
}
