//! The catalog of ring contexts and their conjugations.
//!
//! Every context fixes a complex coordinate ring `B` (or the degree-zero
//! field of a projective curve), a conjugation `sigma` acting on it, and the
//! unit group `B*`. Values are stored as [`RatFuncQi`] in the context
//! variable (`x` for line-like rings, `t` for the Laurent and conic rings).
//!
//! [`RingContext::triviality_oracle`] decides `f in B* K*` directly from the
//! equation `sigma(f)/f = sigma(u)/u` and never looks at class normal forms.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{hilbert90, GaussianRational, HalfPlane, Rational};
use crate::polyalg::{PolyQi, RatFuncQi, RealImagPair};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum RingContext {
    /// `S^{-1} C[x]` with `S` generated by `x - p` over the inverted points;
    /// `sigma` conjugates coefficients and fixes `x`.
    AffineLine { inverted: Vec<GaussianRational> },
    /// `C[x]` localized away from `(x - z0)(x - conj z0)`, `z0` in the upper half plane.
    PrimeLocal { point: GaussianRational },
    /// `C[t, 1/t]` with `sigma(t) = 1/t`; fixed ring is the circle.
    CircleForm,
    /// `C[t, 1/t]` with `sigma(t) = -1/t`; fixed ring is `x^2 + y^2 + 1 = 0`.
    ImaginaryCircleForm,
    /// Degree-zero functions of `C(x)`; `B0* = C*`.
    ProjectiveLine,
    /// `L0 = C(t)`, `t = (x1 + i x2)/x0`, `sigma(t) = -1/t`; `B0* = C*`.
    ProjectiveConic,
    /// `T = C[x^2, x^3]` inside `C[x]`; `T* = C*`.
    CuspCubic,
}

/// Defining relation of a two-generator presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    /// `X * Y = c`
    Product(Rational),
    /// `X^2 + Y^2 = c`
    SumOfSquares(Rational),
}

impl Relation {
    pub fn lhs(&self, x: &RatFuncQi, y: &RatFuncQi) -> RatFuncQi {
        match self {
            Relation::Product(_) => x * y,
            Relation::SumOfSquares(_) => &(x * x) + &(y * y),
        }
    }

    pub fn constant(&self) -> &Rational {
        match self {
            Relation::Product(c) | Relation::SumOfSquares(c) => c,
        }
    }

    pub fn holds(&self, x: &RatFuncQi, y: &RatFuncQi) -> bool {
        self.lhs(x, y) == RatFuncQi::constant(GaussianRational::real(self.constant().clone()))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Product(c) => write!(f, "X*Y = {}", c),
            Relation::SumOfSquares(c) => write!(f, "X^2+Y^2 = {}", c),
        }
    }
}

/// Generators of the fixed ring over R with their relation, all checked.
#[derive(Debug, Clone)]
pub struct FixedRingPresentation {
    pub generators: Vec<(String, RatFuncQi)>,
    pub relation: Option<Relation>,
    /// The unnormalized pair `t + sigma(t), i (t - sigma(t))` and the value
    /// of `X^2 + Y^2` on it, where applicable.
    pub unhalved: Option<(RatFuncQi, RatFuncQi, Rational)>,
    pub relation_holds: bool,
    pub generators_fixed: bool,
    /// The context variable is recovered from the generators over C.
    pub generates: bool,
}

impl FixedRingPresentation {
    pub fn verified(&self) -> bool {
        self.relation_holds && self.generators_fixed && self.generates
    }
}

impl RingContext {
    /// `S^{-1} C[x]`; the point set must be closed under conjugation.
    pub fn affine_line(points: impl IntoIterator<Item = GaussianRational>) -> Result<Self> {
        let mut inverted: Vec<GaussianRational> = points.into_iter().collect();
        inverted.sort();
        inverted.dedup();
        for p in &inverted {
            if inverted.binary_search(&p.conj()).is_err() {
                return Err(Error::Domain(format!(
                    "inverted set must be closed under conjugation; missing {}",
                    p.conj()
                )));
            }
        }
        Ok(RingContext::AffineLine { inverted })
    }

    pub fn line() -> Self {
        RingContext::AffineLine { inverted: Vec::new() }
    }

    pub fn prime_local(point: GaussianRational) -> Result<Self> {
        if point.half_plane_location() != HalfPlane::Upper {
            return Err(Error::Domain(format!("prime-local point {} must lie in the upper half plane", point)));
        }
        Ok(RingContext::PrimeLocal { point })
    }

    pub fn var_name(&self) -> &'static str {
        match self {
            RingContext::CircleForm | RingContext::ImaginaryCircleForm | RingContext::ProjectiveConic => "t",
            _ => "x",
        }
    }

    /// Contexts where a root at 0 is tracked as a power of `t`.
    pub fn is_laurent(&self) -> bool {
        matches!(self, RingContext::CircleForm | RingContext::ImaginaryCircleForm | RingContext::ProjectiveConic)
    }

    /// `s` such that `sigma(t) = s / t`, or `None` when `sigma` fixes the variable.
    pub fn inversion_scalar(&self) -> Option<GaussianRational> {
        match self {
            RingContext::CircleForm => Some(GaussianRational::one()),
            RingContext::ImaginaryCircleForm | RingContext::ProjectiveConic => Some(GaussianRational::from_int(-1)),
            _ => None,
        }
    }

    /// The ring DSL tag naming this context.
    pub fn tag(&self) -> String {
        match self {
            RingContext::AffineLine { inverted } if inverted.is_empty() => "line".to_string(),
            RingContext::AffineLine { inverted } => {
                let pts: Vec<String> = inverted.iter().map(|p| p.to_string()).collect();
                format!("line[inv={}]", pts.join(","))
            }
            RingContext::PrimeLocal { point } => format!("prime-local[{}]", point),
            RingContext::CircleForm => "circle".to_string(),
            RingContext::ImaginaryCircleForm => "icircle".to_string(),
            RingContext::ProjectiveLine => "proj-line".to_string(),
            RingContext::ProjectiveConic => "conic".to_string(),
            RingContext::CuspCubic => "cusp".to_string(),
        }
    }

    pub fn apply_sigma(&self, f: &RatFuncQi) -> RatFuncQi {
        let c = f.conj();
        match self.inversion_scalar() {
            Some(s) => c.compose_inversion(&s),
            None => c,
        }
    }

    pub fn is_sigma_fixed(&self, f: &RatFuncQi) -> bool {
        self.apply_sigma(f) == *f
    }

    /// `f = f1 + i f2` with `f1 = (f + sigma f)/2`, `f2 = -i (f - sigma f)/2`.
    pub fn fixed_decomposition(&self, f: &RatFuncQi) -> RealImagPair<RatFuncQi> {
        let s = self.apply_sigma(f);
        let half = GaussianRational::from_fracs(1, 2, 0, 1);
        let neg_half_i = GaussianRational::from_fracs(0, 1, -1, 2);
        RealImagPair { f1: (f + &s).scale(&half), f2: (f - &s).scale(&neg_half_i) }
    }

    /// Membership in the fraction field the polar group is a quotient of.
    pub fn check_fraction_domain(&self, f: &RatFuncQi) -> Result<()> {
        if f.is_zero() {
            return Err(Error::Domain("zero has no class".into()));
        }
        if *self == RingContext::ProjectiveLine && f.degree() != Some(0) {
            return Err(Error::Domain(format!(
                "proj-line values must have degree 0, got degree {}",
                f.degree().unwrap()
            )));
        }
        Ok(())
    }

    /// Membership in the nonzero elements `B'` of the coordinate ring.
    pub fn check_ring_domain(&self, f: &RatFuncQi) -> Result<()> {
        self.check_fraction_domain(f)?;
        let ok = match self {
            RingContext::AffineLine { inverted } => strip_points(f.den(), inverted).is_constant(),
            RingContext::PrimeLocal { point } => {
                f.den().root_order(point).0 == 0 && f.den().root_order(&point.conj()).0 == 0
            }
            RingContext::CircleForm | RingContext::ImaginaryCircleForm => f.as_laurent().is_some(),
            RingContext::ProjectiveLine | RingContext::ProjectiveConic => f.as_constant().is_some(),
            RingContext::CuspCubic => f.as_poly().is_some_and(|p| p.coeff(1).is_zero()),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{} is not in the coordinate ring of {}",
                f.fmt_var(self.var_name()),
                self.tag()
            )))
        }
    }

    pub fn is_unit(&self, f: &RatFuncQi) -> bool {
        if f.is_zero() {
            return false;
        }
        match self {
            RingContext::AffineLine { inverted } => {
                strip_points(f.num(), inverted).is_constant() && strip_points(f.den(), inverted).is_constant()
            }
            RingContext::PrimeLocal { point } => f.ord_at(point) == 0 && f.ord_at(&point.conj()) == 0,
            RingContext::CircleForm | RingContext::ImaginaryCircleForm => f.as_monomial().is_some(),
            _ => f.as_constant().is_some(),
        }
    }

    /// A unit `u` with `sigma(u)/u = q`, when one exists.
    pub fn unit_solve(&self, q: &RatFuncQi) -> Option<RatFuncQi> {
        if q.is_zero() {
            return None;
        }
        match self {
            RingContext::AffineLine { inverted } => solve_line_unit(q, inverted),
            RingContext::PrimeLocal { point } => self.solve_prime_local_unit(q, point),
            RingContext::CircleForm | RingContext::ImaginaryCircleForm => {
                let (w, k) = q.as_monomial()?;
                if k % 2 != 0 || !w.norm_sq().is_one() {
                    return None;
                }
                let m = -k / 2;
                let sign = if *self == RingContext::ImaginaryCircleForm && m % 2 != 0 {
                    GaussianRational::from_int(-1)
                } else {
                    GaussianRational::one()
                };
                let c = hilbert90(&(&w * &sign)).ok()?;
                Some(RatFuncQi::var_pow(m).scale(&c))
            }
            RingContext::ProjectiveLine | RingContext::ProjectiveConic | RingContext::CuspCubic => {
                let w = q.as_constant()?;
                hilbert90(&w).ok().map(RatFuncQi::constant)
            }
        }
    }

    fn solve_prime_local_unit(&self, q: &RatFuncQi, point: &GaussianRational) -> Option<RatFuncQi> {
        let sq = self.apply_sigma(q);
        if !(q * &sq).is_one() || q.ord_at(point) != 0 {
            return None;
        }
        // u = c + conj(c) sigma(q) satisfies sigma(u) = q u; pick c so u is a unit
        [GaussianRational::one(), GaussianRational::i(), GaussianRational::from_ints(1, 1)]
            .into_iter()
            .map(|c| &RatFuncQi::constant(c.clone()) + &sq.scale(&c.conj()))
            .find(|u| self.is_unit(u))
    }

    /// Decides `q in { sigma(u)/u : u in B* }`.
    pub fn unit_ratio_test(&self, q: &RatFuncQi) -> bool {
        self.unit_solve(q).is_some()
    }

    /// Decides whether `f` lies in `B* K*`, i.e. whether its class is trivial.
    pub fn triviality_oracle(&self, f: &RatFuncQi) -> Result<bool> {
        self.check_fraction_domain(f)?;
        if let RingContext::PrimeLocal { point } = self {
            return Ok(f.ord_at(point) == f.ord_at(&point.conj()));
        }
        let q = self.apply_sigma(f).checked_div(f)?;
        Ok(self.unit_ratio_test(&q))
    }

    /// Decides `f in M = B* A'` for `f` in `B'`.
    pub fn m_membership(&self, f: &RatFuncQi) -> Result<bool> {
        self.check_ring_domain(f)?;
        self.triviality_oracle(f)
    }

    /// Writes a trivial-class `f` as `u * k` with `u` a unit and `k` fixed.
    pub fn trivial_decomposition(&self, f: &RatFuncQi) -> Result<Option<(RatFuncQi, RatFuncQi)>> {
        self.check_fraction_domain(f)?;
        let q = self.apply_sigma(f).checked_div(f)?;
        Ok(self.unit_solve(&q).map(|u| {
            let k = f.checked_div(&u).expect("unit is nonzero");
            (u, k)
        }))
    }

    /// Presentation of the fixed ring for the line, the punctured line and
    /// the two circle forms.
    pub fn fixed_ring_generators(&self) -> Result<FixedRingPresentation> {
        let var = RatFuncQi::var();
        let pres = match self {
            RingContext::AffineLine { inverted } if inverted.is_empty() => FixedRingPresentation {
                generators: vec![("X".into(), var.clone())],
                relation: None,
                unhalved: None,
                relation_holds: true,
                generators_fixed: self.is_sigma_fixed(&var),
                generates: true,
            },
            RingContext::AffineLine { inverted } if inverted.len() == 1 && inverted[0].is_zero() => {
                let x = var.clone();
                let y = RatFuncQi::var_pow(-1);
                let rel = Relation::Product(Rational::one());
                FixedRingPresentation {
                    relation_holds: rel.holds(&x, &y),
                    generators_fixed: self.is_sigma_fixed(&x) && self.is_sigma_fixed(&y),
                    generates: x == var && y == RatFuncQi::var_pow(-1),
                    generators: vec![("X".into(), x), ("Y".into(), y)],
                    relation: Some(rel),
                    unhalved: None,
                }
            }
            RingContext::CircleForm | RingContext::ImaginaryCircleForm => {
                let pair = self.fixed_decomposition(&var);
                let (x, y) = (pair.f1, pair.f2);
                let c = if *self == RingContext::CircleForm { 1 } else { -1 };
                let rel = Relation::SumOfSquares(Rational::from_integer(c.into()));
                let s = self.apply_sigma(&var);
                let ux2 = &var + &s;
                let uy2 = (&var - &s).scale(&GaussianRational::i());
                let rhs = Relation::SumOfSquares(Rational::zero()).lhs(&ux2, &uy2).as_constant().map(|c| c.re);
                FixedRingPresentation {
                    relation_holds: rel.holds(&x, &y),
                    generators_fixed: self.is_sigma_fixed(&x) && self.is_sigma_fixed(&y),
                    generates: &x + &y.scale(&GaussianRational::i()) == var,
                    generators: vec![("X".into(), x), ("Y".into(), y)],
                    relation: Some(rel),
                    unhalved: rhs.map(|r| (ux2, uy2, r)),
                }
            }
            _ => return Err(Error::Unsupported(format!("fixed-ring presentation for {}", self.tag()))),
        };
        Ok(pres)
    }
}

/// Divides out every factor `v - p` for `p` in `points`.
pub(crate) fn strip_points(f: &PolyQi, points: &[GaussianRational]) -> PolyQi {
    let mut cur = f.clone();
    for p in points {
        cur = cur.root_order(p).1;
    }
    cur
}

fn solve_line_unit(q: &RatFuncQi, inverted: &[GaussianRational]) -> Option<RatFuncQi> {
    let mut exps = Vec::with_capacity(inverted.len());
    for p in inverted {
        exps.push(q.ord_at(p));
    }
    let num = strip_points(q.num(), inverted);
    let den = strip_points(q.den(), inverted);
    if !num.is_constant() || !den.is_constant() {
        return None;
    }
    let w = num.coeff(0).checked_div(&den.coeff(0)).ok()?;
    if !w.norm_sq().is_one() {
        return None;
    }
    let mut u = RatFuncQi::constant(hilbert90(&w).ok()?);
    for (p, d) in inverted.iter().zip(&exps) {
        match p.half_plane_location() {
            HalfPlane::Real => {
                if *d != 0 {
                    return None;
                }
            }
            HalfPlane::Upper => {
                let idx = inverted.binary_search(&p.conj()).ok()?;
                if exps[idx] != -*d {
                    return None;
                }
                // e_p = 0, e_pbar = d
                let lin = RatFuncQi::linear(&p.conj()).pow(*d).ok()?;
                u = &u * &lin;
            }
            HalfPlane::Lower => {}
        }
    }
    Some(u)
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingContext({})", self.tag())
    }
}
