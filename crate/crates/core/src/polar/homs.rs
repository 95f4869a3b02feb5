use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, HalfPlane};
use crate::polyalg::{gcd_monic, PolyQi, RatFuncQi};
use crate::ringctx::RingContext;
use crate::splitter::split_ratfunc;

use super::{class_of, Payload, PolarClass};

fn inverted_set(ctx: &RingContext) -> Result<&[GaussianRational]> {
    match ctx {
        RingContext::AffineLine { inverted } => Ok(inverted),
        _ => Err(Error::Unsupported(format!("localization from {}", ctx.tag()))),
    }
}

fn check_nested(small: &RingContext, large: &RingContext) -> Result<()> {
    let (s, l) = (inverted_set(small)?, inverted_set(large)?);
    if s.iter().all(|p| l.contains(p)) {
        Ok(())
    } else {
        Err(Error::ContextMismatch(small.tag(), large.tag()))
    }
}

/// `Pi(A) -> Pi(S^-1 A)`: forgets exponents at newly inverted points.
pub fn localization_map(a: &PolarClass, target: &RingContext) -> Result<PolarClass> {
    check_nested(a.ctx(), target)?;
    let inv = inverted_set(target)?;
    let table = a.free_table().into_iter().filter(|(z, _)| !inv.contains(z)).collect();
    PolarClass::from_payload(target, Payload::Line(table))
}

/// Section of [`localization_map`]: the class of the representative prime
/// to the inverted points.
pub fn localization_section(a: &PolarClass, target: &RingContext) -> Result<PolarClass> {
    check_nested(target, a.ctx())?;
    PolarClass::from_payload(target, Payload::Line(a.free_table()))
}

/// Projective classes viewed in the affine chart.
///
/// The projective line maps identically onto the line table. The conic
/// maps to the imaginary circle form, where `t` becomes a unit; its kernel
/// is generated by `[t]`.
pub fn projective_include(a: &PolarClass) -> Result<PolarClass> {
    match a.payload() {
        Payload::Line(t) if *a.ctx() == RingContext::ProjectiveLine => {
            PolarClass::from_payload(&RingContext::line(), Payload::Line(t.clone()))
        }
        Payload::Conic { free, .. } => {
            PolarClass::from_payload(&RingContext::ImaginaryCircleForm, Payload::ImaginaryCircle(free.clone()))
        }
        _ => Err(Error::Unsupported(format!("projective inclusion from {}", a.ctx().tag()))),
    }
}

/// Class of a cusp element in the polar group of the line.
pub fn subalgebra_embed(f: &RatFuncQi) -> Result<PolarClass> {
    RingContext::CuspCubic.check_ring_domain(f)?;
    class_of(&RingContext::line(), f)
}

/// No root `z` of `f` has `conj(z)` as a root as well.
pub fn delta_t_membership(f: &RatFuncQi) -> Result<bool> {
    RingContext::CuspCubic.check_ring_domain(f)?;
    let p = f.num();
    Ok(gcd_monic(p, &p.conj())?.is_one())
}

/// `sum 1/w` over the roots of a monic split `f` with `f(0) != 0`.
pub fn reciprocal_sum(f: &PolyQi) -> Result<GaussianRational> {
    if !f.is_monic() {
        return Err(Error::Domain(format!("{} is not monic", f.fmt_var("x"))));
    }
    if f.coeff(0).is_zero() {
        return Err(Error::Domain("f(0) must be nonzero".into()));
    }
    let s = split_ratfunc(&RatFuncQi::from_poly(f.clone()), false)?;
    let mut sum = GaussianRational::zero();
    for (z, e) in &s.roots {
        let r = z.inv().expect("nonzero root");
        sum = &sum + &r.scale(&crate::exactnum::Rational::from_integer((*e).into()));
    }
    Ok(sum)
}

/// Checks `f'(0) = 0` if and only if the reciprocal root sum vanishes.
pub fn reciprocal_sum_check(f: &PolyQi) -> Result<bool> {
    let sum = reciprocal_sum(f)?;
    Ok(f.coeff(1).is_zero() == sum.is_zero())
}

/// Residue field of `R[x]` at a maximal ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueField {
    Real,
    Complex,
}

impl ResidueField {
    /// The polar group of a field is trivial; this is its only element.
    pub fn trivial_class(&self) -> &'static str {
        "1"
    }
}

/// Reduction modulo a real maximal ideal `p`; the target group is trivial,
/// so the content is the check `f` not in `pB`.
pub fn prime_reduction(f: &RatFuncQi, p: &PolyQi) -> Result<ResidueField> {
    RingContext::line().check_ring_domain(f)?;
    let field = match p.degree() {
        Some(1) if p.is_monic() && p.is_real() => ResidueField::Real,
        Some(2) if p.is_monic() && p.is_real() => {
            let (b, c) = (p.coeff(1).re, p.coeff(0).re);
            let disc = &b * &b - c * crate::exactnum::Rational::from_integer(4.into());
            if disc >= num_traits::Zero::zero() {
                return Err(Error::Domain(format!("{} is reducible over R", p.fmt_var("x"))));
            }
            ResidueField::Complex
        }
        _ => {
            return Err(Error::Domain(format!(
                "{} is not a monic real irreducible of degree at most 2",
                p.fmt_var("x")
            )))
        }
    };
    if f.num().divmod(p)?.1.is_zero() {
        return Err(Error::Domain(format!("{} lies in the ideal of {}", f.fmt_var("x"), p.fmt_var("x"))));
    }
    Ok(field)
}

/// Upper half plane points inverted in `large` but not in `small`.
pub fn newly_inverted(small: &RingContext, large: &RingContext) -> Result<Vec<GaussianRational>> {
    check_nested(small, large)?;
    let s = inverted_set(small)?;
    Ok(inverted_set(large)?
        .iter()
        .filter(|p| p.half_plane_location() == HalfPlane::Upper && !s.contains(p))
        .cloned()
        .collect())
}
