use crate::error::{Error, Result};
use crate::exactnum::{CircleLocation, GaussianRational, HalfPlane};
use crate::polyalg::{gcd_monic, PolyQi, RatFuncQi};
use crate::ringctx::{strip_points, RingContext};
use crate::splitter::{split_ratfunc, RootMultiset};

use super::{antipodal_partner, circle_partner, in_antipodal_region};

/// `f = real_part * delta_part`, `real_part` fixed by `sigma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarFactorization {
    pub real_part: RatFuncQi,
    pub delta_part: RatFuncQi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorMethod {
    /// `gcd(f1, f2)` of the sigma parts; needs no splitting.
    Gcd,
    /// Match roots with their sigma partners after splitting.
    Pairing,
}

/// Canonical member of a `B* x| Z/2` orbit of an irreducible element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRepresentative {
    pub root: GaussianRational,
    /// The input's root was replaced by its sigma partner.
    pub conjugated: bool,
}

impl OrbitRepresentative {
    /// The monic representative `v - root`.
    pub fn element(&self) -> RatFuncQi {
        RatFuncQi::linear(&self.root)
    }
}

fn numerator_body(ctx: &RingContext, f: &RatFuncQi) -> PolyQi {
    let p = f.num();
    match ctx {
        RingContext::AffineLine { inverted } => strip_points(p, inverted),
        _ if ctx.is_laurent() => p.unshift(p.low_order()),
        _ => p.clone(),
    }
}

/// Monic gcd of two real parts, either of which may vanish.
fn gcd_parts(b1: &PolyQi, b2: &PolyQi) -> Result<PolyQi> {
    if b1.is_zero() {
        Ok(b2.monic())
    } else if b2.is_zero() {
        Ok(b1.monic())
    } else {
        gcd_monic(b1, b2)
    }
}

/// Whether `f` in `B'` has no real non-unit divisor.
pub fn delta_membership(ctx: &RingContext, f: &RatFuncQi) -> Result<bool> {
    ctx.check_ring_domain(f)?;
    match ctx {
        RingContext::AffineLine { .. } | RingContext::CuspCubic => {
            let parts = numerator_body(ctx, f).real_imag_split();
            Ok(gcd_parts(&parts.f1, &parts.f2)?.is_one())
        }
        RingContext::PrimeLocal { point } => Ok(!(f.ord_at(point) > 0 && f.ord_at(&point.conj()) > 0)),
        RingContext::ImaginaryCircleForm => {
            let parts = ctx.fixed_decomposition(f);
            let b1 = numerator_body(ctx, &parts.f1);
            let b2 = numerator_body(ctx, &parts.f2);
            Ok(gcd_parts(&b1, &b2)?.is_one())
        }
        RingContext::CircleForm => {
            let s = split_ratfunc(f, true)?;
            let mut boundary = 0;
            for (z, e) in &s.roots {
                match z.circle_location() {
                    CircleLocation::On => boundary += e,
                    _ => {
                        if s.roots.contains_key(&circle_partner(z)) {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(boundary <= 1)
        }
        RingContext::ProjectiveLine | RingContext::ProjectiveConic => Ok(true),
    }
}

/// Polar factorization, by gcd where the fixed ring is factorial and by
/// root pairing on the circle.
pub fn polar_factorize(ctx: &RingContext, f: &RatFuncQi) -> Result<PolarFactorization> {
    let method = match ctx {
        RingContext::CircleForm => FactorMethod::Pairing,
        _ => FactorMethod::Gcd,
    };
    polar_factorize_with(ctx, f, method)
}

pub fn polar_factorize_with(ctx: &RingContext, f: &RatFuncQi, method: FactorMethod) -> Result<PolarFactorization> {
    ctx.check_ring_domain(f)?;
    let core = match (ctx, method) {
        (RingContext::CuspCubic, _) => {
            return Err(Error::Unsupported("polar factorization in the cusp subalgebra".into()));
        }
        (RingContext::ProjectiveLine | RingContext::ProjectiveConic, _) => PolyQi::one(),
        (RingContext::CircleForm, FactorMethod::Gcd) => {
            return Err(Error::Unsupported("gcd factorization on the circle; its fixed ring is not factorial".into()));
        }
        (RingContext::PrimeLocal { point }, _) => {
            let m = f.ord_at(point).min(f.ord_at(&point.conj())).max(0);
            PolyQi::from_roots([point, &point.conj()]).pow(m as u32)
        }
        (RingContext::AffineLine { .. }, FactorMethod::Gcd) => {
            let parts = numerator_body(ctx, f).real_imag_split();
            gcd_parts(&parts.f1, &parts.f2)?
        }
        (RingContext::ImaginaryCircleForm, FactorMethod::Gcd) => {
            let parts = ctx.fixed_decomposition(f);
            let b1 = numerator_body(ctx, &parts.f1);
            gcd_parts(&b1, &numerator_body(ctx, &parts.f2))?
        }
        (_, FactorMethod::Pairing) => paired_core(ctx, f)?,
    };
    let core = RatFuncQi::from_poly(core);
    // make the common factor sigma-fixed by a unit
    let q = core.checked_div(&ctx.apply_sigma(&core))?;
    let u =
        ctx.unit_solve(&q).ok_or_else(|| Error::Domain(format!("common factor {} has no fixed associate", core)))?;
    let real_part = &core * &u;
    let delta_part = f.checked_div(&real_part)?;
    Ok(PolarFactorization { real_part, delta_part })
}

/// Product of the matched root pairs of the numerator.
fn paired_core(ctx: &RingContext, f: &RatFuncQi) -> Result<PolyQi> {
    let body = RatFuncQi::from_poly(numerator_body(ctx, f));
    let roots = split_ratfunc(&body, ctx.is_laurent())?.roots;
    let mut core = PolyQi::one();
    let mut take = |z: &GaussianRational, m: i64| {
        if m > 0 {
            core = &core * &PolyQi::linear(z).pow(m as u32);
        }
    };
    let mut boundary: Vec<(GaussianRational, i64)> = Vec::new();
    for (z, e) in &roots {
        let partner = match ctx {
            RingContext::CircleForm => {
                if z.circle_location() == CircleLocation::On {
                    boundary.push((z.clone(), *e));
                    continue;
                }
                circle_partner(z)
            }
            RingContext::ImaginaryCircleForm => antipodal_partner(z),
            RingContext::AffineLine { .. } => {
                if z.is_real() {
                    take(z, *e);
                    continue;
                }
                z.conj()
            }
            _ => return Err(Error::Unsupported(format!("pairing factorization in {}", ctx.tag()))),
        };
        take(z, (*e).min(partner_count(&roots, &partner)));
    }
    // circle roots pair with each other in any combination
    let total: i64 = boundary.iter().map(|(_, e)| e).sum();
    let mut budget = total - total % 2;
    for (z, e) in &boundary {
        let m = (*e).min(budget);
        take(z, m);
        budget -= m;
    }
    Ok(core)
}

fn partner_count(roots: &RootMultiset, z: &GaussianRational) -> i64 {
    roots.get(z).copied().unwrap_or(0)
}

/// Canonical orbit representative of an irreducible element of `Delta(B)`.
pub fn orbit_normalize(ctx: &RingContext, f: &RatFuncQi) -> Result<OrbitRepresentative> {
    ctx.check_ring_domain(f)?;
    let not_irreducible = || Error::Domain(format!("{} is not an irreducible non-unit", f.fmt_var(ctx.var_name())));
    if let RingContext::PrimeLocal { point } = ctx {
        let (a, b) = (f.ord_at(point), f.ord_at(&point.conj()));
        return match (a, b) {
            (1, 0) => Ok(OrbitRepresentative { root: point.clone(), conjugated: false }),
            (0, 1) => Ok(OrbitRepresentative { root: point.clone(), conjugated: true }),
            _ => Err(not_irreducible()),
        };
    }
    if matches!(ctx, RingContext::ProjectiveLine | RingContext::ProjectiveConic | RingContext::CuspCubic) {
        return Err(Error::Unsupported(format!("orbit representatives in {}", ctx.tag())));
    }
    let body = RatFuncQi::from_poly(numerator_body(ctx, f));
    let roots = split_ratfunc(&body, ctx.is_laurent())?.roots;
    let mut it = roots.iter();
    let (z, e) = match (it.next(), it.next()) {
        (Some((z, 1)), None) => (z.clone(), 1),
        _ => return Err(not_irreducible()),
    };
    debug_assert_eq!(e, 1);
    let (root, conjugated) = match ctx {
        RingContext::AffineLine { .. } => match z.half_plane_location() {
            HalfPlane::Upper => (z, false),
            HalfPlane::Lower => (z.conj(), true),
            HalfPlane::Real => return Err(Error::Domain(format!("{} has a real divisor", f.fmt_var("x")))),
        },
        RingContext::CircleForm => match z.circle_location() {
            CircleLocation::Outside => (circle_partner(&z), true),
            _ => (z, false),
        },
        RingContext::ImaginaryCircleForm => {
            if in_antipodal_region(&z) {
                (z, false)
            } else {
                (antipodal_partner(&z), true)
            }
        }
        _ => unreachable!("excluded above"),
    };
    Ok(OrbitRepresentative { root, conjugated })
}
