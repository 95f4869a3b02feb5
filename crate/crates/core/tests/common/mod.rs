#![allow(dead_code)]

use polargroup::exactnum::{qi, GaussianRational};
use polargroup::polar::{antipodal_partner, circle_partner};
use polargroup::polyalg::{PolyQi, RatFuncQi};
use polargroup::ringctx::RingContext;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn contexts() -> Vec<RingContext> {
    vec![
        RingContext::line(),
        RingContext::affine_line([GaussianRational::zero()]).unwrap(),
        RingContext::affine_line([GaussianRational::i(), -GaussianRational::i()]).unwrap(),
        RingContext::prime_local(GaussianRational::i()).unwrap(),
        RingContext::prime_local(qi(1, 2, 2, 1)).unwrap(),
        RingContext::CircleForm,
        RingContext::ImaginaryCircleForm,
        RingContext::ProjectiveLine,
        RingContext::ProjectiveConic,
        RingContext::CuspCubic,
    ]
}

/// Small Gaussian rational, possibly zero.
pub fn point<R: Rng>(r: &mut R) -> GaussianRational {
    let den = [1, 1, 1, 2, 3];
    qi(r.gen_range(-3..=3), *den.choose(r).unwrap(), r.gen_range(-3..=3), *den.choose(r).unwrap())
}

pub fn nonzero_scalar<R: Rng>(r: &mut R) -> GaussianRational {
    loop {
        let z = point(r);
        if !z.is_zero() {
            return z;
        }
    }
}

/// `(m^2 - n^2 + 2mni) / (m^2 + n^2)`, a rational point of the unit circle.
pub fn pythagorean<R: Rng>(r: &mut R) -> GaussianRational {
    let m: i64 = r.gen_range(-6..=6);
    let n: i64 = r.gen_range(-6..=6);
    if m == 0 && n == 0 {
        return GaussianRational::one();
    }
    let d = m * m + n * n;
    qi(m * m - n * n, d, 2 * m * n, d)
}

/// A root chosen to exercise the special loci of `ctx`.
fn root_for<R: Rng>(ctx: &RingContext, prev: &[GaussianRational], r: &mut R) -> GaussianRational {
    let related = |r: &mut R, f: &dyn Fn(&GaussianRational) -> GaussianRational| -> Option<GaussianRational> {
        let z = prev.choose(r)?;
        Some(f(z))
    };
    let roll = r.gen_range(0..10);
    let special = match ctx {
        RingContext::AffineLine { inverted } => match roll {
            0..=1 => inverted.choose(r).cloned(),
            2..=3 => related(r, &|z| z.conj()),
            _ => None,
        },
        RingContext::PrimeLocal { point } => match roll {
            0..=1 => Some(point.clone()),
            2..=3 => Some(point.conj()),
            4 => related(r, &|z| z.conj()),
            _ => None,
        },
        RingContext::CircleForm => match roll {
            0..=2 => Some(pythagorean(r)),
            3..=4 => related(r, &|z| if z.is_zero() { z.clone() } else { circle_partner(z) }),
            _ => None,
        },
        RingContext::ImaginaryCircleForm | RingContext::ProjectiveConic => match roll {
            0..=2 => Some(pythagorean(r)),
            3..=4 => related(r, &|z| if z.is_zero() { z.clone() } else { antipodal_partner(z) }),
            _ => None,
        },
        _ => match roll {
            0..=2 => related(r, &|z| z.conj()),
            _ => None,
        },
    };
    special.unwrap_or_else(|| point(r))
}

/// Roots and exponents of a random element; no point appears twice.
pub fn divisor<R: Rng>(ctx: &RingContext, r: &mut R, max_roots: usize) -> Vec<(GaussianRational, i64)> {
    let n = r.gen_range(0..=max_roots);
    let mut out: Vec<(GaussianRational, i64)> = Vec::new();
    for _ in 0..n {
        let prev: Vec<GaussianRational> = out.iter().map(|(z, _)| z.clone()).collect();
        let z = root_for(ctx, &prev, r);
        if prev.contains(&z) {
            continue;
        }
        let e = *[-2, -1, -1, 1, 1, 1, 2].choose(r).unwrap();
        out.push((z, e));
    }
    out
}

pub fn assemble(unit: &GaussianRational, t_exp: i64, roots: &[(GaussianRational, i64)]) -> RatFuncQi {
    let mut f = RatFuncQi::constant(unit.clone());
    if t_exp != 0 {
        f = &f * &RatFuncQi::var_pow(t_exp);
    }
    for (z, e) in roots {
        f = &f * &RatFuncQi::linear(z).pow(*e).unwrap();
    }
    f
}

/// A random nonzero element of the fraction field of `ctx`.
pub fn element<R: Rng>(ctx: &RingContext, r: &mut R) -> RatFuncQi {
    element_sized(ctx, r, 4)
}

pub fn element_sized<R: Rng>(ctx: &RingContext, r: &mut R, max_roots: usize) -> RatFuncQi {
    let mut roots = divisor(ctx, r, max_roots);
    let t_exp = if ctx.is_laurent() { r.gen_range(-2..=2) } else { 0 };
    if *ctx == RingContext::ProjectiveLine {
        let deg: i64 = roots.iter().map(|(_, e)| e).sum();
        if deg != 0 {
            let w = loop {
                let w = point(r);
                if roots.iter().all(|(z, _)| *z != w) {
                    break w;
                }
            };
            roots.push((w, -deg));
        }
    }
    assemble(&nonzero_scalar(r), t_exp, &roots)
}

/// A random nonzero element of the ring `B` of `ctx` (no poles outside the units).
pub fn ring_element<R: Rng>(ctx: &RingContext, r: &mut R, max_roots: usize) -> RatFuncQi {
    let roots: Vec<(GaussianRational, i64)> = divisor(ctx, r, max_roots)
        .into_iter()
        .map(|(z, e)| {
            let pole_ok = match ctx {
                RingContext::AffineLine { inverted } => inverted.contains(&z),
                _ => false,
            };
            (z, if pole_ok { e } else { e.abs() })
        })
        .collect();
    let t_exp = if ctx.is_laurent() { r.gen_range(-2..=2) } else { 0 };
    assemble(&nonzero_scalar(r), t_exp, &roots)
}

/// Monic polynomial with the given roots.
pub fn poly_from_roots(roots: &[GaussianRational]) -> PolyQi {
    PolyQi::from_roots(roots)
}

/// Random polynomial with small Gaussian rational coefficients.
pub fn random_poly<R: Rng>(r: &mut R, max_deg: usize) -> PolyQi {
    let d = r.gen_range(0..=max_deg);
    PolyQi::new((0..=d).map(|_| point(r)).collect())
}
