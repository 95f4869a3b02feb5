//! Canonical normal forms for polar groups, Delta membership, polar
//! factorization and the natural maps between polar groups.
//!
//! A class is stored as exponents on a fixed set of generators chosen per
//! context:
//!
//! | context   | generators                                                    |
//! |-----------|---------------------------------------------------------------|
//! | line(S)   | `[x - z]`, `z` in the upper half plane, `z` not in `S`         |
//! | prime     | `[x - z0]`                                                    |
//! | circle    | `[t - z]`, `0 < |z| < 1`, plus the order-2 class `[t - 1]`     |
//! | icircle   | `[t - z]`, `0 < |z| < 1` or `z` on the upper unit half circle  |
//! | conic     | `[t]` and the icircle generators                              |
//! | proj-line | `[x - z]`, `z` in the upper half plane                        |
//! | cusp      | as the line                                                   |
//!
//! On the unit circle every `[t - z]` is the same class of order two, since
//! `(t - a)(t - b)` is a unit times a fixed element for any two circle points.

mod delta;
mod homs;
pub mod identities;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{CircleLocation, GaussianRational, HalfPlane};
use crate::polyalg::{gcd_monic, PolyQi, RatFuncQi};
use crate::ringctx::RingContext;
use crate::splitter::{add_root, split_ratfunc, RootMultiset};

pub use delta::{
    delta_membership, orbit_normalize, polar_factorize, polar_factorize_with, FactorMethod, OrbitRepresentative,
    PolarFactorization,
};
pub use homs::{
    delta_t_membership, localization_map, localization_section, newly_inverted, prime_reduction, projective_include,
    reciprocal_sum, reciprocal_sum_check, subalgebra_embed, ResidueField,
};

/// Exponent table on generators; never stores a zero.
pub type ClassTable = RootMultiset;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Payload {
    /// line, proj-line and cusp: exponents over upper half plane points.
    Line(ClassTable),
    /// `[x - z0]^e`
    PrimeLocal(i64),
    /// Free part over the open punctured disc, and the order-2 bit.
    Circle {
        free: ClassTable,
        torsion: bool,
    },
    ImaginaryCircle(ClassTable),
    /// `[t]^t0` times the icircle-style table.
    Conic {
        t0: i64,
        free: ClassTable,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolarClass {
    ctx: RingContext,
    payload: Payload,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClassOrder {
    One,
    Two,
    Infinite,
}

impl fmt::Display for ClassOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassOrder::One => "1",
            ClassOrder::Two => "2",
            ClassOrder::Infinite => "inf",
        })
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FreeEntryJson {
    pub z: String,
    pub e: i64,
}

/// `{"ctx": "...", "free": [...], "torsion": [...], "t0": k}`
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PolarClassJson {
    pub ctx: String,
    pub free: Vec<FreeEntryJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t0: Option<i64>,
}

fn table_json(t: &ClassTable) -> Vec<FreeEntryJson> {
    t.iter().map(|(z, e)| FreeEntryJson { z: z.to_string(), e: *e }).collect()
}

fn merge(a: &ClassTable, b: &ClassTable) -> ClassTable {
    let mut out = a.clone();
    for (z, e) in b {
        add_root(&mut out, z.clone(), *e);
    }
    out
}

fn scale_table(t: &ClassTable, n: i64) -> ClassTable {
    if n == 0 {
        return ClassTable::new();
    }
    t.iter().map(|(z, e)| (z.clone(), e * n)).collect()
}

/// Canonical region for the antipodal contexts: `|z| < 1`, or `|z| = 1`
/// with `Im z > 0`, or `z = 1`.
pub fn in_antipodal_region(z: &GaussianRational) -> bool {
    match z.circle_location() {
        CircleLocation::Inside => true,
        CircleLocation::Outside => false,
        CircleLocation::On => match z.half_plane_location() {
            HalfPlane::Upper => true,
            HalfPlane::Lower => false,
            HalfPlane::Real => z.re > num_traits::Zero::zero(),
        },
    }
}

/// Partner root under `sigma` in the circle context: `1/conj(z)`.
pub fn circle_partner(z: &GaussianRational) -> GaussianRational {
    z.conj().inv().expect("nonzero root")
}

/// Partner root when `sigma(t) = -1/t`: `-1/conj(z)`.
pub fn antipodal_partner(z: &GaussianRational) -> GaussianRational {
    -&circle_partner(z)
}

impl PolarClass {
    pub fn identity(ctx: &RingContext) -> Self {
        let payload = match ctx {
            RingContext::PrimeLocal { .. } => Payload::PrimeLocal(0),
            RingContext::CircleForm => Payload::Circle { free: ClassTable::new(), torsion: false },
            RingContext::ImaginaryCircleForm => Payload::ImaginaryCircle(ClassTable::new()),
            RingContext::ProjectiveConic => Payload::Conic { t0: 0, free: ClassTable::new() },
            _ => Payload::Line(ClassTable::new()),
        };
        PolarClass { ctx: ctx.clone(), payload }
    }

    /// Builds a class from raw payload data, validating the region predicates.
    pub fn from_payload(ctx: &RingContext, payload: Payload) -> Result<Self> {
        let bad = |z: &GaussianRational| Error::Domain(format!("{} is not a generator point for {}", z, ctx.tag()));
        let check = |t: &ClassTable, ok: &dyn Fn(&GaussianRational) -> bool| -> Result<()> {
            for (z, e) in t {
                if *e == 0 {
                    return Err(Error::Domain("zero exponent stored".into()));
                }
                if !ok(z) {
                    return Err(bad(z));
                }
            }
            Ok(())
        };
        match (ctx, &payload) {
            (RingContext::AffineLine { inverted }, Payload::Line(t)) => {
                check(t, &|z| z.half_plane_location() == HalfPlane::Upper && !inverted.contains(z))?
            }
            (RingContext::ProjectiveLine | RingContext::CuspCubic, Payload::Line(t)) => {
                check(t, &|z| z.half_plane_location() == HalfPlane::Upper)?
            }
            (RingContext::PrimeLocal { .. }, Payload::PrimeLocal(_)) => {}
            (RingContext::CircleForm, Payload::Circle { free, .. }) => {
                check(free, &|z| !z.is_zero() && z.circle_location() == CircleLocation::Inside)?
            }
            (RingContext::ImaginaryCircleForm, Payload::ImaginaryCircle(t))
            | (RingContext::ProjectiveConic, Payload::Conic { free: t, .. }) => {
                check(t, &|z| !z.is_zero() && in_antipodal_region(z))?
            }
            _ => return Err(Error::ContextMismatch(ctx.tag(), format!("{:?}", payload))),
        }
        Ok(PolarClass { ctx: ctx.clone(), payload })
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn is_identity(&self) -> bool {
        *self == PolarClass::identity(&self.ctx)
    }

    /// The free exponent table, including `[t]` at point 0 for the conic.
    pub fn free_table(&self) -> ClassTable {
        match &self.payload {
            Payload::Line(t) | Payload::ImaginaryCircle(t) | Payload::Circle { free: t, .. } => t.clone(),
            Payload::PrimeLocal(e) => match &self.ctx {
                RingContext::PrimeLocal { point } => {
                    let mut t = ClassTable::new();
                    add_root(&mut t, point.clone(), *e);
                    t
                }
                _ => unreachable!("payload matches context"),
            },
            Payload::Conic { t0, free } => {
                let mut t = free.clone();
                add_root(&mut t, GaussianRational::zero(), *t0);
                t
            }
        }
    }

    pub fn torsion(&self) -> bool {
        matches!(self.payload, Payload::Circle { torsion: true, .. })
    }

    fn same_ctx(&self, o: &PolarClass) -> Result<()> {
        if self.ctx != o.ctx {
            return Err(Error::ContextMismatch(self.ctx.tag(), o.ctx.tag()));
        }
        Ok(())
    }

    pub fn mul(&self, o: &PolarClass) -> Result<PolarClass> {
        self.same_ctx(o)?;
        let payload = match (&self.payload, &o.payload) {
            (Payload::Line(a), Payload::Line(b)) => Payload::Line(merge(a, b)),
            (Payload::PrimeLocal(a), Payload::PrimeLocal(b)) => Payload::PrimeLocal(a + b),
            (Payload::Circle { free: a, torsion: x }, Payload::Circle { free: b, torsion: y }) => {
                Payload::Circle { free: merge(a, b), torsion: x ^ y }
            }
            (Payload::ImaginaryCircle(a), Payload::ImaginaryCircle(b)) => Payload::ImaginaryCircle(merge(a, b)),
            (Payload::Conic { t0: s, free: a }, Payload::Conic { t0: r, free: b }) => {
                Payload::Conic { t0: s + r, free: merge(a, b) }
            }
            _ => unreachable!("payload matches context"),
        };
        Ok(PolarClass { ctx: self.ctx.clone(), payload })
    }

    pub fn inv(&self) -> PolarClass {
        self.pow(-1)
    }

    pub fn pow(&self, n: i64) -> PolarClass {
        let payload = match &self.payload {
            Payload::Line(t) => Payload::Line(scale_table(t, n)),
            Payload::PrimeLocal(e) => Payload::PrimeLocal(e * n),
            Payload::Circle { free, torsion } => {
                Payload::Circle { free: scale_table(free, n), torsion: *torsion && n % 2 != 0 }
            }
            Payload::ImaginaryCircle(t) => Payload::ImaginaryCircle(scale_table(t, n)),
            Payload::Conic { t0, free } => Payload::Conic { t0: t0 * n, free: scale_table(free, n) },
        };
        PolarClass { ctx: self.ctx.clone(), payload }
    }

    pub fn order(&self) -> ClassOrder {
        if self.is_identity() {
            ClassOrder::One
        } else if matches!(&self.payload, Payload::Circle { free, torsion: true } if free.is_empty()) {
            ClassOrder::Two
        } else {
            ClassOrder::Infinite
        }
    }

    /// A representative element of `L*` whose class is `self`.
    pub fn representative(&self) -> RatFuncQi {
        let mut out = RatFuncQi::one();
        for (z, e) in self.free_table() {
            out = &out * &RatFuncQi::linear(&z).pow(e).expect("nonzero linear factor");
        }
        if self.torsion() {
            out = &out * &RatFuncQi::linear(&GaussianRational::one());
        }
        if self.ctx == RingContext::ProjectiveLine {
            // pad to degree 0 with a real factor
            let d = out.degree().unwrap_or(0);
            let pad = RatFuncQi::linear(&GaussianRational::zero()).pow(-d).expect("x is nonzero");
            out = &out * &pad;
        }
        out
    }

    pub fn to_json(&self) -> PolarClassJson {
        let (torsion, t0) = match &self.payload {
            Payload::Circle { torsion, .. } => {
                (Some(if *torsion { vec![GaussianRational::one().to_string()] } else { Vec::new() }), None)
            }
            Payload::Conic { t0, .. } => (None, Some(*t0)),
            _ => (None, None),
        };
        let free = match &self.payload {
            Payload::Conic { free, .. } => table_json(free),
            _ => table_json(&self.free_table()),
        };
        PolarClassJson { ctx: self.ctx.tag(), free, torsion, t0 }
    }
}

impl fmt::Display for PolarClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.ctx.var_name();
        let mut parts = Vec::new();
        if let Payload::Conic { t0, .. } = &self.payload {
            if *t0 != 0 {
                parts.push(power(format!("[{}]", v), *t0));
            }
        }
        let table = match &self.payload {
            Payload::Conic { free, .. } => free.clone(),
            _ => self.free_table(),
        };
        for (z, e) in &table {
            let lin = PolyQi::linear(z).fmt_var(v);
            parts.push(power(format!("[{}]", lin), *e));
        }
        if self.torsion() {
            parts.push(format!("[{}-1]", v));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

fn power(base: String, e: i64) -> String {
    if e == 1 {
        base
    } else {
        format!("{}^{}", base, e)
    }
}

/// Divides out the largest factor of `p` whose roots pair up under the
/// context's partner map. Returns the cofactor and the number of pairs.
fn strip_pairs(ctx: &RingContext, p: &PolyQi) -> Result<(PolyQi, i64)> {
    let low = p.low_order();
    let body = p.unshift(low);
    let partner = match ctx.inversion_scalar() {
        None => body.conj(),
        Some(s) => body.conj().reversed_scaled(&s),
    };
    let g = gcd_monic(&body, &partner)?;
    let rest = body.div_exact(&g).expect("gcd divides").shift(low);
    Ok((rest, g.degree().unwrap_or(0) as i64 / 2))
}

/// The canonical class of `f` in the polar group of `ctx`.
pub fn class_of(ctx: &RingContext, f: &RatFuncQi) -> Result<PolarClass> {
    ctx.check_fraction_domain(f)?;
    if let RingContext::PrimeLocal { point } = ctx {
        let e = f.ord_at(point) - f.ord_at(&point.conj());
        return Ok(PolarClass { ctx: ctx.clone(), payload: Payload::PrimeLocal(e) });
    }
    // matched pairs are trivial (a [t] each on the conic); the circle keeps
    // them because unit circle roots pair with themselves
    let mut pairs = 0;
    let reduced = if *ctx == RingContext::CircleForm {
        f.clone()
    } else {
        let (n, a) = strip_pairs(ctx, f.num())?;
        let (d, b) = strip_pairs(ctx, f.den())?;
        pairs = a - b;
        RatFuncQi::new(n, d)?
    };
    let split = split_ratfunc(&reduced, ctx.is_laurent())?;
    let mut table = ClassTable::new();
    let payload = match ctx {
        RingContext::AffineLine { inverted } => {
            for (z, e) in &split.roots {
                if inverted.contains(z) {
                    continue;
                }
                fold_half_plane(&mut table, z, *e);
            }
            Payload::Line(table)
        }
        RingContext::ProjectiveLine | RingContext::CuspCubic => {
            for (z, e) in &split.roots {
                fold_half_plane(&mut table, z, *e);
            }
            Payload::Line(table)
        }
        RingContext::CircleForm => {
            let mut torsion = false;
            for (z, e) in &split.roots {
                match z.circle_location() {
                    CircleLocation::Inside => add_root(&mut table, z.clone(), *e),
                    CircleLocation::Outside => add_root(&mut table, circle_partner(z), -e),
                    CircleLocation::On => torsion ^= e % 2 != 0,
                }
            }
            Payload::Circle { free: table, torsion }
        }
        RingContext::ImaginaryCircleForm | RingContext::ProjectiveConic => {
            let mut t0 = split.t_exp + pairs;
            for (z, e) in &split.roots {
                if in_antipodal_region(z) {
                    add_root(&mut table, z.clone(), *e);
                } else {
                    add_root(&mut table, antipodal_partner(z), -e);
                    t0 += e;
                }
            }
            if *ctx == RingContext::ImaginaryCircleForm {
                Payload::ImaginaryCircle(table)
            } else {
                Payload::Conic { t0, free: table }
            }
        }
        RingContext::PrimeLocal { .. } => unreachable!("handled above"),
    };
    Ok(PolarClass { ctx: ctx.clone(), payload })
}

fn fold_half_plane(table: &mut ClassTable, z: &GaussianRational, e: i64) {
    match z.half_plane_location() {
        HalfPlane::Upper => add_root(table, z.clone(), e),
        HalfPlane::Lower => add_root(table, z.conj(), -e),
        HalfPlane::Real => {}
    }
}

/// `[f] = [g]`
pub fn classes_equal(ctx: &RingContext, f: &RatFuncQi, g: &RatFuncQi) -> Result<bool> {
    Ok(class_of(ctx, f)? == class_of(ctx, g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::qi;

    fn lin(z: GaussianRational) -> RatFuncQi {
        RatFuncQi::linear(&z)
    }

    fn i() -> GaussianRational {
        GaussianRational::i()
    }

    fn table(entries: &[(GaussianRational, i64)]) -> ClassTable {
        entries.iter().cloned().collect()
    }

    #[test]
    fn line_normal_form() {
        let ctx = RingContext::line();
        let f = &(&lin(i()) * &lin(GaussianRational::one())) * &lin(qi(0, 1, -2, 1));
        let c = class_of(&ctx, &f).unwrap();
        assert_eq!(c.payload(), &Payload::Line(table(&[(i(), 1), (qi(0, 1, 2, 1), -1)])));
        for (g, expect) in [(lin(i()), false), (&lin(i()) * &lin(qi(0, 1, -2, 1)), true)] {
            let ratio = f.checked_div(&g).unwrap();
            assert_eq!(ctx.triviality_oracle(&ratio).unwrap(), expect);
        }
    }

    #[test]
    fn conic_pair_is_class_of_t() {
        let z = qi(0, 1, 1, 2);
        let f = &lin(z.clone()) * &lin(antipodal_partner(&z));
        let c = class_of(&RingContext::ProjectiveConic, &f).unwrap();
        assert_eq!(c.payload(), &Payload::Conic { t0: 1, free: ClassTable::new() });
        let t = class_of(&RingContext::ProjectiveConic, &RatFuncQi::var()).unwrap();
        assert_eq!(c, t);
        // the stripping shortcut agrees with direct folding
        let g = &lin(z.clone()).pow(2).unwrap() * &lin(antipodal_partner(&z));
        let direct = class_of(&RingContext::ProjectiveConic, &g).unwrap();
        let expected = class_of(&RingContext::ProjectiveConic, &lin(z)).unwrap().mul(&t).unwrap();
        assert_eq!(direct, expected);
    }

    #[test]
    fn circle_torsion() {
        let ctx = RingContext::CircleForm;
        let c = class_of(&ctx, &lin(i())).unwrap();
        assert_eq!(c.payload(), &Payload::Circle { free: ClassTable::new(), torsion: true });
        assert_eq!(c.order(), ClassOrder::Two);
        assert!(c.mul(&c).unwrap().is_identity());
        assert_eq!(c, class_of(&ctx, &lin(qi(-3, 5, 4, 5))).unwrap());
        let j = serde_json::to_string(&c.to_json()).unwrap();
        assert_eq!(j, r#"{"ctx":"circle","free":[],"torsion":["1"]}"#);
    }

    #[test]
    fn circle_outside_root_folds() {
        let ctx = RingContext::CircleForm;
        let c = class_of(&ctx, &lin(qi(0, 1, 2, 1))).unwrap();
        assert_eq!(c.payload(), &Payload::Circle { free: table(&[(qi(0, 1, 1, 2), -1)]), torsion: false });
    }

    #[test]
    fn icircle_boundary_antipodes_cancel() {
        let ctx = RingContext::ImaginaryCircleForm;
        let z = qi(3, 5, -4, 5);
        let c = class_of(&ctx, &lin(z.clone())).unwrap();
        assert_eq!(c.payload(), &Payload::ImaginaryCircle(table(&[(-&z, -1)])));
        let f = &lin(z.clone()) * &lin(-&z);
        assert!(class_of(&ctx, &f).unwrap().is_identity());
        assert!(ctx.triviality_oracle(&f).unwrap());
    }

    #[test]
    fn group_laws() {
        let ctx = RingContext::line();
        let a = class_of(&ctx, &(&lin(i()).pow(2).unwrap() * &lin(qi(1, 1, 1, 1)).inv().unwrap())).unwrap();
        assert_eq!(a.inv().payload(), &Payload::Line(table(&[(i(), -2), (qi(1, 1, 1, 1), 1)])));
        assert!(a.mul(&a.inv()).unwrap().is_identity());
        assert_eq!(a.order(), ClassOrder::Infinite);
        let other = PolarClass::identity(&RingContext::CircleForm);
        assert!(a.mul(&other).is_err());
    }

    #[test]
    fn fixed_elements_have_order_one() {
        for ctx in [RingContext::line(), RingContext::CircleForm, RingContext::ImaginaryCircleForm] {
            let f = RatFuncQi::var();
            let k = &f * &ctx.apply_sigma(&f);
            assert_eq!(class_of(&ctx, &k).unwrap().order(), ClassOrder::One);
        }
    }

    #[test]
    fn prime_local_orders() {
        let ctx = RingContext::prime_local(i()).unwrap();
        let f = &lin(i()).pow(3).unwrap() * &lin(-i());
        assert_eq!(class_of(&ctx, &f).unwrap().payload(), &Payload::PrimeLocal(2));
    }

    #[test]
    fn representative_round_trips() {
        for ctx in [
            RingContext::line(),
            RingContext::CircleForm,
            RingContext::ImaginaryCircleForm,
            RingContext::ProjectiveConic,
            RingContext::ProjectiveLine,
        ] {
            let f = if ctx == RingContext::ProjectiveLine {
                RatFuncQi::new(PolyQi::linear(&i()), PolyQi::linear(&GaussianRational::one())).unwrap()
            } else {
                &lin(qi(1, 2, 1, 3)) * &lin(GaussianRational::one())
            };
            let c = class_of(&ctx, &f).unwrap();
            assert_eq!(class_of(&ctx, &c.representative()).unwrap(), c, "{}", ctx);
        }
    }

    #[test]
    fn unsplittable_rejected_but_real_factors_tolerated() {
        let x2m2 = RatFuncQi::from_poly(PolyQi::from_ints(&[-2, 0, 1]));
        assert!(class_of(&RingContext::line(), &x2m2).unwrap().is_identity());
        let ctx = RingContext::CircleForm;
        assert!(matches!(class_of(&ctx, &x2m2), Err(Error::Unsplittable { .. })));
    }

    #[test]
    fn display() {
        let ctx = RingContext::line();
        let c = class_of(&ctx, &(&lin(i()) * &lin(qi(0, 1, -2, 1)))).unwrap();
        assert_eq!(c.to_string(), "[x-i]*[x-2*i]^-1");
        assert_eq!(PolarClass::identity(&ctx).to_string(), "1");
    }

    #[test]
    fn payload_validation() {
        let bad = Payload::Line(table(&[(-i(), 1)]));
        assert!(PolarClass::from_payload(&RingContext::line(), bad).is_err());
        let ok = Payload::Line(table(&[(i(), 1)]));
        assert!(PolarClass::from_payload(&RingContext::line(), ok.clone()).is_ok());
        let inv = RingContext::affine_line([i(), -i()]).unwrap();
        assert!(PolarClass::from_payload(&inv, ok).is_err());
    }
}
