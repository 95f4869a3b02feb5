//! Exact identities relating circle and conic coordinates to `t`.

use crate::error::{Error, Result};
use crate::exactnum::{CircleLocation, GaussianRational};
use crate::polyalg::RatFuncQi;
use crate::ringctx::RingContext;

/// `lhs = rhs`, plus any side condition the identity depends on.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub label: String,
    pub lhs: RatFuncQi,
    pub rhs: RatFuncQi,
    pub side_condition: bool,
}

impl IdentityCheck {
    fn new(label: String, lhs: RatFuncQi, rhs: RatFuncQi) -> Self {
        IdentityCheck { label, lhs, rhs, side_condition: true }
    }

    pub fn holds(&self) -> bool {
        self.side_condition && self.lhs == self.rhs
    }
}

/// `x = (t + 1/t)/2`, `y = (t - 1/t)/(2i)`.
pub fn circle_coordinates() -> (RatFuncQi, RatFuncQi) {
    let p = RingContext::CircleForm.fixed_decomposition(&RatFuncQi::var());
    (p.f1, p.f2)
}

fn c(z: GaussianRational) -> RatFuncQi {
    RatFuncQi::constant(z)
}

/// `t^2 + 1 = 2xt` and `t^2 - 1 = 2iyt`.
pub fn circle_square_identities() -> Vec<IdentityCheck> {
    let (x, y) = circle_coordinates();
    let t = RatFuncQi::var();
    let t2 = RatFuncQi::var_pow(2);
    let two = GaussianRational::from_int(2);
    let two_i = GaussianRational::from_ints(0, 2);
    vec![
        IdentityCheck::new("t^2+1 = 2*x*t".into(), &t2 + &RatFuncQi::one(), &x * &t.scale(&two)),
        IdentityCheck::new("t^2-1 = 2*i*y*t".into(), &t2 - &RatFuncQi::one(), &y * &t.scale(&two_i)),
    ]
}

/// For a circle point `zeta`:
/// `(t - zeta)(t - conj zeta) = 2(x - Re zeta) t` and
/// `(t + zeta)(t - conj zeta) = 2i(y + Im zeta) t`.
pub fn circle_point_identities(zeta: &GaussianRational) -> Result<Vec<IdentityCheck>> {
    if zeta.circle_location() != CircleLocation::On {
        return Err(Error::NormNotOne(zeta.norm_sq().to_string()));
    }
    let (x, y) = circle_coordinates();
    let t = RatFuncQi::var();
    let zb = zeta.conj();
    let re = GaussianRational::real(zeta.re.clone());
    let im = GaussianRational::real(zeta.im.clone());
    let lhs1 = &RatFuncQi::linear(zeta) * &RatFuncQi::linear(&zb);
    let rhs1 = &(&x - &c(re)) * &t.scale(&GaussianRational::from_int(2));
    let lhs2 = &RatFuncQi::linear(&-zeta) * &RatFuncQi::linear(&zb);
    let rhs2 = &(&y + &c(im)) * &t.scale(&GaussianRational::from_ints(0, 2));
    Ok(vec![
        IdentityCheck::new(format!("(t-z)(t-conj z) = 2(x-Re z)t, z = {}", zeta), lhs1, rhs1),
        IdentityCheck::new(format!("(t+z)(t-conj z) = 2i(y+Im z)t, z = {}", zeta), lhs2, rhs2),
    ])
}

/// `kappa = (t - z)(-1/t - conj z)`, fixed by the conic conjugation.
pub fn conic_kappa(z: &GaussianRational) -> RatFuncQi {
    let minus_tinv = RatFuncQi::var_pow(-1).scale(&GaussianRational::from_int(-1));
    &RatFuncQi::linear(z) * &(&minus_tinv - &c(z.conj()))
}

/// `(t - z)(t + 1/conj z) = -(1/conj z) kappa t`, with `kappa` checked fixed.
pub fn conic_relation(z: &GaussianRational) -> Result<IdentityCheck> {
    let zbi = z.conj().inv().ok_or(Error::ZeroInput("conic relation point"))?;
    let kappa = conic_kappa(z);
    let lhs = &RatFuncQi::linear(z) * &RatFuncQi::linear(&-&zbi);
    let rhs = &kappa * &RatFuncQi::var().scale(&-&zbi);
    let mut check = IdentityCheck::new(format!("(t-z)(t+1/conj z) = -(1/conj z)*kappa*t, z = {}", z), lhs, rhs);
    check.side_condition = RingContext::ProjectiveConic.is_sigma_fixed(&kappa);
    Ok(check)
}

/// Whether `[x^m - zeta]` is nontrivial over `R[x, 1/x]`, decided by the oracle.
pub fn laurent_parametrization_witness(m: u32, zeta: &GaussianRational) -> Result<bool> {
    let ctx = RingContext::affine_line([GaussianRational::zero()])?;
    let f = &RatFuncQi::var_pow(m as i64) - &c(zeta.clone());
    Ok(!ctx.triviality_oracle(&f)?)
}
