//! The `report` document: every worked computation, each step checked.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{qi, GaussianRational};
use crate::polar::identities::{
    circle_coordinates, circle_point_identities, circle_square_identities, conic_kappa, conic_relation,
    laurent_parametrization_witness, IdentityCheck,
};
use crate::polar::{
    class_of, delta_membership, delta_t_membership, localization_map, localization_section, polar_factorize,
    prime_reduction, reciprocal_sum, subalgebra_embed, ClassOrder,
};
use crate::polyalg::{PolyQi, RatFuncQi};
use crate::ringctx::RingContext;

pub const SECTIONS: [&str; 5] = ["forms-of-cstar", "forms-of-p1", "localizations", "circle-identities", "cusp-cubic"];

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Entry {
    Text { text: String },
    Check { label: String, pass: bool },
}

#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub id: String,
    pub title: String,
    pub entries: Vec<Entry>,
}

impl Section {
    fn new(id: &str, title: &str) -> Self {
        Section { id: id.into(), title: title.into(), entries: Vec::new() }
    }

    fn text(&mut self, s: impl Into<String>) {
        self.entries.push(Entry::Text { text: s.into() });
    }

    fn check(&mut self, label: impl Into<String>, pass: bool) {
        self.entries.push(Entry::Check { label: label.into(), pass });
    }

    fn identity(&mut self, c: &IdentityCheck) {
        self.check(c.label.clone(), c.holds());
    }

    pub fn checks(&self) -> impl Iterator<Item = bool> + '_ {
        self.entries.iter().filter_map(|e| match e {
            Entry::Check { pass, .. } => Some(*pass),
            Entry::Text { .. } => None,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub sections: Vec<Section>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(|s| s.checks().all(|p| p))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            out.push_str(&format!("== {}: {} ==\n", s.id, s.title));
            for e in &s.entries {
                match e {
                    Entry::Text { text } => out.push_str(&format!("  {}\n", text)),
                    Entry::Check { label, pass } => {
                        out.push_str(&format!("  [{}] {}\n", if *pass { "ok" } else { "FAIL" }, label))
                    }
                }
            }
            out.push('\n');
        }
        let total: usize = self.sections.iter().map(|s| s.checks().count()).sum();
        let failed: usize = self.sections.iter().map(|s| s.checks().filter(|p| !p).count()).sum();
        if failed == 0 {
            out.push_str(&format!("summary: {} checks, all passed\n", total));
        } else {
            out.push_str(&format!("summary: {} checks, {} failed\n", total, failed));
        }
        out
    }
}

pub fn build_report(section: &str) -> Result<Report> {
    let ids: Vec<&str> = if section == "all" {
        SECTIONS.to_vec()
    } else if SECTIONS.contains(&section) {
        vec![section]
    } else {
        return Err(Error::Domain(format!(
            "unknown report section '{}'; expected one of {}, all",
            section,
            SECTIONS.join(", ")
        )));
    };
    let sections = ids
        .into_iter()
        .map(|id| match id {
            "forms-of-cstar" => forms_of_cstar(),
            "forms-of-p1" => forms_of_p1(),
            "localizations" => localizations(),
            "circle-identities" => circle_section(),
            _ => cusp_section(),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report { sections })
}

fn lin(z: GaussianRational) -> RatFuncQi {
    RatFuncQi::linear(&z)
}

fn show(ctx: &RingContext, f: &RatFuncQi) -> String {
    f.fmt_var(ctx.var_name())
}

/// `[f]^k` is nontrivial for `k = 1..=8`, by the oracle.
fn no_small_order(ctx: &RingContext, f: &RatFuncQi) -> Result<bool> {
    for k in 1..=8 {
        if ctx.triviality_oracle(&f.pow(k)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn presentation(s: &mut Section, ctx: &RingContext, sigma: &str) -> Result<()> {
    let p = ctx.fixed_ring_generators()?;
    s.text(format!("{}    sigma: {}", ctx.tag(), sigma));
    for (name, g) in &p.generators {
        s.text(format!("  {} = {}", name, show(ctx, g)));
    }
    if let Some(rel) = &p.relation {
        s.check(format!("{}", rel), p.relation_holds);
    }
    s.check("generators are sigma-fixed and recover the variable", p.generators_fixed && p.generates);
    if let Some((x, y, c)) = &p.unhalved {
        s.text(format!("  unhalved pair {}, {} satisfies X^2+Y^2 = {}", show(ctx, x), show(ctx, y), c));
    }
    Ok(())
}

fn forms_of_cstar() -> Result<Section> {
    let mut s = Section::new("forms-of-cstar", "three real forms of C*");
    let hyper = RingContext::affine_line([GaussianRational::zero()])?;
    presentation(&mut s, &hyper, "x -> x")?;
    s.text("  generators: [x-z] for z in the upper half plane");
    s.check("[x-i] has no order <= 8 (oracle)", no_small_order(&hyper, &lin(GaussianRational::i()))?);

    let circle = RingContext::CircleForm;
    presentation(&mut s, &circle, "t -> 1/t")?;
    s.text("  generators: free [t-z] for 0 < |z| < 1; torsion [t-1] of order 2");
    s.text("  every [t-z] with |z| = 1 equals [t-1]");
    let one = lin(GaussianRational::one());
    s.check("[t-1] nontrivial and [t-1]^2 trivial (oracle)", {
        !circle.triviality_oracle(&one)? && circle.triviality_oracle(&one.pow(2)?)?
    });
    let zi = lin(GaussianRational::i());
    s.check("[t-i] = [t-1] (oracle)", circle.triviality_oracle(&zi.checked_div(&one)?)?);
    let z = qi(0, 1, 1, 2);
    s.check("[t-1/2*i] has no order <= 8 (oracle)", no_small_order(&circle, &lin(z.clone()))?);
    let pair = &lin(z.clone()) * &lin(qi(0, 1, 2, 1));
    s.check("[t-1/2*i]*[t-2*i] trivial (oracle)", circle.triviality_oracle(&pair)?);

    let ic = RingContext::ImaginaryCircleForm;
    presentation(&mut s, &ic, "t -> -1/t")?;
    s.text("  generators: [t-z] for 0 < |z| < 1, and for |z| = 1 with Im z > 0 or z = 1");
    s.check("[t-1] has no order <= 8 (oracle)", no_small_order(&ic, &one)?);
    let anti = &one * &lin(GaussianRational::from_int(-1));
    s.check("[t-1]*[t+1] trivial (oracle)", ic.triviality_oracle(&anti)?);

    s.text("no Laurent parametrization: [x^m-z] over line[inv=0]");
    for z in [GaussianRational::i(), qi(3, 5, 4, 5), qi(0, 1, 2, 1)] {
        let mut all = true;
        for m in 1..=6 {
            all &= laurent_parametrization_witness(m, &z)?;
        }
        s.check(format!("[x^m-({})] nontrivial for m = 1..6 (oracle)", z), all);
    }
    Ok(s)
}

fn forms_of_p1() -> Result<Section> {
    let mut s = Section::new("forms-of-p1", "two real forms of P^1");
    let pl = RingContext::ProjectiveLine;
    s.text("proj-line    sigma: x -> x");
    s.text("  generators: [x-z] for z in the upper half plane");
    let f = lin(GaussianRational::i()).checked_div(&lin(GaussianRational::one()))?;
    let c = class_of(&pl, &f)?;
    s.text(format!("  class of {} = {}", show(&pl, &f), c));
    s.check("(x-i)/(x-1) nontrivial (oracle)", !pl.triviality_oracle(&f)?);
    let sum: i64 = c.free_table().values().sum();
    s.text(format!(
        "  note: its exponent sum is {}; the group is free on all of the upper half plane, not on sum-zero products",
        sum
    ));

    let conic = RingContext::ProjectiveConic;
    s.text("conic    sigma: t -> -1/t");
    s.text("  generators: [t], and [t-z] for 0 < |z| < 1, or |z| = 1 with Im z > 0 or z = 1");
    let z = qi(0, 1, 1, 2);
    let rel = conic_relation(&z)?;
    s.text(format!("  kappa = {}", show(&conic, &conic_kappa(&z))));
    s.check("kappa is sigma-fixed", conic.is_sigma_fixed(&conic_kappa(&z)));
    s.identity(&rel);
    let g = &lin(z.clone()) * &lin(-&z.conj().inv().expect("nonzero"));
    let cg = class_of(&conic, &g)?;
    s.text(format!("  class of {} = {}", show(&conic, &g), cg));
    s.check("equals [t] (normal form)", cg == class_of(&conic, &RatFuncQi::var())?);
    s.check("equals [t] (oracle)", conic.triviality_oracle(&g.checked_div(&RatFuncQi::var())?)?);
    s.check("[t] has no order <= 8 (oracle)", no_small_order(&conic, &RatFuncQi::var())?);
    Ok(s)
}

fn localizations() -> Result<Section> {
    let mut s = Section::new("localizations", "localizations of R[x]");
    let line = RingContext::line();
    let hyper = RingContext::affine_line([GaussianRational::zero()])?;
    let loc = RingContext::affine_line([GaussianRational::i(), -GaussianRational::i()])?;

    let f = lin(qi(0, 1, 2, 1));
    let a = class_of(&line, &f)?;
    let b = localization_map(&a, &hyper)?;
    s.text(format!("line -> {}: {} -> {}", hyper.tag(), a, b));
    s.check("image equals the class computed in the target", b == class_of(&hyper, &f)?);

    let g = &lin(GaussianRational::i()).pow(2)? * &lin(qi(1, 1, 1, 1));
    let a = class_of(&line, &g)?;
    let b = localization_map(&a, &loc)?;
    s.text(format!("line -> {}: {} -> {}", loc.tag(), a, b));
    s.check("image equals the class computed in the target", b == class_of(&loc, &g)?);
    let back = localization_section(&b, &line)?;
    s.text(format!("section: {} -> {}", b, back));
    s.check("map after section is the identity", localization_map(&back, &loc)? == b);
    let ki = class_of(&line, &lin(GaussianRational::i()))?;
    s.check("[x-i] lies in the kernel", localization_map(&ki, &loc)?.is_identity());
    s.check("[x-1-i] does not", !localization_map(&class_of(&line, &lin(qi(1, 1, 1, 1)))?, &loc)?.is_identity());
    s.check("[x-i] is trivial in the target (oracle)", loc.triviality_oracle(&lin(GaussianRational::i()))?);

    let pl = RingContext::prime_local(GaussianRational::i())?;
    let h = &lin(GaussianRational::i()).pow(3)? * &lin(-GaussianRational::i());
    let c = class_of(&pl, &h)?;
    s.text(format!("{}: class of {} = {}", pl.tag(), show(&pl, &h), c));
    let e = h.ord_at(&GaussianRational::i()) - h.ord_at(&-GaussianRational::i());
    s.check(format!("exponent equals ord_i - ord_-i = {}", e), c == class_of(&pl, &lin(GaussianRational::i()))?.pow(e));
    s.check(
        "agrees with the oracle on (x-i)^2",
        pl.triviality_oracle(&h.checked_div(&lin(GaussianRational::i()).pow(2)?)?)?,
    );

    let p = PolyQi::from_ints(&[1, 0, 1]);
    let r = prime_reduction(&RatFuncQi::from_poly(PolyQi::from_ints(&[-3, 1])), &p)?;
    s.text(format!("reduction of x-3 modulo x^2+1: residue field {:?}, class {}", r, r.trivial_class()));
    s.check("x^2+1 is rejected modulo x^2+1", prime_reduction(&RatFuncQi::from_poly(p.clone()), &p).is_err());
    Ok(s)
}

fn circle_section() -> Result<Section> {
    let mut s = Section::new("circle-identities", "coordinates on the circle");
    let ctx = RingContext::CircleForm;
    let (x, y) = circle_coordinates();
    s.text(format!("x = {}", show(&ctx, &x)));
    s.text(format!("y = {}", show(&ctx, &y)));
    for c in circle_square_identities() {
        s.identity(&c);
    }
    for c in circle_point_identities(&qi(3, 5, 4, 5))? {
        s.identity(&c);
    }
    let t2p1 = RatFuncQi::from_poly(PolyQi::from_ints(&[1, 0, 1]));
    let pf = polar_factorize(&ctx, &t2p1)?;
    s.text(format!(
        "polar factorization of t^2+1: real part {}, delta part {}",
        show(&ctx, &pf.real_part),
        show(&ctx, &pf.delta_part)
    ));
    s.check(
        "real part fixed, delta part in Delta, product reassembles",
        ctx.is_sigma_fixed(&pf.real_part)
            && delta_membership(&ctx, &pf.delta_part)?
            && &pf.real_part * &pf.delta_part == t2p1,
    );
    let f = lin(qi(3, 5, 4, 5));
    let c = class_of(&ctx, &f)?;
    s.text(format!("class of {} = {}, order {}", show(&ctx, &f), c, c.order()));
    s.check("order 2 and nontrivial (oracle)", c.order() == ClassOrder::Two && !ctx.triviality_oracle(&f)?);
    Ok(s)
}

fn cusp_section() -> Result<Section> {
    let mut s = Section::new("cusp-cubic", "the cuspidal cubic R[x^2, x^3]");
    let ctx = RingContext::CuspCubic;
    let f = RatFuncQi::from_poly(PolyQi::new(vec![qi(0, 1, -2, 1), GaussianRational::zero(), GaussianRational::one()]));
    s.text(format!("f = {}", show(&ctx, &f)));
    s.check("f lies in T (zero linear coefficient)", ctx.check_ring_domain(&f).is_ok());
    s.check("f is in Delta(T): no root pairs with its conjugate", delta_t_membership(&f)?);
    let c = subalgebra_embed(&f)?;
    s.text(format!("class in the line = {}", c));
    s.check("agrees with the oracle", RingContext::line().triviality_oracle(&f.checked_div(&c.representative())?)?);
    let r = reciprocal_sum(f.num())?;
    s.text(format!("reciprocal root sum = {}", r));
    s.check("reciprocal root sum and f'(0) both vanish", r.is_zero() && f.num().coeff(1).is_zero());
    let x3 = RatFuncQi::var_pow(3);
    s.check("x^3 has trivial class", subalgebra_embed(&x3)?.is_identity());
    Ok(s)
}
