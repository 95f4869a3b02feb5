//! Front end of `polarctl`: argument parsing, rendering and exit codes.
//!
//! Exit codes: 0 success, 1 a report check failed, 2 parse or domain error,
//! 3 input that does not split over Q(i).

pub mod expr;
pub mod report;
pub mod ring;

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polar::{
    class_of, delta_membership, delta_t_membership, localization_map, localization_section, orbit_normalize,
    polar_factorize, polar_factorize_with, prime_reduction, projective_include, reciprocal_sum_check, subalgebra_embed,
    FactorMethod, PolarClass,
};
use crate::polyalg::RatFuncQi;
use crate::ringctx::RingContext;
use crate::splitter::split_ratfunc;

pub use expr::{parse, parse_value, Expr};
pub use report::build_report;
pub use ring::parse_ring;

#[derive(Parser, Debug)]
#[command(name = "polarctl", version, about = "Polar groups of real forms of complex curves")]
pub struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug)]
pub struct ElemArgs {
    /// Ring context, e.g. line, line[inv=0], circle
    #[arg(long)]
    pub ring: String,
    /// Expression, or '-' to read stdin
    pub expr: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Auto,
    Gcd,
    Pairing,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomKind {
    Localize,
    Section,
    Include,
    CuspEmbed,
    Reduce,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Canonical class of an element
    Class(ElemArgs),
    /// Polar factorization into a fixed part and a Delta part
    Factor {
        #[command(flatten)]
        elem: ElemArgs,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Whether an element has no real non-unit divisor
    Delta(ElemArgs),
    /// Order of the class: 1, 2 or inf
    Order(ElemArgs),
    /// Whether two elements have the same class
    Eq {
        #[arg(long)]
        ring: String,
        lhs: String,
        rhs: String,
    },
    /// Triviality of the class, decided without normal forms
    Oracle(ElemArgs),
    /// Presentation of the fixed ring
    Fixedring {
        #[arg(long)]
        ring: String,
    },
    /// Orbit representative of an irreducible Delta element
    Orbit(ElemArgs),
    /// Roots over Q(i) with multiplicity
    Split(ElemArgs),
    /// Maps between polar groups
    Hom {
        #[arg(long, value_enum)]
        kind: HomKind,
        /// Source ring (implied for cusp-embed and reduce)
        #[arg(long)]
        ring: Option<String>,
        /// Target ring for localize and section
        #[arg(long)]
        to: Option<String>,
        /// Real maximal ideal generator for reduce
        #[arg(long)]
        prime: Option<String>,
        expr: String,
    },
    /// Worked computations with machine-checked results
    Report {
        /// forms-of-cstar, forms-of-p1, localizations, circle-identities, cusp-cubic or all
        section: Option<String>,
        #[arg(long = "section")]
        section_flag: Option<String>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Text lines and the matching JSON object of one command.
struct Rendered {
    lines: Vec<String>,
    json: Value,
    code: i32,
}

impl Rendered {
    fn new(json: Value) -> Self {
        Rendered { lines: Vec::new(), json, code: 0 }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    lines: Option<Vec<String>>,
    next: usize,
}

impl Input<'_> {
    fn resolve(&mut self, arg: &str) -> Result<String> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.lines.is_none() {
            let mut buf = String::new();
            self.stdin.read_to_string(&mut buf).map_err(|e| Error::Domain(format!("reading stdin: {}", e)))?;
            self.lines = Some(buf.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect());
        }
        let lines = self.lines.as_ref().expect("read above");
        let s = lines.get(self.next).cloned().ok_or_else(|| Error::Domain("stdin has no expression".into()))?;
        self.next += 1;
        Ok(s)
    }
}

fn value_in(ctx: &RingContext, src: &str) -> Result<RatFuncQi> {
    parse_value(src, ctx.var_name(), ctx.is_laurent())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Unsplittable { .. } => 3,
        _ => 2,
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { stdout: text, stderr: String::new(), code: 0 }
                }
                _ => Outcome { stdout: String::new(), stderr: text, code: 2 },
            };
        }
    };
    let mut input = Input { stdin, lines: None, next: 0 };
    match execute(&cli.command, &mut input) {
        Ok(r) => {
            let stdout = if cli.json {
                let mut obj = serde_json::Map::new();
                obj.insert("schema".into(), json!(1));
                if let Value::Object(m) = r.json {
                    obj.extend(m);
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("json");
                s.push('\n');
                s
            } else {
                let mut s = r.lines.join("\n");
                s.push('\n');
                s
            };
            Outcome { stdout, stderr: String::new(), code: r.code }
        }
        Err(e) => {
            let msg = match (&e, ring_var(&cli.command)) {
                (Error::Unsplittable { residual }, Some(v)) => {
                    format!("input does not split over Q(i); residual factor {}", residual.replace('v', v))
                }
                _ => e.to_string(),
            };
            Outcome { stdout: String::new(), stderr: format!("error: {}\n", msg), code: exit_code(&e) }
        }
    }
}

fn ring_var(cmd: &Command) -> Option<&'static str> {
    let tag = match cmd {
        Command::Class(a) | Command::Delta(a) | Command::Order(a) | Command::Oracle(a) | Command::Orbit(a) => &a.ring,
        Command::Split(a) => &a.ring,
        Command::Factor { elem, .. } => &elem.ring,
        Command::Eq { ring, .. } => ring,
        Command::Hom { ring: Some(r), .. } => r,
        Command::Hom { .. } => return Some("x"),
        _ => return None,
    };
    parse_ring(tag).ok().map(|c| c.var_name())
}

fn class_json(c: &PolarClass) -> Value {
    serde_json::to_value(c.to_json()).expect("json")
}

fn header(r: &mut Rendered, ctx: &RingContext, f: &RatFuncQi) {
    r.line(format!("ring: {}", ctx.tag()));
    r.line(format!("value: {}", f.fmt_var(ctx.var_name())));
}

fn elem(input: &mut Input, a: &ElemArgs) -> Result<(RingContext, RatFuncQi)> {
    let ctx = parse_ring(&a.ring)?;
    let src = input.resolve(&a.expr)?;
    let f = value_in(&ctx, &src)?;
    Ok((ctx, f))
}

fn execute(cmd: &Command, input: &mut Input) -> Result<Rendered> {
    match cmd {
        Command::Class(a) | Command::Order(a) => {
            let (ctx, f) = elem(input, a)?;
            let c = class_of(&ctx, &f)?;
            let v = f.fmt_var(ctx.var_name());
            let name = if matches!(cmd, Command::Class(_)) { "class" } else { "order" };
            let mut r = Rendered::new(json!({
                "command": name, "ring": ctx.tag(), "value": v,
                "class": class_json(&c), "order": c.order().to_string(),
            }));
            header(&mut r, &ctx, &f);
            r.line(format!("class: {}", c));
            if let Some(t) = r.json["class"]["torsion"].as_array() {
                let items: Vec<String> = t.iter().map(|z| z.as_str().unwrap_or_default().to_string()).collect();
                r.line(format!("torsion: {{{}}}", items.join(", ")));
            }
            r.line(format!("order: {}", c.order()));
            Ok(r)
        }
        Command::Factor { elem: a, method } => {
            let (ctx, f) = elem(input, a)?;
            let (pf, m) = match method {
                MethodArg::Auto => {
                    let m = if ctx == RingContext::CircleForm { "pairing" } else { "gcd" };
                    (polar_factorize(&ctx, &f)?, m)
                }
                MethodArg::Gcd => (polar_factorize_with(&ctx, &f, FactorMethod::Gcd)?, "gcd"),
                MethodArg::Pairing => (polar_factorize_with(&ctx, &f, FactorMethod::Pairing)?, "pairing"),
            };
            let v = ctx.var_name();
            let fixed = ctx.is_sigma_fixed(&pf.real_part);
            let in_delta = delta_membership(&ctx, &pf.delta_part)?;
            let reassembles = &pf.real_part * &pf.delta_part == f;
            let mut r = Rendered::new(json!({
                "command": "factor", "ring": ctx.tag(), "value": f.fmt_var(v), "method": m,
                "real_part": pf.real_part.fmt_var(v), "delta_part": pf.delta_part.fmt_var(v),
                "real_part_fixed": fixed, "delta_part_in_delta": in_delta, "reassembles": reassembles,
            }));
            header(&mut r, &ctx, &f);
            r.line(format!("method: {}", m));
            r.line(format!("real_part: {}", pf.real_part.fmt_var(v)));
            r.line(format!("delta_part: {}", pf.delta_part.fmt_var(v)));
            r.line(format!("checks: fixed={} delta={} reassembles={}", fixed, in_delta, reassembles));
            Ok(r)
        }
        Command::Delta(a) => {
            let (ctx, f) = elem(input, a)?;
            let d = delta_membership(&ctx, &f)?;
            let mut r = Rendered::new(json!({
                "command": "delta", "ring": ctx.tag(), "value": f.fmt_var(ctx.var_name()), "delta": d,
            }));
            header(&mut r, &ctx, &f);
            r.line(format!("delta: {}", d));
            Ok(r)
        }
        Command::Eq { ring, lhs, rhs } => {
            let ctx = parse_ring(ring)?;
            let f = value_in(&ctx, &input.resolve(lhs)?)?;
            let g = value_in(&ctx, &input.resolve(rhs)?)?;
            let (cf, cg) = (class_of(&ctx, &f)?, class_of(&ctx, &g)?);
            let oracle = ctx.triviality_oracle(&f.checked_div(&g)?)?;
            let v = ctx.var_name();
            let mut r = Rendered::new(json!({
                "command": "eq", "ring": ctx.tag(), "lhs": f.fmt_var(v), "rhs": g.fmt_var(v),
                "lhs_class": class_json(&cf), "rhs_class": class_json(&cg),
                "equal": cf == cg, "oracle": oracle,
            }));
            r.line(format!("ring: {}", ctx.tag()));
            r.line(format!("lhs: {} -> {}", f.fmt_var(v), cf));
            r.line(format!("rhs: {} -> {}", g.fmt_var(v), cg));
            r.line(format!("equal: {}", cf == cg));
            r.line(format!("oracle: {}", oracle));
            Ok(r)
        }
        Command::Oracle(a) => {
            let (ctx, f) = elem(input, a)?;
            let v = ctx.var_name();
            let witness = ctx.trivial_decomposition(&f)?;
            let trivial = match ctx {
                RingContext::PrimeLocal { .. } => ctx.triviality_oracle(&f)?,
                _ => witness.is_some(),
            };
            let mut j = json!({
                "command": "oracle", "ring": ctx.tag(), "value": f.fmt_var(v), "trivial": trivial,
            });
            let mut r = Rendered::new(Value::Null);
            header(&mut r, &ctx, &f);
            r.line(format!("trivial: {}", trivial));
            if let Some((u, k)) = witness {
                j["unit"] = json!(u.fmt_var(v));
                j["fixed"] = json!(k.fmt_var(v));
                r.line(format!("unit: {}", u.fmt_var(v)));
                r.line(format!("fixed: {}", k.fmt_var(v)));
            }
            r.json = j;
            Ok(r)
        }
        Command::Fixedring { ring } => {
            let ctx = parse_ring(ring)?;
            let p = ctx.fixed_ring_generators()?;
            let v = ctx.var_name();
            let gens: Vec<Value> =
                p.generators.iter().map(|(n, g)| json!({"name": n, "value": g.fmt_var(v)})).collect();
            let mut j = json!({
                "command": "fixedring", "ring": ctx.tag(), "generators": gens,
                "relation": p.relation.as_ref().map(|x| x.to_string()), "verified": p.verified(),
            });
            let mut r = Rendered::new(Value::Null);
            r.line(format!("ring: {}", ctx.tag()));
            for (n, g) in &p.generators {
                r.line(format!("{} = {}", n, g.fmt_var(v)));
            }
            match &p.relation {
                Some(rel) => r.line(format!("relation: {}", rel)),
                None => r.line("relation: none"),
            }
            if let Some((x, y, c)) = &p.unhalved {
                j["unhalved"] = json!({"X": x.fmt_var(v), "Y": y.fmt_var(v), "sum_of_squares": c.to_string()});
                r.line(format!("unhalved: X = {}, Y = {}, X^2+Y^2 = {}", x.fmt_var(v), y.fmt_var(v), c));
            }
            r.line(format!("verified: {}", p.verified()));
            r.json = j;
            if !p.verified() {
                r.code = 1;
            }
            Ok(r)
        }
        Command::Orbit(a) => {
            let (ctx, f) = elem(input, a)?;
            let o = orbit_normalize(&ctx, &f)?;
            let v = ctx.var_name();
            let rep = o.element().fmt_var(v);
            let mut r = Rendered::new(json!({
                "command": "orbit", "ring": ctx.tag(), "value": f.fmt_var(v),
                "representative": rep, "conjugated": o.conjugated,
            }));
            header(&mut r, &ctx, &f);
            r.line(format!("representative: {}", rep));
            r.line(format!("conjugated: {}", o.conjugated));
            Ok(r)
        }
        Command::Split(a) => {
            let (ctx, f) = elem(input, a)?;
            let s = split_ratfunc(&f, ctx.is_laurent())?;
            let mut r = Rendered::new(json!({
                "command": "split", "ring": ctx.tag(), "value": f.fmt_var(ctx.var_name()),
                "split": serde_json::to_value(s.to_json()).expect("json"),
            }));
            header(&mut r, &ctx, &f);
            r.line(format!("unit: {}", s.unit));
            r.line(format!("t_exp: {}", s.t_exp));
            let roots: Vec<String> = s.roots.iter().map(|(z, e)| format!("{}: {}", z, e)).collect();
            r.line(format!("roots: {{{}}}", roots.join(", ")));
            Ok(r)
        }
        Command::Hom { kind, ring, to, prime, expr } => {
            hom(*kind, ring.as_deref(), to.as_deref(), prime.as_deref(), expr, input)
        }
        Command::Report { section, section_flag } => {
            let id = section_flag.as_deref().or(section.as_deref()).unwrap_or("all");
            let rep = build_report(id)?;
            let mut r = Rendered::new(json!({
                "command": "report", "section": id, "pass": rep.passed(),
                "sections": serde_json::to_value(&rep.sections).expect("json"),
            }));
            let text = rep.render_text();
            r.lines = text.trim_end().lines().map(String::from).collect();
            if !rep.passed() {
                r.code = 1;
            }
            Ok(r)
        }
    }
}

fn hom(
    kind: HomKind,
    ring: Option<&str>,
    to: Option<&str>,
    prime: Option<&str>,
    expr: &str,
    input: &mut Input,
) -> Result<Rendered> {
    let need = |o: Option<&str>, flag: &str| {
        o.map(String::from).ok_or_else(|| Error::Domain(format!("--{} is required", flag)))
    };
    let src = input.resolve(expr)?;
    let (source, image, extra) = match kind {
        HomKind::Localize | HomKind::Section => {
            let from = parse_ring(&need(ring, "ring")?)?;
            let target = parse_ring(&need(to, "to")?)?;
            let c = class_of(&from, &value_in(&from, &src)?)?;
            let img = if kind == HomKind::Localize {
                localization_map(&c, &target)?
            } else {
                localization_section(&c, &target)?
            };
            (c, img, json!({}))
        }
        HomKind::Include => {
            let from = parse_ring(&need(ring, "ring")?)?;
            let c = class_of(&from, &value_in(&from, &src)?)?;
            let img = projective_include(&c)?;
            (c, img, json!({}))
        }
        HomKind::CuspEmbed => {
            let ctx = RingContext::CuspCubic;
            let f = value_in(&ctx, &src)?;
            let img = subalgebra_embed(&f)?;
            let dt = delta_t_membership(&f)?;
            let recip = match f.as_poly() {
                Some(p) if p.is_monic() && !p.coeff(0).is_zero() => Some(reciprocal_sum_check(p)?),
                _ => None,
            };
            (class_of(&ctx, &f)?, img, json!({"delta_t": dt, "reciprocal_sum_check": recip}))
        }
        HomKind::Reduce => {
            let ctx = RingContext::line();
            let f = value_in(&ctx, &src)?;
            let p = value_in(&ctx, &need(prime, "prime")?)?;
            let p = p.as_poly().cloned().ok_or_else(|| Error::Domain("prime must be a polynomial".into()))?;
            let field = prime_reduction(&f, &p)?;
            let mut r = Rendered::new(json!({
                "command": "hom", "kind": "reduce", "value": f.fmt_var("x"), "prime": p.fmt_var("x"),
                "residue_field": format!("{:?}", field).to_lowercase(), "class": field.trivial_class(),
            }));
            r.line(format!("value: {}", f.fmt_var("x")));
            r.line(format!("prime: {}", p.fmt_var("x")));
            r.line(format!("residue field: {}", format!("{:?}", field).to_lowercase()));
            r.line(format!("class: {}", field.trivial_class()));
            return Ok(r);
        }
    };
    let kind_name = kind.to_possible_value().expect("named").get_name().to_string();
    let mut j = json!({
        "command": "hom", "kind": kind_name, "source": class_json(&source), "image": class_json(&image),
    });
    let mut r = Rendered::new(Value::Null);
    r.line(format!("source: {} in {}", source, source.ctx().tag()));
    r.line(format!("image: {} in {}", image, image.ctx().tag()));
    if let Value::Object(m) = extra {
        for (k, v) in m {
            r.line(format!("{}: {}", k, v));
            j[k] = v;
        }
    }
    r.json = j;
    Ok(r)
}
