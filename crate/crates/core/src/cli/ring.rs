//! Ring DSL: `line`, `line[inv=0]`, `line[inv=(x^2+1)]`, `line[inv=i,-i]`,
//! `prime-local[i]`, `circle`, `icircle`, `proj-line`, `conic`, `cusp`.
//!
//! An `inv` item mentioning `x` is a polynomial whose roots are inverted;
//! any other item is a single point.

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::ringctx::RingContext;
use crate::splitter::split_ratfunc;

use super::expr::parse;

fn bad(src: &str, msg: &str) -> Error {
    Error::Domain(format!("ring '{}': {}", src, msg))
}

/// Splits at top-level commas.
fn items(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (k, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn inverted_points(src: &str, list: &str) -> Result<Vec<GaussianRational>> {
    let mut pts = Vec::new();
    for item in items(list) {
        let e = parse(item)?;
        if e.vars().is_empty() {
            pts.push(e.eval_scalar()?);
            continue;
        }
        let p = e.eval("x", false)?;
        if p.is_zero() || p.as_poly().is_none() {
            return Err(bad(src, "inverted item must be a nonzero polynomial in x"));
        }
        let s = split_ratfunc(&p, false)?;
        pts.extend(s.roots.keys().cloned());
    }
    Ok(pts)
}

pub fn parse_ring(src: &str) -> Result<RingContext> {
    let s = src.trim();
    let (head, arg) = match s.find('[') {
        Some(k) => {
            if !s.ends_with(']') {
                return Err(bad(src, "missing ']'"));
            }
            (&s[..k], Some(&s[k + 1..s.len() - 1]))
        }
        None => (s, None),
    };
    match (head, arg) {
        ("line", None) => Ok(RingContext::line()),
        ("line", Some(a)) => {
            let list = a.trim().strip_prefix("inv=").ok_or_else(|| bad(src, "expected inv=..."))?;
            RingContext::affine_line(inverted_points(src, list)?)
        }
        ("prime-local", Some(a)) => RingContext::prime_local(parse(a)?.eval_scalar()?),
        ("circle", None) => Ok(RingContext::CircleForm),
        ("icircle", None) => Ok(RingContext::ImaginaryCircleForm),
        ("proj-line", None) => Ok(RingContext::ProjectiveLine),
        ("conic", None) => Ok(RingContext::ProjectiveConic),
        ("cusp", None) => Ok(RingContext::CuspCubic),
        _ => Err(bad(src, "unknown ring")),
    }
}
