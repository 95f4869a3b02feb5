//! Polar factorization f = r * d with r fixed by sigma and d free of real
//! divisors. The gcd route and the root pairing route agree up to units.

use polargroup::cli::expr::parse_value;
use polargroup::cli::ring::parse_ring;
use polargroup::polar::{delta_membership, polar_factorize_with, FactorMethod};

fn main() -> polargroup::Result<()> {
    for (ring, src) in [
        ("line", "(x^2+1)*(x-i)^2*(x-3)"),
        ("line", "(x^2-2)*(x-2*i)"),
        ("icircle", "(t-2)^2*(t+3*i)"),
        ("circle", "(t-2)*(t-1/2)*(t-5)"),
        ("line[inv=0]", "x^3*(x-1-i)*(x-1+i)"),
    ] {
        let ctx = parse_ring(ring)?;
        let v = ctx.var_name();
        let f = parse_value(src, v, ctx.is_laurent())?;
        println!("{} in {}", src, ring);
        for m in [FactorMethod::Gcd, FactorMethod::Pairing] {
            match polar_factorize_with(&ctx, &f, m) {
                Ok(pf) => println!(
                    "  {:?}: real {}  delta {}  (delta member: {})",
                    m,
                    pf.real_part.fmt_var(v),
                    pf.delta_part.fmt_var(v),
                    delta_membership(&ctx, &pf.delta_part)?
                ),
                Err(e) => println!("  {:?}: {}", m, e),
            }
        }
    }
    Ok(())
}
