//! Classes on the affine line and its localizations: the class of f records
//! the exponents at upper half plane roots, normalized against conjugates.

use polargroup::cli::expr::parse_value;
use polargroup::cli::ring::parse_ring;
use polargroup::polar::{class_of, classes_equal};

fn main() -> polargroup::Result<()> {
    for (ring, src) in [
        ("line", "x^2+1"),
        ("line", "x-i"),
        ("line", "(x-i)^3*(x+i)*(x-2)"),
        ("line", "(x-1-i)/(x-2*i)"),
        ("line[inv=i,-i]", "(x-i)^3*(x-1-i)"),
        ("line[inv=0]", "x*(x-i)"),
    ] {
        let ctx = parse_ring(ring)?;
        let f = parse_value(src, ctx.var_name(), false)?;
        println!("{:<16} {:<22} {}", ring, src, class_of(&ctx, &f)?);
    }

    let line = parse_ring("line")?;
    let f = parse_value("(x-i)^2", "x", false)?;
    let g = parse_value("(x-i)*(x-i)*(x^2+4)", "x", false)?;
    println!("[(x-i)^2] = [(x-i)^2 (x^2+4)]: {}", classes_equal(&line, &f, &g)?);
    Ok(())
}
