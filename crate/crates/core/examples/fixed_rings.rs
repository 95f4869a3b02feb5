//! Presentations of the fixed rings over R, each verified symbolically.

use polargroup::cli::ring::parse_ring;

fn main() -> polargroup::Result<()> {
    for ring in ["line", "line[inv=0]", "circle", "icircle"] {
        let ctx = parse_ring(ring)?;
        let p = ctx.fixed_ring_generators()?;
        println!("{}:", ring);
        for (name, g) in &p.generators {
            println!("  {} = {}", name, g.fmt_var(ctx.var_name()));
        }
        if let Some(rel) = &p.relation {
            println!("  relation {}", rel);
        }
        if let Some((x, y, c)) = &p.unhalved {
            println!("  unhalved {}, {}: X^2+Y^2 = {}", x.fmt_var("t"), y.fmt_var("t"), c);
        }
        println!("  verified {}", p.verified());
    }
    Ok(())
}
