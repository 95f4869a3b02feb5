//! The triviality oracle decides f in B* K* from sigma(f)/f alone and is
//! independent of class normal forms; here the two are compared.

use polargroup::cli::expr::parse_value;
use polargroup::cli::ring::parse_ring;
use polargroup::polar::class_of;

fn main() -> polargroup::Result<()> {
    for (ring, src) in [
        ("line", "(x-i)/(x+i)"),
        ("line", "(x-i)*(x+i)"),
        ("circle", "t-1"),
        ("circle", "(t-1)^2"),
        ("icircle", "t^3*(t-2)*(t+1/2)"),
        ("proj-line", "(x-i)/(x+i)"),
        ("prime-local[i]", "(x-i)/(x-3)"),
        ("conic", "(t-2)/(t+1/2)"),
    ] {
        let ctx = parse_ring(ring)?;
        let f = parse_value(src, ctx.var_name(), ctx.is_laurent())?;
        let oracle = ctx.triviality_oracle(&f)?;
        let normal_form = class_of(&ctx, &f)?.is_identity();
        println!("{:<15} {:<20} oracle {:<5} normal form {:<5}", ring, src, oracle, normal_form);
        assert_eq!(oracle, normal_form);
    }
    Ok(())
}
