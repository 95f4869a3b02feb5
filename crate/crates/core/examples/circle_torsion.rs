//! The circle form C[t, 1/t], sigma(t) = 1/t: every boundary point gives the
//! same class of order two, and t - 1 is not a norm.

use polargroup::cli::expr::parse_value;
use polargroup::polar::class_of;
use polargroup::{GaussianRational, RatFuncQi, RingContext};

fn main() -> polargroup::Result<()> {
    let ctx = RingContext::CircleForm;
    for src in ["t-1", "t-i", "t+1", "t-(3+4*i)/5", "5*t-3+4*i"] {
        let f = parse_value(src, "t", true)?;
        let c = class_of(&ctx, &f)?;
        println!("{:<14} class {:<8} order {}", src, c.to_string(), c.order());
    }

    let c = class_of(&ctx, &RatFuncQi::linear(&GaussianRational::from_ints(0, 1)))?;
    println!("[t-i]^2 trivial: {}", c.pow(2).is_identity());
    println!("oracle on t-1: {}", ctx.triviality_oracle(&parse_value("t-1", "t", true)?)?);

    // off the boundary the class is free
    let g = parse_value("(t-2)*(t-3*i)", "t", true)?;
    println!("(t-2)(t-3i): {} order {}", class_of(&ctx, &g)?, class_of(&ctx, &g)?.order());
    Ok(())
}
