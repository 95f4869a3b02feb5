//! The cuspidal cubic T = C[x^2, x^3] inside C[x]. A monic split f lies in T
//! exactly when the reciprocals of its roots sum to zero.

use polargroup::cli::expr::parse_value;
use polargroup::polar::{delta_t_membership, reciprocal_sum, subalgebra_embed};

fn main() -> polargroup::Result<()> {
    for src in ["x^2-2*i", "(x-2*i)^2*(x+i)", "(x-2)^2*(x+1)", "x^4-1", "(x-1)*(x+2)"] {
        let f = parse_value(src, "x", false)?;
        let p = f.as_poly().expect("polynomial");
        match subalgebra_embed(&f) {
            Ok(c) => println!(
                "{:<28} sum 1/w = {:<6} class {}  in Delta_T: {}",
                src,
                reciprocal_sum(p).map(|s| s.to_string()).unwrap_or_else(|e| e.to_string()),
                c,
                delta_t_membership(&f)?
            ),
            Err(e) => println!("{:<28} {}", src, e),
        }
    }
    Ok(())
}
