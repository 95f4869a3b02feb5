//! The anisotropic conic x1^2 + x2^2 + x0^2 = 0 in the chart t = (x1 + i x2)/x0,
//! sigma(t) = -1/t. Degree-zero classes map into the imaginary circle form;
//! the kernel of that map is generated by [t].

use polargroup::cli::expr::parse_value;
use polargroup::polar::identities::conic_relation;
use polargroup::polar::{class_of, projective_include};
use polargroup::{GaussianRational, RingContext};

fn main() -> polargroup::Result<()> {
    let conic = RingContext::ProjectiveConic;
    for src in ["(t-2)/(t-3)", "(t-2*i)/t", "(t-1-i)*(t+1)/(t^2+4)"] {
        let f = parse_value(src, "t", false)?;
        let c = class_of(&conic, &f)?;
        println!("{:<22} {:<28} icircle image {}", src, c.to_string(), projective_include(&c)?);
    }
    for z in [GaussianRational::from_ints(2, 0), GaussianRational::from_ints(1, 3)] {
        let check = conic_relation(&z)?;
        println!("{}: {}", check.label, check.holds());
    }
    Ok(())
}
