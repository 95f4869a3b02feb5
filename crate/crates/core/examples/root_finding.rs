//! Roots over Q(i) with multiplicities, and the residual factor when a
//! polynomial does not split.

use polargroup::splitter::{split_poly, Split};
use polargroup::{GaussianRational, PolyQi};

fn main() -> polargroup::Result<()> {
    let roots =
        [GaussianRational::from_ints(1, 2), GaussianRational::from_ints(-3, 0), GaussianRational::from_ints(0, 1)];
    let mut f = PolyQi::linear(&roots[0]).pow(2);
    for z in &roots[1..] {
        f = &f * &PolyQi::linear(z);
    }
    let g = &f * &PolyQi::from_ints(&[-2, 0, 1]);
    for p in [f, g, PolyQi::from_ints(&[1, 0, 0, 0, 1])] {
        print!("{}: ", p.fmt_var("x"));
        match split_poly(&p)? {
            Split::Full(s) => println!(
                "unit {} roots {:?}",
                s.unit,
                s.roots.iter().map(|(z, e)| format!("({})^{}", z, e)).collect::<Vec<_>>()
            ),
            Split::Partial(r) => println!(
                "partial, roots {:?}, residual {}",
                r.split_part.roots.iter().map(|(z, e)| format!("({})^{}", z, e)).collect::<Vec<_>>(),
                r.residual.fmt_var("x")
            ),
        }
    }
    Ok(())
}
