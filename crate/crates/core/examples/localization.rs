//! Localizing the line at i, -i kills exactly the exponent at i; the section
//! lifts a class back by choosing a representative prime to the new units.

use polargroup::cli::expr::parse_value;
use polargroup::cli::ring::parse_ring;
use polargroup::polar::{class_of, localization_map, localization_section, newly_inverted};

fn main() -> polargroup::Result<()> {
    let small = parse_ring("line")?;
    let large = parse_ring("line[inv=(x^2+1)]")?;
    println!("newly inverted: {:?}", newly_inverted(&small, &large)?.iter().map(|z| z.to_string()).collect::<Vec<_>>());
    for src in ["(x-i)^2", "(x-i)*(x-2*i)", "(x-1-i)/(x+i)"] {
        let f = parse_value(src, "x", false)?;
        let c = class_of(&small, &f)?;
        let image = localization_map(&c, &large)?;
        println!("{:<16} {} -> {} (in kernel: {})", src, c, image, image.is_identity());
        let back = localization_section(&image, &small)?;
        println!("{:<16} section: {}", "", back);
    }

    // localizing at a prime leaves only the order of vanishing there
    let pl = parse_ring("prime-local[1+2*i]")?;
    let f = parse_value("(x-1-2*i)^3*(x-5)", "x", false)?;
    println!("prime-local[1+2i]: {}", class_of(&pl, &f)?);
    Ok(())
}
