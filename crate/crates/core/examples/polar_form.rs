//! Polar form ζ = r·ε^θ for sample elements of GI(31) and GI(7), then
//! every element on one circle.
//!
//!     cargo run --example polar_form

use galois_z::group::{element_order, find_gs_generator, nth_root_element};
use galois_z::polar::{from_polar, to_polar};
use galois_z::{GiElem, Prime};

fn main() -> galois_z::Result<()> {
    let p31 = Prime::new(31)?;
    let zeta = GiElem::new(p31, 6, 16);
    let r = zeta.modulus()?;
    let unit = zeta.scale(r.inv()?);
    println!("p = 31: |{zeta}| = {}, ζ/r = {unit} of order {}", r.value(), element_order(unit)?);
    let eps31 = find_gs_generator(p31);
    let root = nth_root_element(8, eps31)?;
    println!("        ε = {eps31}; an 8th root of unity is {root}");

    let p7 = Prime::new(7)?;
    let eps = GiElem::new(p7, 3, 2);
    let pf = to_polar(GiElem::new(p7, 6, 4), eps)?;
    println!("p = 7:  6+4j = {}·({eps})^{}  ({:.1}°)", pf.r.value(), pf.theta, pf.degrees());

    println!();
    println!("circle r = 2 of GI(7), ε = {eps}:");
    let mut circle = Vec::new();
    for z in GiElem::nonzero_elements(p7) {
        let pf = to_polar(z, eps)?;
        if pf.r.value() == 2 {
            assert_eq!(from_polar(&pf), z);
            circle.push((pf.theta, z));
        }
    }
    circle.sort();
    for (theta, z) in circle {
        println!("  θ = {theta:>2}  {z}");
    }
    Ok(())
}
