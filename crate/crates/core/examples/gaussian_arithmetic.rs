//! Arithmetic in GF(p) and GI(p): residues, moduli, square roots, inverses
//! and the Frobenius map.
//!
//!     cargo run --example gaussian_arithmetic -- 7

use galois_z::{GiElem, Prime};

fn main() -> galois_z::Result<()> {
    let p: u64 = std::env::args().nth(1).map_or(7, |s| s.parse().expect("p must be an integer"));
    let prime = Prime::new(p)?;

    println!("GF({p}) residues and moduli");
    for a in prime.nonzero_elements() {
        let qr = a.is_quadratic_residue()?;
        let root = if qr { a.sqrt()?.value().to_string() } else { "-".into() };
        println!("  a = {:>3}  QR = {:<5}  |a| = {:>3}  sqrt = {root}", a.value(), qr, a.modulus().value());
    }

    let z = GiElem::new(prime, 6, 4);
    let w = GiElem::new(prime, 3, 2);
    println!();
    println!("in GI({p}) with z = {z}, w = {w}:");
    println!("  z + w   = {}", z + w);
    println!("  z · w   = {}", z * w);
    println!("  z⁻¹     = {}", z.inv()?);
    println!("  z*      = {}", z.conj());
    println!("  z^p     = {}", z.pow(p));
    println!("  norm(z) = {}", z.norm().value());
    println!("  |z|     = {}", z.modulus()?.value());
    Ok(())
}
