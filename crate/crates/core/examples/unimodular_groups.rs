//! Lists the unimodular group G₁ with element orders and prints the order
//! census of GI(p)* next to the count a cyclic group predicts.
//!
//!     cargo run --example unimodular_groups -- 11

use galois_z::group::{cyclic_census, element_order, enumerate_subgroup, order_census, symmetry_set, SubgroupKind};
use galois_z::Prime;

fn main() -> galois_z::Result<()> {
    let p: u64 = std::env::args().nth(1).map_or(7, |s| s.parse().expect("p must be an integer"));
    let prime = Prime::new(p)?;

    let mut g1 = enumerate_subgroup(prime, SubgroupKind::Unimodular);
    g1.sort_by_key(|&z| (element_order(z).unwrap_or(0), z));
    println!("G1 of GI({p}), order {}", g1.len());
    for z in &g1 {
        println!("  {:>8}  order {}", z.to_string(), element_order(*z)?);
    }

    if let Some(&gen) = g1.iter().next_back() {
        let orbit: Vec<String> = symmetry_set(gen)?.iter().map(|z| z.to_string()).collect();
        println!("coordinate symmetries of {gen}: {}", orbit.join(", "));
    }

    println!();
    println!("order census of GI({p})*");
    let census = order_census(prime);
    let predicted = cyclic_census(prime);
    for (&(n, count), &(_, phi)) in census.entries.iter().zip(&predicted.entries) {
        println!("  order {n:>4}: {count:>4} elements  (phi = {phi})");
    }
    println!("  total {}", census.total());
    Ok(())
}
