//! Cesàro sums of eventually periodic series over GF(7).

use galois_z::cesaro::{cesaro_sum, geometric_cesaro, partial_sums};
use galois_z::sequence::SequenceSpec;
use galois_z::{GiElem, Prime};

fn show(label: &str, x: &SequenceSpec) {
    let sums: Vec<u64> = partial_sums(x, 14).iter().map(|s| s.value()).collect();
    let v = cesaro_sum(x);
    let sigma = v.sigma.map_or("divergent".to_string(), |s| s.value().to_string());
    println!("{label:<22} S = {sums:?}");
    println!("{:<22} P = {}, preperiod = {}, σ = {sigma}", "", v.period, v.preperiod);
}

fn main() -> galois_z::Result<()> {
    let p = Prime::new(7)?;
    show("3ⁿu[n]", &SequenceSpec::exponential(p.one(), p.elem(3)));
    show("u[n]", &SequenceSpec::unit_step(p));
    show("δ[n]", &SequenceSpec::impulse(p));
    show("Σ 5⁻ᵏ", &SequenceSpec::exponential(p.one(), p.elem(5).inv()?));
    show("prefix 2,0,0 then 3ⁿ", &SequenceSpec::parse("prefix=2,0,0;tail=1,3,2,6,4,5", p)?);

    println!();
    println!("geometric series Σ Zᵏ over GI(7):");
    for z in [GiElem::new(p, 3, 0), GiElem::new(p, 2, 5), GiElem::one(p)] {
        match geometric_cesaro(z).value() {
            Some(v) => println!("  Z = {z}: {v}"),
            None => println!("  Z = {z}: divergent"),
        }
    }
    Ok(())
}
