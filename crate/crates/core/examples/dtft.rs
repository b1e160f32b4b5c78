//! The transform on the unit circle Z = ε^θ, θ = 0, …, 2p + 1.

use galois_z::ffzt::ff_dtft;
use galois_z::group::find_gs_generator;
use galois_z::sequence::SequenceSpec;
use galois_z::Prime;

fn main() -> galois_z::Result<()> {
    let p = Prime::new(7)?;
    let eps = find_gs_generator(p);
    let x = SequenceSpec::exponential(p.one(), p.elem(3));
    println!("X(ε^θ) for x[n] = 3ⁿu[n], ε = {eps}");
    for theta in 0..p.phase_order() {
        let z = eps.pow(theta);
        match ff_dtft(&x, theta, eps)?.value() {
            Some(v) => println!("  θ = {theta:>2}  Z = {:>5}  X = {v}", z.to_string()),
            None => println!("  θ = {theta:>2}  Z = {:>5}  divergent", z.to_string()),
        }
    }
    Ok(())
}
