//! Order trajectories: the powers ζ, ζ², …, ζ^N = 1 on the Z plane, with the
//! step (p² − 1)/N between visited positions.
//!
//!     cargo run --example order_trajectory -- 7 2j trajectory.svg

use galois_z::render::{svg_string, RenderSpec};
use galois_z::zplane::{build_plane, order_trajectory, trajectory_radius_pattern};
use galois_z::{GiElem, Prime};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p: u64 = args.first().map_or(Ok(7), |s| s.parse())?;
    let prime = Prime::new(p)?;
    let starts: Vec<GiElem> = match args.get(1) {
        Some(s) => vec![GiElem::parse(s, prime)?],
        None => ["2j", "3+3j", "6+4j"].iter().map(|s| GiElem::parse(s, prime)).collect::<Result<_, _>>()?,
    };

    for &z in &starts {
        let t = order_trajectory(z)?;
        let pattern = trajectory_radius_pattern(&t);
        println!("{z}: order {}, step {}, law holds: {}", t.order, pattern.step, pattern.satisfies_radius_law());
        for s in &t.steps {
            println!(
                "  k = {:>2}  {:>6}  r = {}  θ = {:>2}",
                s.k,
                s.element.to_string(),
                s.polar.r.value(),
                s.polar.theta
            );
        }
    }

    if let Some(path) = args.get(2) {
        let t = order_trajectory(starts[0])?;
        std::fs::write(path, svg_string(&build_plane(prime)?, Some(&t), &RenderSpec::default()))?;
        println!("wrote {path}");
    }
    Ok(())
}
