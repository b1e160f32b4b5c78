//! Draws the finite-field Z plane as SVG.
//!
//!     cargo run --example z_plane_svg -- 11 plane.svg

use std::fs::File;
use std::io::BufWriter;

use galois_z::render::{render_svg, render_text, RenderSpec};
use galois_z::zplane::build_plane;
use galois_z::Prime;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map_or(Ok(7), |s| s.parse())?;
    let path = args.next().unwrap_or_else(|| format!("zplane-{p}.svg"));

    let plane = build_plane(Prime::new(p)?)?;
    println!(
        "GI({p})*: {} circles × {} points, ε = {}",
        plane.circles.len(),
        plane.circles[0].points.len(),
        plane.epsilon
    );
    if p <= 11 {
        print!("{}", render_text(&plane, None));
    }

    let mut out = BufWriter::new(File::create(&path)?);
    render_svg(&plane, None, &RenderSpec::default(), &mut out)?;
    println!("wrote {path}");
    Ok(())
}
