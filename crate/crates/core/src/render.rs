//! SVG and terminal rendering of the Z plane.
//!
//! Circles are spaced by the rank of their radius, not its value, so the unit
//! circle is innermost and the rest follow in ascending integer order. Points
//! sit at θ·360/(2(p + 1)) degrees counter-clockwise from the positive real
//! axis and are coloured by multiplicative order. Output is deterministic.

use std::fmt::Write as _;
use std::io;

use crate::gf::divisors;
use crate::group::element_order;
use crate::zplane::{Trajectory, ZPlane};

/// Which points to draw.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PlaneView {
    #[default]
    All,
    /// The supra-unimodular group only.
    UnitCircle,
    /// Even powers of ε on the unit circle: the unimodular group.
    Unimodular,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderSpec {
    /// Width and height of the square canvas in pixels.
    pub size: u32,
    pub view: PlaneView,
    pub labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec { size: 640, view: PlaneView::All, labels: true }
    }
}

const PALETTE: [&str; 12] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
    "#393b79", "#637939",
];

struct Geometry {
    center: f64,
    outer: f64,
    circles: usize,
    phase: f64,
}

impl Geometry {
    fn new(plane: &ZPlane, spec: &RenderSpec) -> Geometry {
        let center = spec.size as f64 / 2.0;
        let circles = match spec.view {
            PlaneView::All => plane.circles.len(),
            _ => 1,
        };
        Geometry { center, outer: center * 0.82, circles, phase: plane.prime.phase_order() as f64 }
    }

    fn radius(&self, rank: usize) -> f64 {
        self.outer * (rank + 1) as f64 / self.circles as f64
    }

    fn xy(&self, rank: usize, theta: u64) -> (f64, f64) {
        let angle = theta as f64 * std::f64::consts::TAU / self.phase;
        let r = self.radius(rank);
        (self.center + r * angle.cos(), self.center - r * angle.sin())
    }
}

fn colour(plane: &ZPlane, order: u64) -> &'static str {
    let divs = divisors(plane.prime.full_order());
    let rank = divs.iter().position(|&d| d == order).unwrap_or(0);
    PALETTE[rank % PALETTE.len()]
}

/// Clean negative zero so equal inputs always print the same bytes.
fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

pub fn svg_string(plane: &ZPlane, overlay: Option<&Trajectory>, spec: &RenderSpec) -> String {
    let g = Geometry::new(plane, spec);
    let size = spec.size;
    let c = num(g.center);
    let mut s = String::new();

    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(s, "<title>Z plane over GF({})</title>", plane.prime);
    s.push_str(concat!(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 8 8\" refX=\"7\" refY=\"4\" markerWidth=\"6\" ",
        "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#444\"/></marker></defs>\n"
    ));
    let _ = writeln!(s, r#"<rect width="{size}" height="{size}" fill="white"/>"#);
    let _ =
        writeln!(s, r##"<line class="axis" x1="0" y1="{c}" x2="{size}" y2="{c}" stroke="#bbb" stroke-width="1"/>"##);
    let _ =
        writeln!(s, r##"<line class="axis" x1="{c}" y1="0" x2="{c}" y2="{size}" stroke="#bbb" stroke-width="1"/>"##);

    for (rank, circle) in plane.circles.iter().enumerate().take(g.circles) {
        let _ = writeln!(
            s,
            r##"<circle class="ring" data-radius="{}" cx="{c}" cy="{c}" r="{}" fill="none" stroke="#999" stroke-dasharray="4 3"/>"##,
            circle.radius,
            num(g.radius(rank))
        );
    }

    for (rank, circle) in plane.circles.iter().enumerate().take(g.circles) {
        for &(theta, element) in &circle.points {
            if spec.view == PlaneView::Unimodular && theta % 2 == 1 {
                continue;
            }
            let order = element_order(element).expect("nonzero");
            let (x, y) = g.xy(rank, theta);
            let (x, y) = (num(x), num(y));
            let _ = writeln!(
                s,
                r#"<circle class="point" data-element="{element}" data-order="{order}" data-theta="{theta}" cx="{x}" cy="{y}" r="4" fill="{}"/>"#,
                colour(plane, order)
            );
            if spec.labels {
                let _ = writeln!(
                    s,
                    r##"<text class="label" x="{x}" y="{y}" dx="5" dy="-5" font-size="9" font-family="monospace" fill="#333">{element}</text>"##
                );
            }
        }
    }

    if let Some(t) = overlay {
        let mut pts: Vec<String> = t
            .steps
            .iter()
            .filter_map(|step| {
                let rank = plane.circle_rank(step.polar.r)?;
                let (x, y) = g.xy(rank.min(g.circles - 1), step.polar.theta);
                Some(format!("{},{}", num(x), num(y)))
            })
            .collect();
        // close the loop back to the first point
        if let Some(first) = pts.first().cloned() {
            pts.push(first);
        }
        let _ = writeln!(
            s,
            r##"<polyline class="trajectory" data-start="{}" data-order="{}" points="{}" fill="none" stroke="#444" stroke-width="1.2" marker-mid="url(#arrow)" marker-end="url(#arrow)"/>"##,
            t.start,
            t.order,
            pts.join(" ")
        );
    }

    s.push_str("</svg>\n");
    s
}

pub fn render_svg<W: io::Write>(
    plane: &ZPlane,
    overlay: Option<&Trajectory>,
    spec: &RenderSpec,
    out: &mut W,
) -> io::Result<()> {
    out.write_all(svg_string(plane, overlay, spec).as_bytes())
}

/// Character-grid approximation. Points show the rank of their circle
/// (`1` for the unit circle), trajectory points show `*`.
pub fn render_text(plane: &ZPlane, overlay: Option<&Trajectory>) -> String {
    const W: usize = 61;
    const H: usize = 31;
    let mut grid = vec![vec![' '; W]; H];
    for (x, cell) in grid[H / 2].iter_mut().enumerate() {
        *cell = if x == W / 2 { '+' } else { '-' };
    }
    for row in grid.iter_mut() {
        if row[W / 2] == ' ' {
            row[W / 2] = '|';
        }
    }

    let n = plane.circles.len();
    let phase = plane.prime.phase_order() as f64;
    let place = |rank: usize, theta: u64| -> (usize, usize) {
        let angle = theta as f64 * std::f64::consts::TAU / phase;
        let r = (rank + 1) as f64 / n as f64;
        let x = (W as f64 / 2.0) + r * (W as f64 / 2.0 - 1.0) * angle.cos();
        let y = (H as f64 / 2.0) - r * (H as f64 / 2.0 - 1.0) * angle.sin();
        ((x.floor() as usize).min(W - 1), (y.floor() as usize).min(H - 1))
    };

    for (rank, circle) in plane.circles.iter().enumerate() {
        let glyph = char::from_digit(((rank + 1) % 36) as u32, 36).unwrap_or('o');
        for &(theta, _) in &circle.points {
            let (x, y) = place(rank, theta);
            grid[y][x] = glyph;
        }
    }
    if let Some(t) = overlay {
        for step in &t.steps {
            if let Some(rank) = plane.circle_rank(step.polar.r) {
                let (x, y) = place(rank, step.polar.theta);
                grid[y][x] = '*';
            }
        }
    }

    let mut out = format!(
        "approximate Z plane over GF({}): {} circles x {} points, epsilon = {}\n",
        plane.prime,
        n,
        plane.prime.phase_order(),
        plane.epsilon
    );
    for row in grid {
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out
}
