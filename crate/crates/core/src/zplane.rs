//! The Z plane over GF(p).
//!
//! Every nonzero ζ = r·ε^θ sits on the circle of radius `r` at angle θ. There
//! are (p − 1)/2 circles, one per quadratic residue, each carrying 2(p + 1)
//! points, and together they cover GI(p)* exactly once.
//!
//! Because the modulus group and the unit circle have coprime orders, the pair
//! (log_ρ r, θ) folds by the Chinese remainder theorem into a single index
//! e ∈ [0, p² − 1) with ζ = (ρε)^e, where ρ generates the modulus group. That
//! index is what the radius-step law of an order trajectory is stated in.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{GfElem, Prime, DEFAULT_TABLE_CEILING};
use crate::gi::GiElem;
use crate::group::{check_gs_generator, element_order, find_gs_generator};
use crate::polar::{polar_unchecked, PolarForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    pub radius: GfElem,
    /// (θ, element) sorted by θ.
    pub points: Vec<(u64, GiElem)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPlane {
    pub prime: Prime,
    pub epsilon: GiElem,
    /// Ascending by the integer value of the radius.
    pub circles: Vec<Circle>,
}

impl ZPlane {
    pub fn point_count(&self) -> usize {
        self.circles.iter().map(|c| c.points.len()).sum()
    }

    /// Rank of `radius` among the circles, 0 for the unit circle.
    pub fn circle_rank(&self, radius: GfElem) -> Option<usize> {
        self.circles.iter().position(|c| c.radius == radius)
    }

    pub fn unit_circle(&self) -> &Circle {
        &self.circles[0]
    }

    /// Looks up the polar coordinates of an element already on the plane.
    pub fn locate(&self, z: GiElem) -> Option<(usize, u64)> {
        self.circles
            .iter()
            .enumerate()
            .find_map(|(rank, c)| c.points.iter().find(|&&(_, e)| e == z).map(|&(theta, _)| (rank, theta)))
    }

    pub fn to_json(&self) -> PlaneJson {
        PlaneJson {
            p: self.prime.value(),
            epsilon: self.epsilon.to_string(),
            circles: self
                .circles
                .iter()
                .map(|c| CircleJson {
                    radius: c.radius.value(),
                    points: c
                        .points
                        .iter()
                        .map(|&(theta, e)| PointJson {
                            theta,
                            element: e.to_string(),
                            order: element_order(e).expect("nonzero"),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaneJson {
    pub p: u64,
    pub epsilon: String,
    pub circles: Vec<CircleJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CircleJson {
    pub radius: u64,
    pub points: Vec<PointJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointJson {
    pub theta: u64,
    pub element: String,
    pub order: u64,
}

/// The powers ζ¹, ζ², …, ζ^N = 1 of an element of order N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trajectory {
    pub start: GiElem,
    pub steps: Vec<TrajectoryStep>,
    pub order: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrajectoryStep {
    pub k: u64,
    pub element: GiElem,
    pub polar: PolarForm,
}

impl Trajectory {
    pub fn to_json(&self) -> TrajectoryJson {
        TrajectoryJson {
            start: self.start.to_string(),
            order: self.order,
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    k: s.k,
                    element: s.element.to_string(),
                    r: s.polar.r.value(),
                    theta: s.polar.theta,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrajectoryJson {
    pub start: String,
    pub order: u64,
    pub steps: Vec<StepJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepJson {
    pub k: u64,
    pub element: String,
    pub r: u64,
    pub theta: u64,
}

/// Folds polar coordinates into a single index of the cyclic group.
#[derive(Clone, Debug)]
pub struct PlaneIndexer {
    prime: Prime,
    /// Generator of the modulus group.
    rho: GfElem,
    radius_log: HashMap<u64, u64>,
}

impl PlaneIndexer {
    pub fn new(prime: Prime) -> PlaneIndexer {
        let m = prime.modulus_order();
        let rho = prime
            .nonzero_elements()
            .filter(|a| a.is_quadratic_residue().unwrap_or(false))
            .find(|&a| (1..=m).find(|&k| a.pow(k).value() == 1) == Some(m))
            .expect("the modulus group is cyclic");
        let mut radius_log = HashMap::new();
        let mut cur = prime.one();
        for s in 0..m {
            radius_log.insert(cur.value(), s);
            cur = cur * rho;
        }
        PlaneIndexer { prime, rho, radius_log }
    }

    pub fn rho(&self) -> GfElem {
        self.rho
    }

    /// The generator ρ·ε of GI(p)* the index is a logarithm to.
    pub fn full_generator(&self, epsilon: GiElem) -> GiElem {
        epsilon.scale(self.rho)
    }

    pub fn index(&self, pf: &PolarForm) -> u64 {
        let m1 = self.prime.modulus_order();
        let m2 = self.prime.phase_order();
        let s = self.radius_log[&pf.r.value()];
        // smallest e ≡ θ (mod m2) that is also ≡ s (mod m1)
        (0..m1).map(|t| pf.theta + t * m2).find(|e| e % m1 == s).expect("coprime moduli")
    }
}

pub fn build_plane(prime: Prime) -> Result<ZPlane> {
    build_plane_with(prime, find_gs_generator(prime), DEFAULT_TABLE_CEILING)
}

/// Partitions GI(p)* into circles by converting every element to polar form.
pub fn build_plane_with(prime: Prime, epsilon: GiElem, ceiling: u64) -> Result<ZPlane> {
    prime.check_ceiling(ceiling)?;
    check_gs_generator(epsilon)?;
    let radii: Vec<GfElem> = prime.nonzero_elements().filter(|a| a.is_quadratic_residue().unwrap_or(false)).collect();
    let mut circles: Vec<Circle> = radii.iter().map(|&radius| Circle { radius, points: Vec::new() }).collect();
    let slot: HashMap<u64, usize> = radii.iter().enumerate().map(|(i, r)| (r.value(), i)).collect();

    for z in GiElem::nonzero_elements(prime) {
        let pf = polar_unchecked(z, epsilon)?;
        circles[slot[&pf.r.value()]].points.push((pf.theta, z));
    }
    for c in &mut circles {
        c.points.sort();
    }
    Ok(ZPlane { prime, epsilon, circles })
}

pub fn order_trajectory(z: GiElem) -> Result<Trajectory> {
    order_trajectory_with(z, find_gs_generator(z.prime()))
}

pub fn order_trajectory_with(z: GiElem, epsilon: GiElem) -> Result<Trajectory> {
    if z.is_zero() {
        return Err(Error::Zero("order trajectory"));
    }
    check_gs_generator(epsilon)?;
    let order = element_order(z)?;
    let mut steps = Vec::with_capacity(order as usize);
    let mut cur = z;
    for k in 1..=order {
        steps.push(TrajectoryStep { k, element: cur, polar: polar_unchecked(cur, epsilon)? });
        cur = cur * z;
    }
    Ok(Trajectory { start: z, steps, order })
}

/// How an order trajectory moves across the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadiusPattern {
    /// r = (p² − 1)/N.
    pub step: u64,
    /// θ of each successive point.
    pub thetas: Vec<u64>,
    /// θ_{k+1} − θ_k mod 2(p + 1); empty for a single-point trajectory.
    pub theta_increments: Vec<u64>,
    /// Plane index of each successive point.
    pub positions: Vec<u64>,
}

impl RadiusPattern {
    /// True when the increments are constant and the visited positions are
    /// exactly the multiples of `step`.
    pub fn satisfies_radius_law(&self) -> bool {
        let constant = self.theta_increments.windows(2).all(|w| w[0] == w[1]);
        let mut visited = self.positions.clone();
        visited.sort_unstable();
        let expected: Vec<u64> = (0..self.positions.len() as u64).map(|k| k * self.step).collect();
        constant && visited == expected
    }
}

pub fn trajectory_radius_pattern(t: &Trajectory) -> RadiusPattern {
    let prime = t.start.prime();
    let phase = prime.phase_order();
    let indexer = PlaneIndexer::new(prime);
    let thetas: Vec<u64> = t.steps.iter().map(|s| s.polar.theta).collect();
    let theta_increments = thetas.windows(2).map(|w| (w[1] + phase - w[0]) % phase).collect();
    let positions = t.steps.iter().map(|s| indexer.index(&s.polar)).collect();
    RadiusPattern { step: prime.full_order() / t.order, thetas, theta_increments, positions }
}
