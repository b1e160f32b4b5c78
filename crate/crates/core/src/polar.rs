//! Polar form ζ = r·ε^θ.
//!
//! `r` is the complex modulus of ζ, a quadratic residue of GF(p), and θ is
//! the discrete logarithm of ζ/r in base ε, a generator of the supra-unimodular
//! group. θ lives in [0, 2(p + 1)); that period is the finite-field 2π.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::GfElem;
use crate::gi::GiElem;
use crate::group::check_gs_generator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolarForm {
    pub r: GfElem,
    pub theta: u64,
    pub base: GiElem,
}

impl PolarForm {
    /// θ as degrees counter-clockwise, 2(p + 1) steps per turn.
    pub fn degrees(&self) -> f64 {
        self.theta as f64 * 360.0 / self.base.prime().phase_order() as f64
    }

    pub fn to_json(&self) -> PolarJson {
        PolarJson { r: self.r.value(), theta: self.theta, epsilon: self.base.to_string() }
    }
}

/// Wire form of a polar decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarJson {
    pub r: u64,
    pub theta: u64,
    pub epsilon: String,
}

pub fn to_polar(z: GiElem, epsilon: GiElem) -> Result<PolarForm> {
    if z.is_zero() {
        return Err(Error::Zero("polar form"));
    }
    check_gs_generator(epsilon)?;
    polar_unchecked(z, epsilon)
}

/// [`to_polar`] without re-validating the generator; used by sweeps that
/// have already checked it once.
pub(crate) fn polar_unchecked(z: GiElem, epsilon: GiElem) -> Result<PolarForm> {
    let r = z.modulus()?;
    let unit = z.scale(r.inv()?);
    let theta = bsgs(unit, epsilon)?;
    Ok(PolarForm { r, theta, base: epsilon })
}

pub fn from_polar(pf: &PolarForm) -> GiElem {
    pf.base.pow(pf.theta).scale(pf.r)
}

/// The unique θ in [0, 2(p + 1)) with ε^θ = β.
pub fn discrete_log(beta: GiElem, epsilon: GiElem) -> Result<u64> {
    check_gs_generator(epsilon)?;
    bsgs(beta, epsilon)
}

/// Baby-step giant-step over the cyclic group of order 2(p + 1).
fn bsgs(beta: GiElem, epsilon: GiElem) -> Result<u64> {
    let order = epsilon.prime().phase_order();
    let m = (order as f64).sqrt().ceil() as u64;

    let mut baby = HashMap::with_capacity(m as usize);
    let mut cur = GiElem::one(epsilon.prime());
    for j in 0..m {
        baby.entry(cur).or_insert(j);
        cur = cur * epsilon;
    }

    let giant = epsilon.pow(m).inv()?;
    let mut gamma = beta;
    for i in 0..=m {
        if let Some(&j) = baby.get(&gamma) {
            let theta = (i * m + j) % order;
            return Ok(theta);
        }
        gamma = gamma * giant;
    }
    Err(Error::NotInGroup { element: beta, base: epsilon })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Prime;
    use crate::group::find_gs_generator;

    fn gi(p: u64, a: i64, b: i64) -> GiElem {
        GiElem::new(Prime::new(p).unwrap(), a, b)
    }

    #[test]
    fn known_conversions() {
        let pf = to_polar(gi(31, 6, 16), gi(31, 23, 20)).unwrap();
        assert_eq!((pf.r.value(), pf.theta), (7, 1));
        let pf = to_polar(gi(7, 6, 4), gi(7, 3, 2)).unwrap();
        assert_eq!((pf.r.value(), pf.theta), (2, 1));
        let pf = to_polar(gi(7, 1, 0), gi(7, 3, 2)).unwrap();
        assert_eq!((pf.r.value(), pf.theta), (1, 0));
    }

    #[test]
    fn reconstruct() {
        let p31 = Prime::new(31).unwrap();
        let pf = PolarForm { r: p31.elem(7), theta: 1, base: gi(31, 23, 20) };
        assert_eq!(from_polar(&pf), gi(31, 6, 16));
        let p7 = Prime::new(7).unwrap();
        let pf = PolarForm { r: p7.elem(2), theta: 1, base: gi(7, 3, 2) };
        assert_eq!(from_polar(&pf), gi(7, 6, 4));
        let pf = PolarForm { r: p7.one(), theta: 0, base: gi(7, 3, 2) };
        assert!(from_polar(&pf).is_one());
    }

    #[test]
    fn logs() {
        let eps = gi(7, 3, 2);
        assert_eq!(discrete_log(gi(7, 1, 0), eps), Ok(0));
        assert_eq!(discrete_log(eps, eps), Ok(1));
        assert_eq!(discrete_log(gi(7, 6, 0), eps), Ok(8));
        assert_eq!(eps.pow(8), gi(7, 6, 0));
        // 2 has modulus 2, so it is off the unit circle
        assert_eq!(discrete_log(gi(7, 2, 0), eps), Err(Error::NotInGroup { element: gi(7, 2, 0), base: eps }));
        assert!(matches!(discrete_log(eps, gi(7, 2, 2)), Err(Error::NotGenerator(_))));
    }

    #[test]
    fn zero_has_no_polar_form() {
        assert_eq!(to_polar(gi(7, 0, 0), gi(7, 3, 2)), Err(Error::Zero("polar form")));
    }

    #[test]
    fn every_theta_recovered() {
        for p in [3u64, 7, 11, 19, 23] {
            let eps = find_gs_generator(Prime::new(p).unwrap());
            for theta in 0..2 * (p + 1) {
                assert_eq!(discrete_log(eps.pow(theta), eps), Ok(theta));
            }
        }
    }

    #[test]
    fn degrees() {
        let pf = to_polar(gi(7, 0, 1), gi(7, 3, 2)).unwrap();
        // j squares to −1, so it sits a quarter or three quarters of a turn round
        assert!(pf.degrees() == 90.0 || pf.degrees() == 270.0);
    }
}
