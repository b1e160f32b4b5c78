//! Exact arithmetic on the complex plane over GF(p), p ≡ 3 (mod 4).
//!
//! The crate builds up from the prime field to the finite-field Z transform:
//!
//! - [`gf`]: GF(p) with Euler's criterion, the signed modulus and square roots.
//! - [`gi`]: Gaussian integers a + jb, a field isomorphic to GF(p²).
//! - [`group`]: element orders, the unimodular, supra-unimodular and modulus
//!   subgroups, generators and the order census.
//! - [`polar`]: ζ = r·ε^θ via a baby-step giant-step discrete logarithm.
//! - [`zplane`]: concentric circles, order trajectories, [`render`] to SVG.
//! - [`sequence`] and [`cesaro`]: eventually periodic sequences and their
//!   Cesàro sums.
//! - [`ffzt`]: the Z transform, closed forms, inverse transform and DTFT.
//!
//! ```
//! use galois_z::{gi::GiElem, gf::Prime, polar::to_polar};
//!
//! let p = Prime::new(31).unwrap();
//! let zeta = GiElem::new(p, 6, 16);
//! let pf = to_polar(zeta, GiElem::new(p, 23, 20)).unwrap();
//! assert_eq!((pf.r.value(), pf.theta), (7, 1));
//! ```

pub mod cesaro;
pub mod cli;
pub mod error;
pub mod ffzt;
pub mod gf;
pub mod gi;
pub mod group;
pub mod polar;
pub mod render;
pub mod sequence;
pub mod zplane;

pub use error::{Error, Result};
pub use gf::{GfElem, Prime};
pub use gi::GiElem;
