//! Arithmetic in the prime field GF(p), restricted to p ≡ 3 (mod 4).
//!
//! Nonzero elements split into quadratic residues (the "positive" half) and
//! nonresidues. Because −1 is a nonresidue for these primes, exactly one of
//! `a` and `p − a` is a residue, which is what makes the signed modulus
//! [`GfElem::modulus`] well defined.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest prime accepted. Keeps every product of two residues inside a `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// Default ceiling for operations that sweep all p² − 1 points of the plane.
pub const DEFAULT_TABLE_CEILING: u64 = 127;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrimeKind {
    /// p = 2ⁿ − 1 with n > 2.
    Mersenne,
    Generic,
}

/// A validated odd prime with p ≡ 3 (mod 4).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime {
    p: u64,
    kind: PrimeKind,
}

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME || p % 4 != 3 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        let kind = if p >= 7 && (p + 1).is_power_of_two() { PrimeKind::Mersenne } else { PrimeKind::Generic };
        Ok(Prime { p, kind })
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.p
    }

    pub fn kind(self) -> PrimeKind {
        self.kind
    }

    pub fn is_mersenne(self) -> bool {
        self.kind == PrimeKind::Mersenne
    }

    /// Order of the multiplicative group of GI(p), p² − 1.
    pub fn full_order(self) -> u64 {
        self.p * self.p - 1
    }

    /// Order of the unimodular group G₁, p + 1.
    pub fn unimodular_order(self) -> u64 {
        self.p + 1
    }

    /// Order of the supra-unimodular group Gₛ, 2(p + 1). Plays the role of 2π.
    pub fn phase_order(self) -> u64 {
        2 * (self.p + 1)
    }

    /// Order of the modulus group G_r, (p − 1)/2.
    pub fn modulus_order(self) -> u64 {
        (self.p - 1) / 2
    }

    pub fn zero(self) -> GfElem {
        GfElem { value: 0, prime: self }
    }

    pub fn one(self) -> GfElem {
        GfElem { value: 1, prime: self }
    }

    /// Reduces an arbitrary signed integer into the field.
    pub fn elem(self, value: i64) -> GfElem {
        let r = value.rem_euclid(self.p as i64) as u64;
        GfElem { value: r, prime: self }
    }

    /// Iterates the nonzero elements 1, 2, …, p − 1.
    pub fn nonzero_elements(self) -> impl Iterator<Item = GfElem> {
        (1..self.p).map(move |v| GfElem { value: v, prime: self })
    }

    /// Fails with [`Error::CeilingExceeded`] when p is above `ceiling`.
    pub fn check_ceiling(self, ceiling: u64) -> Result<()> {
        if self.p > ceiling {
            Err(Error::CeilingExceeded { p: self.p, ceiling })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

/// An element of GF(p) held as its canonical residue in [0, p − 1].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GfElem {
    value: u64,
    prime: Prime,
}

impl GfElem {
    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn prime(self) -> Prime {
        self.prime
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: GfElem) -> Result<()> {
        if self.prime == other.prime {
            Ok(())
        } else {
            Err(Error::PrimeMismatch { left: self.prime.p, right: other.prime.p })
        }
    }

    pub fn checked_add(self, other: GfElem) -> Result<GfElem> {
        self.same_field(other)?;
        Ok(self.raw_add(other.value))
    }

    pub fn checked_sub(self, other: GfElem) -> Result<GfElem> {
        self.same_field(other)?;
        Ok(self.raw_add(self.prime.p - other.value))
    }

    pub fn checked_mul(self, other: GfElem) -> Result<GfElem> {
        self.same_field(other)?;
        Ok(self.raw_mul(other.value))
    }

    #[inline]
    fn raw_add(self, v: u64) -> GfElem {
        let mut s = self.value + v;
        if s >= self.prime.p {
            s -= self.prime.p;
        }
        GfElem { value: s, prime: self.prime }
    }

    #[inline]
    fn raw_mul(self, v: u64) -> GfElem {
        GfElem { value: self.value * v % self.prime.p, prime: self.prime }
    }

    pub fn pow(self, exp: u64) -> GfElem {
        GfElem { value: pow_mod(self.value, exp, self.prime.p), prime: self.prime }
    }

    pub fn inv(self) -> Result<GfElem> {
        if self.is_zero() {
            return Err(Error::Zero("inversion"));
        }
        Ok(self.pow(self.prime.p - 2))
    }

    /// Euler's criterion: a^((p−1)/2) ≡ 1.
    pub fn is_quadratic_residue(self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::Zero("quadratic residuosity"));
        }
        Ok(self.pow((self.prime.p - 1) / 2).value == 1)
    }

    /// The signed modulus: `a` when `a` is a residue (or zero), `p − a` otherwise.
    /// The result is always a residue or zero.
    pub fn modulus(self) -> GfElem {
        match self.is_quadratic_residue() {
            Ok(false) => -self,
            _ => self,
        }
    }

    /// Canonical root a^((p+1)/4). The other root is its negation; apply
    /// [`GfElem::modulus`] to pick the residue-valued one.
    pub fn sqrt(self) -> Result<GfElem> {
        if !self.is_zero() && !self.is_quadratic_residue()? {
            return Err(Error::NotQuadraticResidue(self.value, self.prime.p));
        }
        Ok(self.pow((self.prime.p + 1) / 4))
    }
}

impl fmt::Display for GfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn assert_same(a: GfElem, b: GfElem) {
    assert!(a.prime == b.prime, "mixed GF({}) and GF({}) operands", a.prime.p, b.prime.p);
}

impl Add for GfElem {
    type Output = GfElem;
    fn add(self, rhs: GfElem) -> GfElem {
        assert_same(self, rhs);
        self.raw_add(rhs.value)
    }
}

impl Sub for GfElem {
    type Output = GfElem;
    fn sub(self, rhs: GfElem) -> GfElem {
        assert_same(self, rhs);
        self.raw_add(self.prime.p - rhs.value)
    }
}

impl Mul for GfElem {
    type Output = GfElem;
    fn mul(self, rhs: GfElem) -> GfElem {
        assert_same(self, rhs);
        self.raw_mul(rhs.value)
    }
}

impl Neg for GfElem {
    type Output = GfElem;
    fn neg(self) -> GfElem {
        GfElem { value: (self.prime.p - self.value) % self.prime.p, prime: self.prime }
    }
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    let mut acc = 1u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Trial division. Inputs are bounded by [`MAX_PRIME`] in practice.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors in ascending order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All positive divisors in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).into_iter().fold(n, |acc, q| acc / q * (q - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, v: i64) -> GfElem {
        Prime::new(p).unwrap().elem(v)
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(7).is_ok());
        assert!(Prime::new(3).is_ok());
        assert_eq!(Prime::new(8), Err(Error::InvalidPrime(8)));
        assert_eq!(Prime::new(13), Err(Error::InvalidPrime(13)));
        assert_eq!(Prime::new(15), Err(Error::InvalidPrime(15)));
        assert_eq!(Prime::new(1), Err(Error::InvalidPrime(1)));
    }

    #[test]
    fn mersenne_flag() {
        assert!(Prime::new(7).unwrap().is_mersenne());
        assert!(Prime::new(31).unwrap().is_mersenne());
        assert!(Prime::new(127).unwrap().is_mersenne());
        // 3 = 2² − 1 but n must exceed 2
        assert!(!Prime::new(3).unwrap().is_mersenne());
        assert!(!Prime::new(11).unwrap().is_mersenne());
        assert!(!Prime::new(23).unwrap().is_mersenne());
    }

    #[test]
    fn euler_criterion() {
        assert_eq!(gf(7, 2).is_quadratic_residue(), Ok(true));
        assert_eq!(gf(7, 3).is_quadratic_residue(), Ok(false));
        assert_eq!(gf(7, 1).is_quadratic_residue(), Ok(true));
        assert!(matches!(gf(7, 0).is_quadratic_residue(), Err(Error::Zero(_))));
    }

    #[test]
    fn signed_modulus() {
        assert_eq!(gf(7, 3).modulus().value(), 4);
        assert_eq!(gf(31, 13).modulus().value(), 18);
        assert_eq!(gf(7, 1).modulus().value(), 1);
        assert_eq!(gf(7, 0).modulus().value(), 0);
    }

    #[test]
    fn square_roots() {
        assert_eq!(gf(31, 18).sqrt().unwrap().value(), 7);
        assert_eq!(gf(7, 4).sqrt().unwrap().value(), 2);
        assert_eq!(gf(7, 1).sqrt().unwrap().value(), 1);
        assert_eq!(gf(7, 0).sqrt().unwrap().value(), 0);
        assert_eq!(gf(7, 3).sqrt(), Err(Error::NotQuadraticResidue(3, 7)));
    }

    #[test]
    fn inverses() {
        assert_eq!(gf(7, 5).inv().unwrap().value(), 3);
        assert_eq!(gf(31, 7).inv().unwrap().value(), 9);
        assert_eq!(gf(7, 1).inv().unwrap().value(), 1);
        assert!(matches!(gf(7, 0).inv(), Err(Error::Zero(_))));
    }

    #[test]
    fn mismatched_fields() {
        let r = gf(7, 1).checked_add(gf(11, 1));
        assert_eq!(r, Err(Error::PrimeMismatch { left: 7, right: 11 }));
        assert!(gf(7, 1).checked_mul(gf(7, 3)).is_ok());
    }

    #[test]
    fn residue_partition() {
        for p in [3u64, 7, 11, 19, 23, 31, 43] {
            let prime = Prime::new(p).unwrap();
            let mut qr = 0;
            for a in prime.nonzero_elements() {
                let r = a.is_quadratic_residue().unwrap();
                assert_ne!(r, (-a).is_quadratic_residue().unwrap());
                assert_eq!(a.modulus(), (-a).modulus());
                assert!(a.modulus().is_quadratic_residue().unwrap());
                let root = (a * a).modulus().sqrt().unwrap();
                assert!(root == a || root == -a);
                qr += r as u64;
            }
            assert_eq!(qr, (p - 1) / 2);
        }
    }

    #[test]
    fn number_helpers() {
        assert_eq!(prime_factors(48), vec![2, 3]);
        assert_eq!(prime_factors(120), vec![2, 3, 5]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(48), 16);
        assert_eq!(lcm(6, 4), 12);
    }
}
