//! Gaussian integers a + jb over GF(p), j² = −1.
//!
//! Since −1 has no square root in GF(p) for p ≡ 3 (mod 4), these pairs form a
//! field isomorphic to GF(p²). Elements order lexicographically by (re, im),
//! which is the canonical order used by every enumeration in the crate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gf::{GfElem, Prime};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GiElem {
    re: GfElem,
    im: GfElem,
}

impl GiElem {
    pub fn new(prime: Prime, re: i64, im: i64) -> GiElem {
        GiElem { re: prime.elem(re), im: prime.elem(im) }
    }

    pub fn from_parts(re: GfElem, im: GfElem) -> Result<GiElem> {
        if re.prime() != im.prime() {
            return Err(Error::PrimeMismatch { left: re.prime().value(), right: im.prime().value() });
        }
        Ok(GiElem { re, im })
    }

    pub fn from_real(re: GfElem) -> GiElem {
        GiElem { re, im: re.prime().zero() }
    }

    pub fn zero(prime: Prime) -> GiElem {
        GiElem::from_real(prime.zero())
    }

    pub fn one(prime: Prime) -> GiElem {
        GiElem::from_real(prime.one())
    }

    pub fn j(prime: Prime) -> GiElem {
        GiElem { re: prime.zero(), im: prime.one() }
    }

    #[inline]
    pub fn re(self) -> GfElem {
        self.re
    }

    #[inline]
    pub fn im(self) -> GfElem {
        self.im
    }

    #[inline]
    pub fn prime(self) -> Prime {
        self.re.prime()
    }

    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(self) -> bool {
        self.re.value() == 1 && self.im.is_zero()
    }

    pub fn is_real(self) -> bool {
        self.im.is_zero()
    }

    /// Position in the canonical enumeration of all p² elements.
    pub fn index(self) -> usize {
        (self.re.value() * self.prime().value() + self.im.value()) as usize
    }

    /// Inverse of [`GiElem::index`].
    pub fn from_index(prime: Prime, index: usize) -> GiElem {
        let p = prime.value();
        let i = index as u64;
        GiElem::new(prime, (i / p) as i64, (i % p) as i64)
    }

    /// The p² − 1 nonzero elements in canonical order.
    pub fn nonzero_elements(prime: Prime) -> impl Iterator<Item = GiElem> {
        let n = (prime.value() * prime.value()) as usize;
        (1..n).map(move |i| GiElem::from_index(prime, i))
    }

    pub fn checked_add(self, other: GiElem) -> Result<GiElem> {
        Ok(GiElem { re: self.re.checked_add(other.re)?, im: self.im.checked_add(other.im)? })
    }

    pub fn checked_mul(self, other: GiElem) -> Result<GiElem> {
        self.re.checked_mul(other.re)?;
        Ok(self * other)
    }

    pub fn conj(self) -> GiElem {
        GiElem { re: self.re, im: -self.im }
    }

    /// a² + b², which equals ζ^(p+1).
    pub fn norm(self) -> GfElem {
        self.re * self.re + self.im * self.im
    }

    /// The complex modulus: the residue-valued square root of the signed
    /// modulus of the norm. Always a quadratic residue.
    pub fn modulus(self) -> Result<GfElem> {
        if self.is_zero() {
            return Err(Error::Zero("modulus"));
        }
        Ok(self.norm().modulus().sqrt()?.modulus())
    }

    pub fn scale(self, k: GfElem) -> GiElem {
        GiElem { re: self.re * k, im: self.im * k }
    }

    pub fn inv(self) -> Result<GiElem> {
        if self.is_zero() {
            return Err(Error::Zero("inversion"));
        }
        Ok(self.conj().scale(self.norm().inv()?))
    }

    /// Square-and-multiply for non-negative exponents.
    pub fn pow(self, mut exp: u64) -> GiElem {
        let mut base = self;
        let mut acc = GiElem::one(self.prime());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// Signed exponent; negative powers go through the inverse.
    pub fn powi(self, exp: i64) -> Result<GiElem> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }

    /// Parses `a+bj`, `a-bj`, `a`, `bj`, `j`, `-j`, `a+jb` and friends.
    /// Coefficients may be any integers; they are reduced mod p.
    pub fn parse(s: &str, prime: Prime) -> Result<GiElem> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("cannot parse {s:?} as a+bj"));
        if text.is_empty() {
            return Err(bad());
        }

        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in text.char_indices().skip(1) {
            if c == '+' || c == '-' {
                terms.push(&text[start..i]);
                start = i;
            }
        }
        terms.push(&text[start..]);

        let (mut re, mut im) = (None, None);
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (slot, digits) = match body.strip_suffix('j').or_else(|| body.strip_prefix('j')) {
                Some("") => (&mut im, "1"),
                Some(d) => (&mut im, d),
                None => (&mut re, body),
            };
            let magnitude = digits.parse::<i64>().map_err(|_| bad())?;
            if slot.is_some() {
                return Err(bad());
            }
            *slot = Some(if negative { -magnitude } else { magnitude });
        }
        Ok(GiElem::new(prime, re.unwrap_or(0), im.unwrap_or(0)))
    }
}

impl fmt::Display for GiElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}j", self.re.value(), self.im.value())
    }
}

impl PartialOrd for GiElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GiElem {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.prime().value(), self.re.value(), self.im.value()).cmp(&(
            other.prime().value(),
            other.re.value(),
            other.im.value(),
        ))
    }
}

impl Add for GiElem {
    type Output = GiElem;
    fn add(self, rhs: GiElem) -> GiElem {
        GiElem { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GiElem {
    type Output = GiElem;
    fn sub(self, rhs: GiElem) -> GiElem {
        GiElem { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GiElem {
    type Output = GiElem;
    fn mul(self, rhs: GiElem) -> GiElem {
        GiElem { re: self.re * rhs.re - self.im * rhs.im, im: self.re * rhs.im + rhs.re * self.im }
    }
}

impl Neg for GiElem {
    type Output = GiElem;
    fn neg(self) -> GiElem {
        GiElem { re: -self.re, im: -self.im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(p: u64, a: i64, b: i64) -> GiElem {
        GiElem::new(Prime::new(p).unwrap(), a, b)
    }

    #[test]
    fn addition() {
        assert_eq!(gi(7, 6, 4) + gi(7, 1, 3), gi(7, 0, 0));
        assert_eq!(gi(7, 3, 2) + gi(7, 0, 0), gi(7, 3, 2));
        assert_eq!(gi(11, 5, 3) + gi(11, 5, 8), gi(11, 10, 0));
        assert!(gi(7, 1, 1).checked_add(gi(11, 1, 1)).is_err());
    }

    #[test]
    fn multiplication() {
        assert_eq!(gi(7, 0, 1) * gi(7, 0, 1), gi(7, 6, 0));
        assert!(gi(31, 23, 20).pow(64).is_one());
        assert!(gi(7, 3, 2).pow(16).is_one());
        assert!(gi(7, 1, 1).checked_mul(gi(11, 1, 1)).is_err());
    }

    #[test]
    fn conjugation() {
        assert_eq!(gi(7, 3, 2).conj(), gi(7, 3, 5));
        assert_eq!(gi(7, 4, 0).conj(), gi(7, 4, 0));
        assert_eq!(gi(11, 8, 6).conj(), gi(11, 8, 5));
    }

    #[test]
    fn norms() {
        assert_eq!(gi(31, 6, 16).norm().value(), 13);
        assert_eq!(gi(7, 6, 4).norm().value(), 3);
        assert_eq!(gi(7, 1, 0).norm().value(), 1);
    }

    #[test]
    fn complex_modulus() {
        assert_eq!(gi(31, 6, 16).modulus().unwrap().value(), 7);
        assert_eq!(gi(7, 6, 4).modulus().unwrap().value(), 2);
        assert_eq!(gi(7, 1, 0).modulus().unwrap().value(), 1);
        assert!(gi(7, 0, 0).modulus().is_err());
    }

    #[test]
    fn inverse_and_powers() {
        assert_eq!(gi(31, 23, 20).pow(31), gi(31, 23, 11));
        assert_eq!(gi(7, 0, 1).inv().unwrap(), gi(7, 0, 6));
        assert!(gi(7, 3, 2).pow(0).is_one());
        assert_eq!(gi(7, 3, 2).powi(-1).unwrap(), gi(7, 3, 2).inv().unwrap());
        assert!(gi(7, 0, 0).inv().is_err());
        assert!(gi(7, 0, 0).powi(-2).is_err());
    }

    #[test]
    fn frobenius_and_norm_power() {
        for p in [3u64, 7, 11, 19] {
            let prime = Prime::new(p).unwrap();
            for z in GiElem::nonzero_elements(prime) {
                assert_eq!(z.pow(p), z.conj());
                assert_eq!(z.pow(p + 1), GiElem::from_real(z.norm()));
                assert!(z.pow(p * p - 1).is_one());
                assert!((z * z.inv().unwrap()).is_one());
                assert!(!z.norm().is_zero());
            }
        }
    }

    #[test]
    fn modulus_is_multiplicative() {
        let prime = Prime::new(11).unwrap();
        let all: Vec<_> = GiElem::nonzero_elements(prime).collect();
        for &x in &all {
            for &y in all.iter().step_by(7) {
                let lhs = (x * y).modulus().unwrap();
                let rhs = (x.modulus().unwrap() * y.modulus().unwrap()).modulus();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn parse_forms() {
        let p = Prime::new(7).unwrap();
        assert_eq!(GiElem::parse("3+2j", p).unwrap(), gi(7, 3, 2));
        assert_eq!(GiElem::parse(" 6 + 4j ", p).unwrap(), gi(7, 6, 4));
        assert_eq!(GiElem::parse("3-2j", p).unwrap(), gi(7, 3, 5));
        assert_eq!(GiElem::parse("2j", p).unwrap(), gi(7, 0, 2));
        assert_eq!(GiElem::parse("j", p).unwrap(), gi(7, 0, 1));
        assert_eq!(GiElem::parse("-j", p).unwrap(), gi(7, 0, 6));
        assert_eq!(GiElem::parse("-1", p).unwrap(), gi(7, 6, 0));
        assert_eq!(GiElem::parse("5", p).unwrap(), gi(7, 5, 0));
        assert_eq!(GiElem::parse("2+j3", p).unwrap(), gi(7, 2, 3));
        assert_eq!(GiElem::parse("1+j", p).unwrap(), gi(7, 1, 1));
        assert!(GiElem::parse("", p).is_err());
        assert!(GiElem::parse("3+2k", p).is_err());
        assert!(GiElem::parse("x", p).is_err());
    }

    #[test]
    fn display_round_trip() {
        let prime = Prime::new(11).unwrap();
        for z in GiElem::nonzero_elements(prime) {
            assert_eq!(GiElem::parse(&z.to_string(), prime).unwrap(), z);
        }
    }
}
