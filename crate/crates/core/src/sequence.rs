//! Two-sided sequences over GF(p) that are zero far to the left and
//! eventually periodic to the right.
//!
//! A [`SequenceSpec`] is a finite left part (explicit negative indices), a
//! finite prefix starting at n = 0, and a tail repeated forever after the
//! prefix.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{lcm, GfElem, Prime};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceSpec {
    prime: Prime,
    /// (n, x[n]) for n < 0 with x[n] ≠ 0, ascending by n.
    left: Vec<(i64, GfElem)>,
    prefix: Vec<GfElem>,
    tail: Vec<GfElem>,
}

impl SequenceSpec {
    pub fn new(
        prime: Prime,
        mut left: Vec<(i64, GfElem)>,
        prefix: Vec<GfElem>,
        tail: Vec<GfElem>,
    ) -> Result<SequenceSpec> {
        if tail.is_empty() {
            return Err(Error::InvalidSequence("tail period must be nonempty".into()));
        }
        left.sort_by_key(|&(n, _)| n);
        if let Some(&(n, _)) = left.iter().find(|&&(n, _)| n >= 0) {
            return Err(Error::InvalidSequence(format!("left index {n} is not negative")));
        }
        if let Some(w) = left.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidSequence(format!("left index {} given twice", w[0].0)));
        }
        let all = left.iter().map(|(_, v)| v).chain(&prefix).chain(&tail);
        if let Some(v) = all.into_iter().find(|v| v.prime() != prime) {
            return Err(Error::PrimeMismatch { left: prime.value(), right: v.prime().value() });
        }
        left.retain(|(_, v)| !v.is_zero());
        Ok(SequenceSpec { prime, left, prefix, tail })
    }

    /// Builds a spec by sampling `f` over [lo, tail_start + period).
    pub fn from_fn(
        prime: Prime,
        lo: i64,
        tail_start: usize,
        period: usize,
        f: impl Fn(i64) -> GfElem,
    ) -> Result<SequenceSpec> {
        let left = (lo.min(0)..0).map(|n| (n, f(n))).filter(|(_, v)| !v.is_zero()).collect();
        let prefix = (0..tail_start as i64).map(&f).collect();
        let tail = (tail_start as i64..(tail_start + period) as i64).map(&f).collect();
        SequenceSpec::new(prime, left, prefix, tail)
    }

    /// A finite sequence supported on n = 0, 1, …, values.len() − 1.
    pub fn finite(prime: Prime, values: Vec<GfElem>) -> Result<SequenceSpec> {
        SequenceSpec::new(prime, Vec::new(), values, vec![prime.zero()])
    }

    /// δ[n].
    pub fn impulse(prime: Prime) -> SequenceSpec {
        SequenceSpec { prime, left: Vec::new(), prefix: vec![prime.one()], tail: vec![prime.zero()] }
    }

    /// u[n].
    pub fn unit_step(prime: Prime) -> SequenceSpec {
        SequenceSpec { prime, left: Vec::new(), prefix: Vec::new(), tail: vec![prime.one()] }
    }

    /// A·aⁿ·u[n]; the tail period is the multiplicative order of `a`.
    pub fn exponential(amplitude: GfElem, base: GfElem) -> SequenceSpec {
        let prime = base.prime();
        if base.is_zero() {
            return SequenceSpec { prime, left: Vec::new(), prefix: vec![amplitude], tail: vec![prime.zero()] };
        }
        let mut tail = vec![amplitude];
        let mut power = base;
        while power.value() != 1 {
            tail.push(amplitude * power);
            power = power * base;
        }
        SequenceSpec { prime, left: Vec::new(), prefix: Vec::new(), tail }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn left(&self) -> &[(i64, GfElem)] {
        &self.left
    }

    pub fn prefix(&self) -> &[GfElem] {
        &self.prefix
    }

    pub fn tail(&self) -> &[GfElem] {
        &self.tail
    }

    /// First index that may be nonzero.
    pub fn min_index(&self) -> i64 {
        self.left.first().map_or(0, |&(n, _)| n)
    }

    /// Index where the periodic tail begins.
    pub fn tail_start(&self) -> usize {
        self.prefix.len()
    }

    pub fn value_at(&self, n: i64) -> GfElem {
        if n < 0 {
            return match self.left.binary_search_by_key(&n, |&(i, _)| i) {
                Ok(i) => self.left[i].1,
                Err(_) => self.prime.zero(),
            };
        }
        let n = n as usize;
        if n < self.prefix.len() {
            self.prefix[n]
        } else {
            self.tail[(n - self.prefix.len()) % self.tail.len()]
        }
    }

    /// x[n − k].
    pub fn shift(&self, k: i64) -> Result<SequenceSpec> {
        let start = (self.tail_start() as i64 + k).max(0) as usize;
        SequenceSpec::from_fn(self.prime, self.min_index() + k, start, self.tail.len(), |n| self.value_at(n - k))
    }

    /// α·x[n] + β·y[n].
    pub fn combine(alpha: GfElem, x: &SequenceSpec, beta: GfElem, y: &SequenceSpec) -> Result<SequenceSpec> {
        if x.prime != y.prime {
            return Err(Error::PrimeMismatch { left: x.prime.value(), right: y.prime.value() });
        }
        let lo = x.min_index().min(y.min_index());
        let start = x.tail_start().max(y.tail_start());
        let period = lcm(x.tail.len() as u64, y.tail.len() as u64) as usize;
        SequenceSpec::from_fn(x.prime, lo, start, period, |n| alpha * x.value_at(n) + beta * y.value_at(n))
    }

    pub fn scale(&self, k: GfElem) -> Result<SequenceSpec> {
        SequenceSpec::combine(k, self, self.prime.zero(), self)
    }

    /// aⁿ·x[n].
    pub fn modulate(&self, base: GfElem) -> Result<SequenceSpec> {
        let inv = base.inv()?;
        let order = multiplicative_order(base);
        let period = lcm(self.tail.len() as u64, order) as usize;
        let power = |n: i64| if n >= 0 { base.pow(n as u64) } else { inv.pow(n.unsigned_abs()) };
        SequenceSpec::from_fn(self.prime, self.min_index(), self.tail_start(), period, |n| power(n) * self.value_at(n))
    }

    /// Parses `impulse`, `step`, `expo:A,a`, or an explicit
    /// `left=-2:3,-1:4;prefix=1,2,3;tail=0` (sections optional except `tail`).
    pub fn parse(s: &str, prime: Prime) -> Result<SequenceSpec> {
        let s = s.trim();
        match s {
            "impulse" | "delta" => return Ok(SequenceSpec::impulse(prime)),
            "step" | "unit-step" => return Ok(SequenceSpec::unit_step(prime)),
            _ => {}
        }
        if let Some(args) = s.strip_prefix("expo:") {
            let parts = parse_list(args, prime)?;
            let [amplitude, base] = parts[..] else {
                return Err(Error::Parse(format!("expo needs exactly A,a: {s:?}")));
            };
            return Ok(SequenceSpec::exponential(amplitude, base));
        }

        let (mut left, mut prefix, mut tail) = (String::new(), String::new(), None);
        for section in s.split(';').filter(|t| !t.trim().is_empty()) {
            let (key, value) =
                section.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value in {section:?}")))?;
            match key.trim() {
                "left" => left = value.to_string(),
                "prefix" => prefix = value.to_string(),
                "tail" => tail = Some(value.to_string()),
                other => return Err(Error::Parse(format!("unknown sequence section {other:?}"))),
            }
        }
        let tail = tail.ok_or_else(|| Error::Parse(format!("sequence {s:?} has no tail")))?;
        SequenceSpec::from_lists(prime, &left, &prefix, &tail)
    }

    /// Builds a spec from the three comma lists used on the command line.
    pub fn from_lists(prime: Prime, left: &str, prefix: &str, tail: &str) -> Result<SequenceSpec> {
        let left = parse_left(left, prime)?;
        let prefix = parse_list(prefix, prime)?;
        let tail = if tail.trim().is_empty() { vec![prime.zero()] } else { parse_list(tail, prime)? };
        SequenceSpec::new(prime, left, prefix, tail)
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[GfElem]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        if !self.left.is_empty() {
            let left: Vec<String> = self.left.iter().map(|(n, v)| format!("{n}:{v}")).collect();
            write!(f, "left={};", left.join(","))?;
        }
        if !self.prefix.is_empty() {
            write!(f, "prefix={};", join(&self.prefix))?;
        }
        write!(f, "tail={}", join(&self.tail))
    }
}

fn parse_list(s: &str, prime: Prime) -> Result<Vec<GfElem>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map(|v| prime.elem(v)).map_err(|_| Error::Parse(format!("not an integer: {t:?}"))))
        .collect()
}

fn parse_left(s: &str, prime: Prime) -> Result<Vec<(i64, GfElem)>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (n, v) =
                t.split_once(':').ok_or_else(|| Error::Parse(format!("left entries are n:value, got {t:?}")))?;
            let n = n.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad index in {t:?}")))?;
            let v = v.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad value in {t:?}")))?;
            Ok((n, prime.elem(v)))
        })
        .collect()
}

/// Smallest k ≥ 1 with aᵏ = 1. `a` must be nonzero.
pub fn multiplicative_order(a: GfElem) -> u64 {
    let mut k = 1;
    let mut cur = a;
    while cur.value() != 1 {
        cur = cur * a;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p7() -> Prime {
        Prime::new(7).unwrap()
    }

    fn values(x: &SequenceSpec, range: std::ops::Range<i64>) -> Vec<u64> {
        range.map(|n| x.value_at(n).value()).collect()
    }

    #[test]
    fn basic_sequences() {
        let d = SequenceSpec::impulse(p7());
        assert_eq!(values(&d, -2..4), vec![0, 0, 1, 0, 0, 0]);
        let u = SequenceSpec::unit_step(p7());
        assert_eq!(values(&u, -2..4), vec![0, 0, 1, 1, 1, 1]);
        let e = SequenceSpec::exponential(p7().one(), p7().elem(3));
        assert_eq!(e.tail().len(), 6);
        assert_eq!(values(&e, 0..12), vec![1, 3, 2, 6, 4, 5, 1, 3, 2, 6, 4, 5]);
        let z = SequenceSpec::exponential(p7().elem(2), p7().zero());
        assert_eq!(values(&z, 0..3), vec![2, 0, 0]);
    }

    #[test]
    fn validation() {
        let p = p7();
        assert!(SequenceSpec::new(p, vec![], vec![], vec![]).is_err());
        assert!(SequenceSpec::new(p, vec![(0, p.one())], vec![], vec![p.one()]).is_err());
        assert!(SequenceSpec::new(p, vec![(-1, p.one()), (-1, p.one())], vec![], vec![p.one()]).is_err());
        let p11 = Prime::new(11).unwrap();
        assert!(SequenceSpec::new(p, vec![], vec![p11.one()], vec![p.one()]).is_err());
    }

    #[test]
    fn parsing() {
        let p = p7();
        assert_eq!(SequenceSpec::parse("impulse", p).unwrap(), SequenceSpec::impulse(p));
        assert_eq!(SequenceSpec::parse("step", p).unwrap(), SequenceSpec::unit_step(p));
        assert_eq!(SequenceSpec::parse("expo:1,3", p).unwrap(), SequenceSpec::exponential(p.one(), p.elem(3)));
        let x = SequenceSpec::parse("left=-2:3,-1:4;prefix=1,2,3;tail=0", p).unwrap();
        assert_eq!(values(&x, -3..5), vec![0, 3, 4, 1, 2, 3, 0, 0]);
        assert_eq!(SequenceSpec::parse(&x.to_string(), p).unwrap(), x);
        assert!(SequenceSpec::parse("prefix=1", p).is_err());
        assert!(SequenceSpec::parse("expo:1", p).is_err());
        assert!(SequenceSpec::parse("tail=a", p).is_err());
    }

    #[test]
    fn shifting() {
        let p = p7();
        let x = SequenceSpec::parse("left=-1:5;prefix=1,2;tail=3,4", p).unwrap();
        for k in [-3i64, -1, 0, 1, 4] {
            let y = x.shift(k).unwrap();
            for n in -8..20 {
                assert_eq!(y.value_at(n), x.value_at(n - k), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn combining_and_modulating() {
        let p = p7();
        let x = SequenceSpec::parse("left=-2:1;prefix=4;tail=1,2", p).unwrap();
        let y = SequenceSpec::parse("prefix=0,0,5;tail=3,1,6", p).unwrap();
        let z = SequenceSpec::combine(p.elem(2), &x, p.elem(3), &y).unwrap();
        for n in -4..30 {
            assert_eq!(z.value_at(n), p.elem(2) * x.value_at(n) + p.elem(3) * y.value_at(n));
        }
        let m = x.modulate(p.elem(3)).unwrap();
        for n in -4..30i64 {
            let a = p.elem(3).inv().unwrap();
            let power = if n >= 0 { p.elem(3).pow(n as u64) } else { a.pow(n.unsigned_abs()) };
            assert_eq!(m.value_at(n), power * x.value_at(n));
        }
        assert!(x.modulate(p.zero()).is_err());
    }

    #[test]
    fn orders() {
        let p = p7();
        assert_eq!(multiplicative_order(p.elem(3)), 6);
        assert_eq!(multiplicative_order(p.elem(2)), 3);
        assert_eq!(multiplicative_order(p.one()), 1);
    }
}
