//! Cesàro summation of eventually periodic series over GF(p) and GI(p).
//!
//! For a summand stream with a finite transient of length L followed by a
//! tail of minimal period T and tail sum c, the partial sums S[k] become
//! periodic after the transient with period
//!
//! ```text
//! P = T · p / gcd(p, c)        (T when c ≡ 0, T·p otherwise)
//! ```
//!
//! The series converges exactly when P ≢ 0 (mod p), and then the limit of the
//! arithmetic means of S reduces to the mean over one period:
//!
//! ```text
//! σ = P⁻¹ · Σ_{k=L+1}^{L+P} S[k] = S[L] + T⁻¹ · Σ_{i=1}^{T} (s₁ + … + sᵢ)
//! ```
//!
//! Nothing is materialised beyond one tail period. GI(p)-valued series are
//! summed componentwise, which agrees with the real case on real input.

use serde::Serialize;

use crate::gf::{divisors, GfElem, Prime};
use crate::gi::GiElem;
use crate::sequence::SequenceSpec;

/// Outcome of Cesàro summation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CesaroVerdict<T> {
    pub converges: bool,
    pub sigma: Option<T>,
    /// Minimal period P of the partial sums.
    pub period: u64,
    /// Number of partial sums before periodicity begins.
    pub preperiod: u64,
}

impl<T: Copy> CesaroVerdict<T> {
    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> CesaroVerdict<U> {
        CesaroVerdict {
            converges: self.converges,
            sigma: self.sigma.map(f),
            period: self.period,
            preperiod: self.preperiod,
        }
    }
}

impl CesaroVerdict<GfElem> {
    pub fn to_json(&self) -> VerdictJson {
        VerdictJson {
            converges: self.converges,
            sigma: self.sigma.map(GfElem::value),
            period: self.period,
            preperiod: self.preperiod,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictJson {
    pub converges: bool,
    pub sigma: Option<u64>,
    #[serde(rename = "P")]
    pub period: u64,
    pub preperiod: u64,
}

/// A Cesàro value or an explicit divergence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesValue {
    Converges(GiElem),
    Divergent,
}

impl SeriesValue {
    pub fn value(self) -> Option<GiElem> {
        match self {
            SeriesValue::Converges(v) => Some(v),
            SeriesValue::Divergent => None,
        }
    }

    pub fn is_divergent(self) -> bool {
        self == SeriesValue::Divergent
    }
}

impl From<CesaroVerdict<GiElem>> for SeriesValue {
    fn from(v: CesaroVerdict<GiElem>) -> SeriesValue {
        v.sigma.map_or(SeriesValue::Divergent, SeriesValue::Converges)
    }
}

/// A summand stream: finitely many transient terms, then `tail` forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summands {
    pub prime: Prime,
    pub transient: Vec<GiElem>,
    pub tail: Vec<GiElem>,
}

impl Summands {
    /// The stream x[min], x[min + 1], … of a real sequence: the finite left
    /// part first, then n = 0, 1, 2, ….
    pub fn of_sequence(x: &SequenceSpec) -> Summands {
        let transient = (x.min_index()..x.tail_start() as i64).map(|n| GiElem::from_real(x.value_at(n))).collect();
        let tail = x.tail().iter().map(|&v| GiElem::from_real(v)).collect();
        Summands { prime: x.prime(), transient, tail }
    }

    #[inline]
    fn term(&self, i: u64, period: usize) -> GiElem {
        let l = self.transient.len() as u64;
        if i < l {
            self.transient[i as usize]
        } else {
            self.tail[((i - l) % period as u64) as usize]
        }
    }
}

/// Smallest d dividing `v.len()` with v[i] = v[i mod d].
pub fn minimal_period<T: PartialEq>(v: &[T]) -> usize {
    let n = v.len();
    divisors(n as u64).into_iter().map(|d| d as usize).find(|&d| (d..n).all(|i| v[i] == v[i - d])).unwrap_or(n)
}

pub fn cesaro_summands(s: &Summands) -> CesaroVerdict<GiElem> {
    let prime = s.prime;
    let p = prime.value();
    let zero = GiElem::zero(prime);

    let period_t = minimal_period(&s.tail);
    let tail = &s.tail[..period_t];
    let tail_sum = tail.iter().fold(zero, |acc, &v| acc + v);
    let period = if tail_sum.is_zero() { period_t as u64 } else { period_t as u64 * p };

    // S[k + P] = S[k] holds for every k ≥ L; walk back while the terms agree
    let l = s.transient.len() as u64;
    let mut k0 = l.max(1);
    while k0 > 1 && s.term(k0 - 1 + period, period_t) == s.term(k0 - 1, period_t) {
        k0 -= 1;
    }
    let preperiod = k0 - 1;

    if period % p == 0 {
        return CesaroVerdict { converges: false, sigma: None, period, preperiod };
    }

    let head = s.transient.iter().fold(zero, |acc, &v| acc + v);
    let mut running = zero;
    let mut total = zero;
    for &v in tail {
        running = running + v;
        total = total + running;
    }
    let t_inv = prime.elem(period_t as i64).inv().expect("period is prime to p");
    let sigma = head + total.scale(t_inv);
    CesaroVerdict { converges: true, sigma: Some(sigma), period, preperiod }
}

/// S[1], …, S[count] over the summand stream of `x`.
pub fn partial_sums(x: &SequenceSpec, count: usize) -> Vec<GfElem> {
    let s = Summands::of_sequence(x);
    let mut acc = x.prime().zero();
    (0..count as u64)
        .map(|i| {
            acc = acc + s.term(i, s.tail.len()).re();
            acc
        })
        .collect()
}

/// (preperiod, P) of the partial sums of `x`.
pub fn detect_period(x: &SequenceSpec) -> (u64, u64) {
    let v = cesaro_sum(x);
    (v.preperiod, v.period)
}

pub fn cesaro_sum(x: &SequenceSpec) -> CesaroVerdict<GfElem> {
    cesaro_summands(&Summands::of_sequence(x)).map(GiElem::re)
}

/// Σ_{k≥0} Zᵏ. Equals (1 − Z)⁻¹ for Z ≠ 1 and diverges at Z = 1.
pub fn geometric_cesaro(z: GiElem) -> SeriesValue {
    let prime = z.prime();
    let s = if z.is_zero() {
        Summands { prime, transient: vec![GiElem::one(prime)], tail: vec![z] }
    } else {
        let mut tail = vec![GiElem::one(prime)];
        let mut power = z;
        while !power.is_one() {
            tail.push(power);
            power = power * z;
        }
        Summands { prime, transient: Vec::new(), tail }
    };
    cesaro_summands(&s).into()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p7() -> Prime {
        Prime::new(7).unwrap()
    }

    fn vals(v: &[GfElem]) -> Vec<u64> {
        v.iter().map(|x| x.value()).collect()
    }

    #[test]
    fn partial_sums_of_small_series() {
        let p = p7();
        let e = SequenceSpec::exponential(p.one(), p.elem(3));
        assert_eq!(vals(&partial_sums(&e, 7)), vec![1, 4, 6, 5, 2, 0, 1]);
        let u = SequenceSpec::unit_step(p);
        assert_eq!(vals(&partial_sums(&u, 8)), vec![1, 2, 3, 4, 5, 6, 0, 1]);
        assert_eq!(vals(&partial_sums(&SequenceSpec::impulse(p), 3)), vec![1, 1, 1]);
    }

    #[test]
    fn periods() {
        let p = p7();
        assert_eq!(detect_period(&SequenceSpec::exponential(p.one(), p.elem(3))), (0, 6));
        assert_eq!(detect_period(&SequenceSpec::unit_step(p)), (0, 7));
        assert_eq!(detect_period(&SequenceSpec::impulse(p)), (0, 1));
    }

    #[test]
    fn sums() {
        let p = p7();
        let v = cesaro_sum(&SequenceSpec::exponential(p.one(), p.elem(3)));
        assert!(v.converges);
        assert_eq!(v.sigma, Some(p.elem(3)));
        let v = cesaro_sum(&SequenceSpec::unit_step(p));
        assert!(!v.converges);
        assert_eq!(v.sigma, None);
        assert_eq!(v.period, 7);
        let v = cesaro_sum(&SequenceSpec::impulse(p));
        assert_eq!(v.sigma, Some(p.one()));
    }

    #[test]
    fn non_minimal_tail_is_reduced() {
        let p = p7();
        let x = SequenceSpec::new(p, vec![], vec![], vec![p.one(); 4]).unwrap();
        assert_eq!(detect_period(&x), (0, 7));
        let y = SequenceSpec::parse("tail=1,3,2,6,4,5,1,3,2,6,4,5", p).unwrap();
        assert_eq!(cesaro_sum(&y).sigma, Some(p.elem(3)));
        assert_eq!(cesaro_sum(&y).period, 6);
    }

    #[test]
    fn transient_absorbed_into_preperiod() {
        let p = p7();
        // the prefix repeats the tail, so periodicity starts at once
        let x = SequenceSpec::parse("prefix=1,3;tail=2,6,4,5,1,3", p).unwrap();
        assert_eq!(detect_period(&x), (0, 6));
        let y = SequenceSpec::parse("prefix=2,0,0;tail=1,3,2,6,4,5", p).unwrap();
        assert_eq!(detect_period(&y).1, 6);
        assert!(detect_period(&y).0 > 0);
        assert_eq!(cesaro_sum(&y).sigma, Some(p.elem(5)));
    }

    #[test]
    fn period_divisible_by_p_diverges() {
        let p = p7();
        // tail sums to zero but has length 7
        let x = SequenceSpec::parse("tail=1,6,0,0,0,0,0", p).unwrap();
        let v = cesaro_sum(&x);
        assert_eq!(v.period, 7);
        assert!(!v.converges);
    }

    #[test]
    fn geometric_series() {
        let p = p7();
        assert_eq!(geometric_cesaro(GiElem::new(p, 3, 0)), SeriesValue::Converges(GiElem::new(p, 3, 0)));
        assert_eq!(geometric_cesaro(GiElem::one(p)), SeriesValue::Divergent);
        assert_eq!(geometric_cesaro(GiElem::zero(p)), SeriesValue::Converges(GiElem::one(p)));
        for z in GiElem::nonzero_elements(p) {
            let got = geometric_cesaro(z);
            if z.is_one() {
                assert!(got.is_divergent());
            } else {
                assert_eq!(got, SeriesValue::Converges((GiElem::one(p) - z).inv().unwrap()));
            }
        }
    }

    #[test]
    fn minimal_periods() {
        assert_eq!(minimal_period(&[1, 2, 1, 2, 1, 2]), 2);
        assert_eq!(minimal_period(&[1, 2, 3]), 3);
        assert_eq!(minimal_period(&[5]), 1);
        assert_eq!(minimal_period(&[1, 1, 2, 1, 1, 2]), 3);
    }

    #[test]
    fn verdict_json_shape() {
        let p = p7();
        let json =
            serde_json::to_string(&cesaro_sum(&SequenceSpec::exponential(p.one(), p.elem(3))).to_json()).unwrap();
        assert_eq!(json, r#"{"converges":true,"sigma":3,"P":6,"preperiod":0}"#);
    }
}
