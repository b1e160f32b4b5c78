//! Slow reference implementations used only by the integration tests.
//!
//! Everything here works on raw `(re, im)` integer pairs and brute force, so
//! none of it shares code paths with the library it checks.

#![allow(dead_code)]

use galois_z::sequence::SequenceSpec;
use galois_z::{GiElem, Prime};

pub type Pair = (u64, u64);

pub fn mul(p: u64, x: Pair, y: Pair) -> Pair {
    let re = (x.0 * y.0 + (p - x.1) * y.1) % p;
    let im = (x.0 * y.1 + x.1 * y.0) % p;
    (re, im)
}

pub fn add(p: u64, x: Pair, y: Pair) -> Pair {
    ((x.0 + y.0) % p, (x.1 + y.1) % p)
}

/// Inverse by exhaustive search.
pub fn inv(p: u64, x: Pair) -> Pair {
    for a in 0..p {
        for b in 0..p {
            if mul(p, x, (a, b)) == (1, 0) {
                return (a, b);
            }
        }
    }
    panic!("{x:?} has no inverse mod {p}");
}

pub fn pow(p: u64, x: Pair, k: u64) -> Pair {
    (0..k).fold((1, 0), |acc, _| mul(p, acc, x))
}

/// Smallest N ≥ 1 with xᴺ = 1, by repeated multiplication.
pub fn naive_order(p: u64, x: Pair) -> u64 {
    let mut cur = x;
    let mut n = 1;
    while cur != (1, 0) {
        cur = mul(p, cur, x);
        n += 1;
    }
    n
}

pub fn pair(z: GiElem) -> Pair {
    (z.re().value(), z.im().value())
}

pub fn gi(prime: Prime, x: Pair) -> GiElem {
    GiElem::new(prime, x.0 as i64, x.1 as i64)
}

fn inv_mod(p: u64, a: u64) -> u64 {
    (1..p).find(|&b| a % p * b % p == 1).expect("invertible")
}

/// Outcome of materialised Cesàro summation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Materialised {
    pub period: u64,
    pub preperiod: u64,
    /// σ computed from the first periodic index.
    pub sigma: Option<Pair>,
    /// σ recomputed from each later start inside the periodic region.
    pub sigma_by_offset: Vec<Option<Pair>>,
}

/// Materialises `len` summands and sums them the long way: partial sums
/// kept as integers in [0, p), the minimal eventual period found by search,
/// and σ as the integer mean over one period reduced mod p.
///
/// `period_bound` must be at least the true period and `len` must cover the
/// transient plus three periods.
pub fn materialised_cesaro(p: u64, terms: &[Pair], period_bound: usize) -> Materialised {
    let mut sums = Vec::with_capacity(terms.len());
    let mut acc = (0u64, 0u64);
    for &t in terms {
        acc = add(p, acc, t);
        sums.push(acc);
    }
    let n = sums.len();
    let window = period_bound * 2;
    assert!(n > window + period_bound, "not enough terms materialised");

    // candidate periods checked on the last stretch, which lies past any transient
    let tail_from = n - window;
    let period =
        (1..=period_bound).find(|&d| (tail_from..n - d).all(|k| sums[k] == sums[k + d])).expect("period within bound");

    let mut k0 = tail_from;
    while k0 > 0 && sums[k0 - 1] == sums[k0 - 1 + period] {
        k0 -= 1;
    }

    let sigma_from = |start: usize| -> Option<Pair> {
        if (period as u64).is_multiple_of(p) {
            return None;
        }
        let (mut re, mut im) = (0u128, 0u128);
        for s in &sums[start..start + period] {
            re += s.0 as u128;
            im += s.1 as u128;
        }
        let pinv = inv_mod(p, period as u64 % p) as u128;
        let p = p as u128;
        Some(((re % p * pinv % p) as u64, (im % p * pinv % p) as u64))
    };

    Materialised {
        period: period as u64,
        preperiod: k0 as u64,
        sigma: sigma_from(k0),
        sigma_by_offset: (1..period.min(5)).map(|j| sigma_from(k0 + j)).collect(),
    }
}

/// The summand stream x[min], x[min+1], … as pairs, `len` terms long.
pub fn sequence_terms(x: &SequenceSpec, len: usize) -> Vec<Pair> {
    (0..len as i64).map(|i| (x.value_at(x.min_index() + i).value(), 0)).collect()
}

/// x[n]·Z⁻ⁿ over the same stream, with powers built by repeated products.
pub fn transform_terms(x: &SequenceSpec, z: Pair, len: usize) -> Vec<Pair> {
    let p = x.prime().value();
    let zinv = inv(p, z);
    let start = x.min_index();
    // Z^(−start) for the first index, then multiply by Z⁻¹ each step
    let mut w = if start <= 0 { pow(p, z, start.unsigned_abs()) } else { pow(p, zinv, start as u64) };
    let mut out = Vec::with_capacity(len);
    for i in 0..len as i64 {
        let v = x.value_at(start + i).value();
        out.push(mul(p, w, (v, 0)));
        w = mul(p, w, zinv);
    }
    out
}

/// Σ x[n]·Z⁻ⁿ for finitely supported x on [0, len).
pub fn finite_transform(p: u64, values: &[u64], z: Pair) -> Pair {
    let zinv = inv(p, z);
    let mut w = (1, 0);
    let mut acc = (0, 0);
    for &v in values {
        acc = add(p, acc, mul(p, w, (v % p, 0)));
        w = mul(p, w, zinv);
    }
    acc
}

pub fn all_nonzero(p: u64) -> Vec<Pair> {
    (0..p).flat_map(|a| (0..p).map(move |b| (a, b))).filter(|&x| x != (0, 0)).collect()
}
