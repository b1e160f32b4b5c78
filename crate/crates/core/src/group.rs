//! The cyclic multiplicative group GI(p)* of order p² − 1 and its named
//! subgroups.
//!
//! | kind               | members                    | order      |
//! |--------------------|----------------------------|------------|
//! | `Unimodular`       | a² + b² ≡ 1                | p + 1      |
//! | `SupraUnimodular`  | a² + b² ≡ ±1               | 2(p + 1)   |
//! | `ModulusGroup`     | quadratic residues of GF(p)| (p − 1)/2  |
//! | `FullGroup`        | every nonzero element      | p² − 1     |
//!
//! The supra-unimodular group is the unit circle of the Z plane and its
//! generator ε is the base of every polar form.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{euler_phi, prime_factors, Prime};
use crate::gi::GiElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupKind {
    Unimodular,
    SupraUnimodular,
    ModulusGroup,
    FullGroup,
}

impl SubgroupKind {
    pub fn expected_order(self, prime: Prime) -> u64 {
        match self {
            SubgroupKind::Unimodular => prime.unimodular_order(),
            SubgroupKind::SupraUnimodular => prime.phase_order(),
            SubgroupKind::ModulusGroup => prime.modulus_order(),
            SubgroupKind::FullGroup => prime.full_order(),
        }
    }

    pub fn contains(self, z: GiElem) -> bool {
        if z.is_zero() {
            return false;
        }
        let n = z.norm().value();
        let p = z.prime().value();
        match self {
            SubgroupKind::Unimodular => n == 1,
            SubgroupKind::SupraUnimodular => n == 1 || n == p - 1,
            SubgroupKind::ModulusGroup => z.is_real() && z.re().is_quadratic_residue().unwrap_or(false),
            SubgroupKind::FullGroup => true,
        }
    }
}

impl FromStr for SubgroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "unimodular" | "g1" => Ok(SubgroupKind::Unimodular),
            "supra_unimodular" | "gs" => Ok(SubgroupKind::SupraUnimodular),
            "modulus_group" | "modulus" | "gr" => Ok(SubgroupKind::ModulusGroup),
            "full_group" | "full" => Ok(SubgroupKind::FullGroup),
            _ => Err(Error::Parse(format!("unknown subgroup kind {s:?}"))),
        }
    }
}

/// Number of elements of each multiplicative order, ascending by order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCensus {
    pub entries: Vec<(u64, u64)>,
}

impl OrderCensus {
    pub fn count(&self, order: u64) -> u64 {
        self.entries.iter().find(|&&(n, _)| n == order).map_or(0, |&(_, c)| c)
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&(_, c)| c).sum()
    }
}

/// Multiplicative order of `z` by stripping prime factors off p² − 1.
pub fn element_order(z: GiElem) -> Result<u64> {
    if z.is_zero() {
        return Err(Error::Zero("element order"));
    }
    let group = z.prime().full_order();
    let mut n = group;
    for q in prime_factors(group) {
        while n.is_multiple_of(q) && z.pow(n / q).is_one() {
            n /= q;
        }
    }
    Ok(n)
}

/// Members of a named subgroup in canonical order.
pub fn enumerate_subgroup(prime: Prime, kind: SubgroupKind) -> Vec<GiElem> {
    match kind {
        SubgroupKind::ModulusGroup => prime
            .nonzero_elements()
            .filter(|a| a.is_quadratic_residue().unwrap_or(false))
            .map(GiElem::from_real)
            .collect(),
        _ => GiElem::nonzero_elements(prime).filter(|&z| kind.contains(z)).collect(),
    }
}

/// The deterministic generator ε of the supra-unimodular group: the smallest
/// element, in canonical order, of order 2(p + 1).
///
/// For Mersenne p every element of norm −1 generates, so the first one found
/// is returned without an order computation.
pub fn find_gs_generator(prime: Prime) -> GiElem {
    let target = prime.phase_order();
    let minus_one = prime.value() - 1;
    GiElem::nonzero_elements(prime)
        .filter(|z| z.norm().value() == minus_one)
        .find(|&z| prime.is_mersenne() || element_order(z).ok() == Some(target))
        .expect("the supra-unimodular group is cyclic and has a generator")
}

/// Fails unless `epsilon` has order exactly 2(p + 1).
pub fn check_gs_generator(epsilon: GiElem) -> Result<()> {
    if epsilon.is_zero() || element_order(epsilon)? != epsilon.prime().phase_order() {
        return Err(Error::NotGenerator(epsilon));
    }
    Ok(())
}

/// β = ε^(2(p+1)/N), an element of order `n` on the unit circle.
pub fn nth_root_element(n: u64, epsilon: GiElem) -> Result<GiElem> {
    let order = epsilon.prime().phase_order();
    if n == 0 || !order.is_multiple_of(n) {
        return Err(Error::NotDivisor { n, order });
    }
    check_gs_generator(epsilon)?;
    Ok(epsilon.pow(order / n))
}

/// The orbit of a unimodular element under swapping and negating its
/// coordinates. Duplicates collapse, so degenerate inputs such as 1 or j give
/// four members.
pub fn symmetry_set(z: GiElem) -> Result<Vec<GiElem>> {
    if z.is_zero() || z.norm().value() != 1 {
        return Err(Error::NotUnimodular(z));
    }
    let (a, b) = (z.re(), z.im());
    let mut out: Vec<GiElem> = [(a, b), (b, a), (-a, b), (b, -a), (a, -b), (-b, a), (-a, -b), (-b, -a)]
        .into_iter()
        .map(|(re, im)| GiElem::from_parts(re, im).expect("same field"))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Counts elements of GI(p)* by multiplicative order.
pub fn order_census(prime: Prime) -> OrderCensus {
    let mut counts = BTreeMap::new();
    for z in GiElem::nonzero_elements(prime) {
        let n = element_order(z).expect("nonzero");
        *counts.entry(n).or_insert(0u64) += 1;
    }
    OrderCensus { entries: counts.into_iter().collect() }
}

/// The census predicted by cyclicity: φ(N) elements for every divisor N of
/// p² − 1.
pub fn cyclic_census(prime: Prime) -> OrderCensus {
    let entries = crate::gf::divisors(prime.full_order()).into_iter().map(|n| (n, euler_phi(n))).collect();
    OrderCensus { entries }
}
