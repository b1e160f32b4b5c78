//! The finite-field Z transform X(Z) = Σ x[n]·Z⁻ⁿ over Z ∈ GI(p)*, its
//! inverse, and its restriction to the unit circle (the finite-field DTFT).
//!
//! Series are summed in the Cesàro sense. For an eventually periodic x and a
//! fixed Z, the summands x[n]·Z⁻ⁿ are themselves eventually periodic with
//! period lcm(T, ord Z), so every evaluation is exact and finite. Points where
//! the series diverges are recorded as [`SeriesValue::Divergent`]; the region
//! of convergence is whatever is left.
//!
//! Because Zⁿ only depends on n mod (p² − 1), the inverse transform recovers
//! x[n] exactly only for sequences supported inside a window of that length.
//! Outside it returns the alias Σ_{k ≡ n} x[k].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cesaro::{cesaro_summands, SeriesValue, Summands};
use crate::error::{Error, Result};
use crate::gf::{lcm, GfElem, Prime, DEFAULT_TABLE_CEILING};
use crate::gi::GiElem;
use crate::group::{check_gs_generator, element_order};
use crate::sequence::SequenceSpec;

/// Cesàro value of Σ x[n]·Z⁻ⁿ.
pub fn ffzt_eval(x: &SequenceSpec, z: GiElem) -> Result<SeriesValue> {
    let prime = x.prime();
    if z.prime() != prime {
        return Err(Error::PrimeMismatch { left: prime.value(), right: z.prime().value() });
    }
    if z.is_zero() {
        return eval_at_zero(x);
    }
    let zinv = z.inv()?;
    let at = |n: i64| -> GiElem {
        let w = if n >= 0 { zinv.pow(n as u64) } else { z.pow(n.unsigned_abs()) };
        w.scale(x.value_at(n))
    };

    let transient: Vec<GiElem> = (x.min_index()..x.tail_start() as i64).map(at).collect();

    let period = lcm(x.tail().len() as u64, element_order(z)?) as usize;
    let start = x.tail_start() as i64;
    let mut tail = Vec::with_capacity(period);
    let mut w = zinv.pow(start as u64);
    for i in 0..period {
        tail.push(w.scale(x.value_at(start + i as i64)));
        w = w * zinv;
    }

    Ok(cesaro_summands(&Summands { prime, transient, tail }).into())
}

/// Z = 0 only makes sense when nothing sits at n > 0.
fn eval_at_zero(x: &SequenceSpec) -> Result<SeriesValue> {
    let right_support = x.prefix().iter().skip(1).any(|v| !v.is_zero()) || x.tail().iter().any(|v| !v.is_zero());
    if right_support {
        return Err(Error::Zero("Z transform of a sequence with support at n > 0"));
    }
    Ok(SeriesValue::Converges(GiElem::from_real(x.value_at(0))))
}

/// X(Z) at every nonzero Z, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformTable {
    prime: Prime,
    values: Vec<SeriesValue>,
}

impl TransformTable {
    pub fn new(prime: Prime, values: Vec<SeriesValue>) -> Result<TransformTable> {
        let expected = prime.full_order() as usize;
        if values.len() != expected {
            return Err(Error::Parse(format!("table has {} entries, expected {expected}", values.len())));
        }
        Ok(TransformTable { prime, values })
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn get(&self, z: GiElem) -> Option<SeriesValue> {
        if z.is_zero() || z.prime() != self.prime {
            return None;
        }
        self.values.get(z.index() - 1).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (GiElem, SeriesValue)> + '_ {
        self.values.iter().enumerate().map(move |(i, &v)| (GiElem::from_index(self.prime, i + 1), v))
    }

    /// Points where the series converges.
    pub fn roc(&self) -> Vec<GiElem> {
        self.iter().filter(|(_, v)| !v.is_divergent()).map(|(z, _)| z).collect()
    }

    pub fn divergent_points(&self) -> Vec<GiElem> {
        self.iter().filter(|(_, v)| v.is_divergent()).map(|(z, _)| z).collect()
    }

    /// Pointwise product with a function of Z; divergent entries stay
    /// divergent.
    pub fn map_values(&self, f: impl Fn(GiElem, GiElem) -> GiElem) -> TransformTable {
        let values = self
            .iter()
            .map(|(z, v)| match v {
                SeriesValue::Converges(x) => SeriesValue::Converges(f(z, x)),
                SeriesValue::Divergent => SeriesValue::Divergent,
            })
            .collect();
        TransformTable { prime: self.prime, values }
    }

    pub fn to_file(&self) -> TableFile {
        TableFile {
            p: self.prime.value(),
            entries: self
                .iter()
                .map(|(z, v)| TableEntry {
                    z: z.to_string(),
                    value: match v {
                        SeriesValue::Converges(x) => x.to_string(),
                        SeriesValue::Divergent => DIVERGENT.to_string(),
                    },
                })
                .collect(),
        }
    }

    pub fn from_file(file: &TableFile) -> Result<TransformTable> {
        let prime = Prime::new(file.p)?;
        if file.entries.len() as u64 != prime.full_order() {
            return Err(Error::Parse(format!(
                "table has {} entries, expected {}",
                file.entries.len(),
                prime.full_order()
            )));
        }
        let mut values = vec![None; prime.full_order() as usize];
        for entry in &file.entries {
            let z = GiElem::parse(&entry.z, prime)?;
            if z.is_zero() {
                return Err(Error::Parse("table entry at Z = 0".into()));
            }
            let value = if entry.value == DIVERGENT {
                SeriesValue::Divergent
            } else {
                SeriesValue::Converges(GiElem::parse(&entry.value, prime)?)
            };
            let slot = &mut values[z.index() - 1];
            if slot.is_some() {
                return Err(Error::Parse(format!("duplicate table entry for Z = {z}")));
            }
            *slot = Some(value);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    Error::Parse(format!("table has no entry for Z = {}", GiElem::from_index(prime, i + 1)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        TransformTable::new(prime, values)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("plain data");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<TransformTable> {
        let file: TableFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        TransformTable::from_file(&file)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("z,value\n");
        for entry in self.to_file().entries {
            s.push_str(&entry.z);
            s.push(',');
            s.push_str(&entry.value);
            s.push('\n');
        }
        s
    }
}

/// Sentinel used for divergent entries in table files.
pub const DIVERGENT: &str = "divergent";

/// On-disk layout of a [`TransformTable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub p: u64,
    pub entries: Vec<TableEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub z: String,
    pub value: String,
}

pub fn ffzt_table(x: &SequenceSpec) -> Result<TransformTable> {
    ffzt_table_with_ceiling(x, DEFAULT_TABLE_CEILING)
}

pub fn ffzt_table_with_ceiling(x: &SequenceSpec, ceiling: u64) -> Result<TransformTable> {
    let prime = x.prime();
    prime.check_ceiling(ceiling)?;
    let n = prime.full_order() as usize;
    let values =
        (1..=n).into_par_iter().map(|i| ffzt_eval(x, GiElem::from_index(prime, i))).collect::<Result<Vec<_>>>()?;
    TransformTable::new(prime, values)
}

/// N(Z)/D(Z) with both polynomials written in powers of Z⁻¹.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalForm {
    pub num: Vec<GfElem>,
    pub den: Vec<GfElem>,
    /// Roots of the denominator in GI(p)*.
    pub poles: Vec<GiElem>,
    /// Roots of the numerator in GI(p)* that are not poles.
    pub zeros: Vec<GiElem>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RationalValue {
    Value(GiElem),
    Pole,
}

fn eval_poly_inv(coeffs: &[GfElem], zinv: GiElem) -> GiElem {
    let prime = zinv.prime();
    coeffs.iter().rev().fold(GiElem::zero(prime), |acc, &c| acc * zinv + GiElem::from_real(c))
}

impl RationalForm {
    /// Locates poles and zeros by searching all of GI(p)*.
    pub fn new(num: Vec<GfElem>, den: Vec<GfElem>) -> Result<RationalForm> {
        let prime = den
            .first()
            .or(num.first())
            .map(|c| c.prime())
            .ok_or_else(|| Error::InvalidSequence("empty rational form".into()))?;
        if den.iter().all(|c| c.is_zero()) {
            return Err(Error::Zero("rational form denominator"));
        }
        if let Some(c) = num.iter().chain(&den).find(|c| c.prime() != prime) {
            return Err(Error::PrimeMismatch { left: prime.value(), right: c.prime().value() });
        }
        prime.check_ceiling(DEFAULT_TABLE_CEILING)?;
        let mut poles = Vec::new();
        let mut zeros = Vec::new();
        for z in GiElem::nonzero_elements(prime) {
            let zinv = z.inv()?;
            if eval_poly_inv(&den, zinv).is_zero() {
                poles.push(z);
            } else if eval_poly_inv(&num, zinv).is_zero() {
                zeros.push(z);
            }
        }
        Ok(RationalForm { num, den, poles, zeros })
    }
}

/// A/(1 − aZ⁻¹), the transform of A·aⁿ·u[n].
pub fn exponential_closed_form(amplitude: GfElem, base: GfElem) -> Result<RationalForm> {
    if base.is_zero() {
        return Err(Error::Zero("exponential base (use the impulse form)"));
    }
    let prime = base.prime();
    RationalForm::new(vec![amplitude], vec![prime.one(), -base])
}

pub fn rational_eval(f: &RationalForm, z: GiElem) -> Result<RationalValue> {
    if z.is_zero() {
        return Err(Error::Zero("rational evaluation"));
    }
    let zinv = z.inv()?;
    let den = eval_poly_inv(&f.den, zinv);
    if den.is_zero() {
        return Ok(RationalValue::Pole);
    }
    Ok(RationalValue::Value(eval_poly_inv(&f.num, zinv) * den.inv()?))
}

/// Σ over nonzero Z of Zⁱ: p − 1 (that is, p² − 1 reduced) when
/// (p² − 1) | i, zero otherwise.
pub fn lemma1_sum(i: u64, prime: Prime) -> Result<GfElem> {
    prime.check_ceiling(DEFAULT_TABLE_CEILING)?;
    let sum = GiElem::nonzero_elements(prime).fold(GiElem::zero(prime), |acc, z| acc + z.pow(i));
    if !sum.is_real() {
        return Err(Error::NonRealResult(sum));
    }
    Ok(sum.re())
}

/// (p² − 1)⁻¹ · Σ_Z X(Z)·Zⁿ, without insisting the result is real.
pub fn iffzt_complex(table: &TransformTable, n: i64) -> Result<GiElem> {
    let prime = table.prime();
    let mut acc = GiElem::zero(prime);
    for (z, v) in table.iter() {
        let value = v.value().ok_or(Error::DivergentEntry(z))?;
        acc = acc + value * z.powi(n)?;
    }
    let scale = prime.elem((prime.full_order() % prime.value()) as i64).inv()?;
    Ok(acc.scale(scale))
}

/// Recovers x[n] from a complete table.
pub fn iffzt(table: &TransformTable, n: i64) -> Result<GfElem> {
    let v = iffzt_complex(table, n)?;
    if !v.is_real() {
        return Err(Error::NonRealResult(v));
    }
    Ok(v.re())
}

/// X(ε^θ), the Z transform on the unit circle.
pub fn ff_dtft(x: &SequenceSpec, theta: u64, epsilon: GiElem) -> Result<SeriesValue> {
    check_gs_generator(epsilon)?;
    let period = epsilon.prime().phase_order();
    if theta >= period {
        return Err(Error::ThetaOutOfRange { theta, period });
    }
    ffzt_eval(x, epsilon.pow(theta))
}
