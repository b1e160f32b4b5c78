//! Tabulates the Z transform of A·aⁿu[n], compares it with A/(1 − aZ⁻¹) and
//! reports the region of convergence.
//!
//!     cargo run --example ffzt_roc -- 11 3

use galois_z::cesaro::SeriesValue;
use galois_z::ffzt::{exponential_closed_form, ffzt_table, rational_eval, RationalValue};
use galois_z::sequence::SequenceSpec;
use galois_z::Prime;

fn main() -> galois_z::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<i64>().expect("integer argument"));
    let p = Prime::new(args.next().unwrap_or(7) as u64)?;
    let a = p.elem(args.next().unwrap_or(3));

    let x = SequenceSpec::exponential(p.one(), a);
    let table = ffzt_table(&x)?;
    let closed = exponential_closed_form(p.one(), a)?;

    let mut agree = 0;
    for (z, value) in table.iter() {
        match (value, rational_eval(&closed, z)?) {
            (SeriesValue::Converges(v), RationalValue::Value(w)) if v == w => agree += 1,
            (SeriesValue::Divergent, RationalValue::Pole) => {}
            (got, want) => println!("mismatch at {z}: {got:?} vs {want:?}"),
        }
    }
    let poles: Vec<String> = table.divergent_points().iter().map(|z| z.to_string()).collect();
    println!("x[n] = {}ⁿu[n] over GF({})", a.value(), p.value());
    println!("ROC: {} of {} points, closed form agrees on {agree}", table.roc().len(), p.full_order());
    println!("poles: {}", poles.join(", "));
    println!("closed-form poles: {:?}", closed.poles.iter().map(|z| z.to_string()).collect::<Vec<_>>());
    Ok(())
}
