//! Round trip through the table and the inverse transform, including the
//! aliasing that appears once support reaches n = p² − 1.

use galois_z::ffzt::{ffzt_table, iffzt};
use galois_z::sequence::SequenceSpec;
use galois_z::Prime;

fn main() -> galois_z::Result<()> {
    let p = Prime::new(7)?;
    let window = p.full_order() as usize;

    let values: Vec<_> = (0..window as i64).map(|n| p.elem((n * n + 3 * n + 1) % 7)).collect();
    let x = SequenceSpec::finite(p, values.clone())?;
    let table = ffzt_table(&x)?;
    let recovered: Vec<_> = (0..window as i64).map(|n| iffzt(&table, n)).collect::<Result<_, _>>()?;
    println!("recovered all {window} samples: {}", recovered == values);

    let json = table.to_json();
    let reloaded = galois_z::ffzt::TransformTable::from_json(&json)?;
    println!("JSON round trip is exact: {}", reloaded == table);

    let mut long = vec![p.zero(); window + 1];
    long[0] = p.one();
    long[window] = p.elem(2);
    let aliased = ffzt_table(&SequenceSpec::finite(p, long)?)?;
    println!(
        "x[0] = 1, x[{window}] = 2 → inverse gives x[0] = {} (the two samples alias)",
        iffzt(&aliased, 0)?.value()
    );
    Ok(())
}
