// Builds the relators of the test group, symmetrizes them and measures pieces.

use std::collections::BTreeSet;

use zarlab::presentation::{
    check_metric_condition, max_piece_length, relator, symmetrized_family, Lambda, Params,
};

pub fn run() -> zarlab::Result<()> {
    let params = Params::new(8)?;
    for i in 1..=3 {
        println!("w_{i} = {}", relator(&params, i)?);
    }

    let indices: BTreeSet<u32> = (1..=6).collect();
    let family = symmetrized_family(&params, &indices)?;
    println!("symmetrized family over x1..x6: {} members", family.len());

    let piece = max_piece_length(&family)?;
    println!("longest piece: {}", piece.length);
    let (u, v) = &piece.witness;
    println!("  realized by {u} and {v}");

    for (num, den) in [(1, 6), (1, 8), (1, 16)] {
        let lambda = Lambda::new(num, den)?;
        println!("C'({lambda}): {}", check_metric_condition(&family, lambda)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> zarlab::Result<()> {
    run()
}
