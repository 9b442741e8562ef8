//! Rank, dependence and column sums over GF(2).
//!
//! Run with `cargo run --example gf2_rank [matrix-file]`; without an argument
//! the worked example's incidence matrix is used.

use essplit::{GF2Matrix, LabelSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => include_str!("../data/figure2.matrix").to_string(),
    };
    let m = GF2Matrix::parse(&text)?;
    println!("{} x {} matrix, rank {}", m.n_rows(), m.n_cols(), m.rank());
    println!("transpose rank {}", m.transpose().rank());

    for cols in [&["4", "5", "x"][..], &["1", "2"], &["1", "2", "3", "4"]] {
        let cols = LabelSet::new(cols.iter().copied());
        if cols.iter().all(|c| m.ground().contains(c)) {
            let sum = m.column_sum(&cols)?;
            println!(
                "{cols}: dependent = {}, column sum weight {}",
                m.columns_dependent(&cols)?,
                sum.weight()
            );
        }
    }
    Ok(())
}
