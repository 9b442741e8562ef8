//! Brute-force circuits, closures and flats of a binary matroid.

use essplit::fixtures::figure2_graph;
use essplit::graph::cycle_matroid;
use essplit::LabelSet;

fn main() -> essplit::Result<()> {
    let m = cycle_matroid(&figure2_graph())?;
    println!("ground {:?}, rank {}", m.ground().labels(), m.rank());

    let circuits = m.circuits()?;
    println!("{} circuits:", circuits.len());
    for c in &circuits {
        println!("  {c}");
    }

    for a in [&["4", "5"][..], &["1", "5"], &["1", "4", "6", "x"]] {
        let a = LabelSet::new(a.iter().copied());
        println!("cl({a}) = {}", m.closure_of(&a)?);
    }

    let flats = m.flats()?;
    println!("{} flats, by rank:", flats.len());
    for r in 0..=m.rank() {
        let of_rank: Vec<String> = flats
            .iter()
            .filter(|f| m.rank_of(f).unwrap() == r)
            .map(|f| f.to_string())
            .collect();
        println!("  rank {r}: {}", of_rank.join(" "));
    }
    Ok(())
}
