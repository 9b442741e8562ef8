//! Which flats of the split matroid the sufficient conditions certify, and
//! which ones only the oracle finds.

use std::collections::BTreeMap;

use essplit::fixtures::figure2_context;

fn main() -> essplit::Result<()> {
    let ctx = figure2_context()?;
    let split = ctx.split_matroid();
    let g = ctx.split_ground();
    let mut certified: BTreeMap<String, usize> = BTreeMap::new();
    let mut uncertified = Vec::new();
    for f in split.flat_masks()? {
        let q = ctx.query_mask(f);
        if !ctx.base().is_flat_mask(q.a) {
            uncertified.push(g.labels_of(f));
            continue;
        }
        match ctx.predict_is_flat(&q)? {
            Some(c) => *certified.entry(c.to_string()).or_default() += 1,
            None => uncertified.push(g.labels_of(f)),
        }
    }
    for (c, n) in &certified {
        println!("condition {c}: {n} flats");
    }
    println!("{} flats need the oracle:", uncertified.len());
    for f in uncertified {
        println!("  {f}");
    }
    Ok(())
}
