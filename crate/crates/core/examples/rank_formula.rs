//! Split-matroid ranks from base ranks, checked against the oracle on every
//! subset of the split ground set.

use std::collections::BTreeMap;

use essplit::fixtures::figure2_context;

fn main() -> essplit::Result<()> {
    let ctx = figure2_context()?;
    let split = ctx.split_matroid();
    let mut by_case: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for m in split.all().subsets() {
        let q = ctx.query_mask(m);
        let case = match (q.has_a, q.has_gamma) {
            (false, false) => "A",
            (true, false) => "A + a",
            (false, true) => "A + gamma",
            (true, true) => "A + a + gamma",
        };
        let entry = by_case.entry(case).or_default();
        entry.0 += 1;
        if ctx.predict_rank(&q)? == split.rank_mask(m) {
            entry.1 += 1;
        }
    }
    for (case, (total, ok)) in by_case {
        println!("{case:<14} {ok}/{total} agree with the oracle");
    }
    for labels in [&["a"][..], &["2", "6", "gamma"], &["4", "5", "x"]] {
        let q = ctx.query(&essplit::LabelSet::new(labels.iter().copied()))?;
        println!("r'({}) = {}", ctx.split_ground().labels_of(q.a_prime), ctx.predict_rank(&q)?);
    }
    Ok(())
}
