//! Closure case analysis on the worked example: which lemmas fire for each
//! published query, what their formula gives and what the oracle says.

use essplit::fixtures::{figure2_context, pretty, CLOSURE_ILLUSTRATIONS};
use essplit::LabelSet;

fn main() -> essplit::Result<()> {
    let ctx = figure2_context()?;
    for ill in CLOSURE_ILLUSTRATIONS {
        let q = ctx.query(&LabelSet::new(ill.query.iter().copied()))?;
        let report = ctx.predict_closure(&q, true)?;
        let ids: Vec<&str> = report.matched.iter().map(|c| c.id()).collect();
        let show = |s: &Option<LabelSet>| s.as_ref().map_or("-".into(), |s| s.display_with(pretty));
        println!(
            "{:<16} [{}] formula {} oracle {}",
            ctx.split_ground().labels_of(q.a_prime).display_with(pretty),
            ids.join(","),
            show(&report.formula),
            show(&report.oracle),
        );
        println!("{:16} published {}", "", LabelSet::new(ill.published.iter().copied()).display_with(pretty));
        if let Some(note) = ill.note {
            println!("{:16} note: {note}", "");
        }
    }
    println!();
    println!("{}", ctx.predict_closure(&ctx.query(&LabelSet::new(["2", "6"]))?, true)?.to_json());
    Ok(())
}
