//! Builds the split matrix for `X = {x, y}`, `e = y` and shows where the
//! new row and the two new columns go.

use essplit::fixtures::figure2_context;
use essplit::LabelSet;

fn main() -> essplit::Result<()> {
    let ctx = figure2_context()?;
    let m = ctx.build_split_matrix();
    print!("{}", m.to_text());
    println!();
    println!("X = {}, e = {}", ctx.x_set(), ctx.e_label());
    println!("rank {} -> {}", ctx.base().rank(), ctx.split_matroid().rank());
    let e_plus_a = m.column_sum(&LabelSet::new([ctx.e_label(), ctx.label_a()]))?;
    println!("column {} + column {} = column {}: {}", ctx.e_label(), ctx.label_a(), ctx.label_gamma(),
        e_plus_a == m.column(ctx.label_gamma())?);
    Ok(())
}
