//! The worked example end to end: ranks, the published closure
//! computations and both published flat lists, each checked by the oracle.

fn main() -> essplit::Result<()> {
    print!("{}", essplit::cli::demo_fig2()?);
    Ok(())
}
