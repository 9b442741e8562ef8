//! Runs the full predictor-versus-oracle comparison on seeded random
//! instances and prints a one-line summary for each.
//!
//! `cargo run --release --example random_check [instances] [seed]`

use essplit::check::{run_check, CheckOptions};
use essplit::random::random_context;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> essplit::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut passed = 0;
    for i in 0..n {
        let ctx = random_context(&mut rng, 3..=8, 5);
        let s = run_check(&ctx, &CheckOptions::default())?;
        passed += s.passed() as usize;
        println!(
            "#{i:<3} |E|={} r={} closure {:>3} shape {:>3} rank {} flat {} family {}",
            ctx.base().len(),
            s.base_rank,
            s.closure_disagreements.count,
            s.shape_misses.count,
            s.rank_disagreements.count,
            s.flat_violations.count,
            if s.circuit_family.equal { "ok" } else { "differs" },
        );
    }
    println!("{passed}/{n} instances with no disagreement");
    Ok(())
}
