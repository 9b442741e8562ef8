//! Circuits of the split matroid predicted from the base circuits, side by
//! side with the circuits of the split matrix.

use essplit::check::check_circuit_family;
use essplit::fixtures::figure2_context;
use essplit::LabelSet;

fn show(name: &str, sets: &[LabelSet]) {
    let s: Vec<String> = sets.iter().map(|c| c.to_string()).collect();
    println!("{name} ({}): {}", sets.len(), s.join(" "));
}

fn main() -> essplit::Result<()> {
    let ctx = figure2_context()?;
    println!("OX circuits: {}", ctx.ox_circuits()?.len());
    println!("EX circuits: {}", ctx.ex_circuits()?.len());

    let fam = ctx.predict_circuits()?;
    show("C0", &fam.c0);
    show("C1", &fam.c1);
    show("C2", &fam.c2);
    show("C3", &fam.c3);
    println!("Delta: {}", fam.delta);

    let check = check_circuit_family(&ctx)?;
    println!();
    println!("predicted {} sets, oracle {} circuits, equal: {}", check.predicted, check.oracle, check.equal);
    for c in &check.missing {
        println!("  circuit not predicted: {c}");
    }
    for c in &check.extra {
        println!("  predicted, not a circuit: {c}");
    }
    Ok(())
}
