//! Acceptance criteria. Every test writes one `criterion N: PASS|FAIL ...`
//! line straight to stdout (bypassing the test harness capture) and then
//! asserts the criterion at its stated tolerance.

use std::io::Write;
use std::time::{Duration, Instant};

use essplit::check::{run_check, CheckOptions};
use essplit::fixtures::{figure2_context, figure2_graph, figure2_line_split, BASE_FLATS, SPLIT_FLATS};
use essplit::matroid::parity_of;
use essplit::random::{random_connected_multigraph, random_context, random_line_split};
use essplit::{
    verify_equivalence, CircuitParity, ElemSet, LabelSet, LabeledGraph, LineSplitSpec, SplitContext,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn report(n: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "criterion {n}: {verdict}  {detail}");
    let _ = out.flush();
}

fn set(labels: &[&str]) -> LabelSet {
    LabelSet::new(labels.iter().copied())
}

/// Random instances for the circuit-family criterion: 4 to 9 elements,
/// at most five rows, so rank at most 5.
fn family_instances() -> impl Iterator<Item = SplitContext> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    (0..200).map(move |_| random_context(&mut rng, 4..=9, 5))
}

/// Random instances for the rank criterion: at most 7 elements.
fn rank_instances() -> impl Iterator<Item = SplitContext> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    (0..60).map(move |_| random_context(&mut rng, 1..=7, 5))
}

/// Small random instances for the closure and flat criteria.
fn small_instances(seed: u64) -> impl Iterator<Item = SplitContext> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..60).map(move |_| random_context(&mut rng, 2..=7, 4))
}

#[test]
fn criterion_1_closure_illustrations() {
    let published: [(&[&str], &[&str]); 11] = [
        (&["4", "5"], &["4", "5"]),
        (&["1", "5"], &["1", "5", "6"]),
        (&["1", "4", "6", "x"], &["1", "4", "6", "x", "a"]),
        (&["1", "6", "a"], &["1", "5", "6", "a"]),
        (&["2", "6"], &["2", "6", "gamma"]),
        (&["4", "5", "gamma"], &["3", "4", "5", "gamma"]),
        (&["1", "6", "gamma"], &["1", "2", "5", "6", "gamma"]),
        (&["a", "gamma"], &["y", "a", "gamma"]),
        (&["2", "6", "a"], &["2", "6", "y", "a", "gamma"]),
        (&["4", "5", "x", "gamma"], &["4", "5", "x", "y", "a", "gamma"]),
        (&["2", "6", "y"], &["2", "6", "y", "a", "gamma"]),
    ];
    let start = Instant::now();
    let ctx = figure2_context().unwrap();
    let mut misses = Vec::new();
    for (q, expected) in published {
        let expected = set(expected);
        let r = ctx.predict_closure(&ctx.query(&set(q)).unwrap(), true).unwrap();
        let formula = r.formula.clone().unwrap_or_else(LabelSet::empty);
        let oracle = r.oracle.clone().unwrap();
        if formula != expected || oracle != expected {
            misses.push(format!(
                "{} expected {expected} formula {formula} oracle {oracle}",
                set(q)
            ));
        }
    }
    let elapsed = start.elapsed();
    let pass = misses.is_empty() && elapsed < Duration::from_secs(1);
    report(
        "1",
        pass,
        &format!("{}/11 exact, {elapsed:.2?}; {}", 11 - misses.len(), misses.join("; ")),
    );
    assert!(pass, "{misses:#?}");
}

#[test]
fn criterion_2_published_flats() {
    let ctx = figure2_context().unwrap();
    let check = |m: &essplit::BinaryMatroid, list: &[&[&str]]| -> (Vec<LabelSet>, usize) {
        let rejected: Vec<LabelSet> = list
            .iter()
            .map(|f| set(f))
            .filter(|f| !m.is_flat(f).unwrap())
            .collect();
        let oracle = m.flats().unwrap().into_iter().filter(|f| !f.is_empty()).count();
        (rejected, oracle)
    };
    let (base_rejected, base_total) = check(ctx.base(), &BASE_FLATS);
    let (split_rejected, split_total) = check(ctx.split_matroid(), &SPLIT_FLATS);
    let pass = base_rejected.is_empty() && split_rejected.is_empty();
    let names = |v: &[LabelSet]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ");
    report(
        "2",
        pass,
        &format!(
            "M: {}/32 confirmed (oracle has {base_total} nonempty flats); \
             split: {}/50 confirmed (oracle has {split_total}); rejected: {} {}",
            32 - base_rejected.len(),
            50 - split_rejected.len(),
            names(&base_rejected),
            names(&split_rejected),
        ),
    );
    assert!(pass, "rejected {base_rejected:?} {split_rejected:?}");
}

#[test]
fn criterion_3_circuit_family() {
    let start = Instant::now();
    let (mut trials, mut failed) = (0, 0);
    let (mut missing, mut extra) = (0, 0);
    let mut first = None;
    for ctx in family_instances() {
        trials += 1;
        let predicted = ctx.predict_circuit_masks().unwrap().flattened();
        let oracle = ctx.split_matroid().circuit_masks().unwrap();
        let miss: Vec<ElemSet> = oracle.iter().copied().filter(|c| !predicted.contains(c)).collect();
        let ext: Vec<ElemSet> = predicted.iter().copied().filter(|c| !oracle.contains(c)).collect();
        if !miss.is_empty() || !ext.is_empty() {
            failed += 1;
            missing += (!miss.is_empty()) as usize;
            extra += (!ext.is_empty()) as usize;
            if first.is_none() {
                let g = ctx.split_ground();
                first = Some(format!(
                    "{ctx:?} missing {:?} extra {:?}",
                    miss.iter().map(|&c| g.labels_of(c).to_string()).collect::<Vec<_>>(),
                    ext.iter().map(|&c| g.labels_of(c).to_string()).collect::<Vec<_>>()
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = trials >= 200 && failed == 0 && elapsed < Duration::from_secs(60);
    report(
        "3",
        pass,
        &format!(
            "{}/{trials} families equal, {elapsed:.2?}; {missing} miss oracle circuits, \
             {extra} predict non-circuits; first: {}",
            trials - failed,
            first.as_deref().unwrap_or("-")
        ),
    );
    assert!(pass, "{}", first.unwrap_or_default());
}

fn rank_disagreements(ctx: &SplitContext) -> Vec<String> {
    let split = ctx.split_matroid();
    split
        .all()
        .subsets()
        .filter_map(|m| {
            let q = ctx.query_mask(m);
            let (p, o) = (ctx.predict_rank(&q).unwrap(), split.rank_mask(m));
            (p != o).then(|| format!("{} predicted {p} oracle {o}", ctx.split_ground().labels_of(m)))
        })
        .collect()
}

#[test]
fn criterion_4_rank_formula() {
    let fixture = figure2_context().unwrap();
    let mut bad = rank_disagreements(&fixture);
    let mut random = 0;
    for ctx in rank_instances() {
        random += 1;
        bad.extend(rank_disagreements(&ctx));
    }
    let pass = bad.is_empty() && random >= 50;
    report(
        "4",
        pass,
        &format!("fixture 1024 subsets + {random} random matroids: {} disagreements", bad.len()),
    );
    assert!(pass, "{bad:#?}");
}

#[test]
fn criterion_5_rank_goes_up_by_one() {
    let fixture = figure2_context().unwrap();
    let fixture_ok = fixture.base().rank() == 4 && fixture.split_matroid().rank() == 5;
    let mut bad = Vec::new();
    let mut n = 0;
    for ctx in family_instances().chain(rank_instances()) {
        n += 1;
        if ctx.split_matroid().rank() != ctx.base().rank() + 1 {
            bad.push(format!("{ctx:?}"));
        }
    }
    let pass = fixture_ok && bad.is_empty();
    report("5", pass, &format!("fixture 5 = 4 + 1: {fixture_ok}; {}/{n} random contexts hold", n - bad.len()));
    assert!(pass, "{bad:#?}");
}

#[test]
fn criterion_6_closure_dispatcher() {
    let opts = CheckOptions::default();
    let (mut disagree, mut shape, mut conflict, mut none, mut queries) = (0, 0, 0, 0, 0);
    let mut instances = 0;
    let mut witnesses = Vec::new();
    let contexts = std::iter::once(figure2_context().unwrap()).chain(small_instances(0x5eed_0006));
    for ctx in contexts {
        instances += 1;
        let s = run_check(&ctx, &opts).unwrap();
        queries += s.queries;
        disagree += s.closure_disagreements.count;
        shape += s.shape_misses.count;
        conflict += s.lemma_conflicts.count;
        none += s.no_lemma_applies;
        if witnesses.len() < 3 {
            if let Some(w) = s.closure_disagreements.witnesses.first() {
                let ids: Vec<&str> = w.matched.iter().map(|c| c.id()).collect();
                witnesses.push(format!(
                    "{ctx:?} A' = {} [{}] formula {} oracle {}",
                    w.query,
                    ids.join(","),
                    w.formula,
                    w.other
                ));
            }
        }
    }
    let pass = disagree == 0 && shape == 0 && conflict == 0;
    report(
        "6",
        pass,
        &format!(
            "{instances} instances, {queries} queries: (a) {disagree} formula/oracle \
             disagreements, (b) {shape} closures outside the seven shapes, (c) {conflict} \
             lemma conflicts; no lemma applied to {none}"
        ),
    );
    assert!(pass, "{witnesses:#?}");
}

#[test]
fn criterion_7_flat_conditions() {
    let opts = CheckOptions::default();
    let (mut violations, mut certified, mut instances) = (0, 0, 0);
    let mut witnesses = Vec::new();
    let contexts = std::iter::once(figure2_context().unwrap()).chain(small_instances(0x5eed_0007));
    for ctx in contexts {
        instances += 1;
        let s = run_check(&ctx, &opts).unwrap();
        violations += s.flat_violations.count;
        certified += s.flats_certified;
        witnesses.extend(s.flat_violations.witnesses.iter().map(|w| format!("{ctx:?} {w:?}")));
    }
    let pass = violations == 0 && certified > 0;
    report(
        "7",
        pass,
        &format!("{instances} instances: {certified} certified flats, {violations} violations"),
    );
    assert!(pass, "{witnesses:#?}");
}

fn figure1_star() -> (LabeledGraph, LineSplitSpec) {
    let mut edges = vec![("e".to_string(), "u".to_string(), "v".to_string())];
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for i in 1..=3 {
        edges.push((format!("ux{i}"), "u".into(), format!("x{i}")));
        edges.push((format!("uy{i}"), "u".into(), format!("y{i}")));
        left.push(format!("ux{i}"));
        right.push(format!("uy{i}"));
    }
    // Close the picture into cycles through v so the split has content.
    edges.push(("vx1".into(), "v".into(), "x1".into()));
    edges.push(("vy1".into(), "v".into(), "y1".into()));
    edges.push(("x3y3".into(), "x3".into(), "y3".into()));
    let spec = LineSplitSpec {
        split_vertex: "u".into(),
        anchor_edge: "e".into(),
        left_edges: LabelSet::new(left),
        right_edges: LabelSet::new(right),
    };
    (LabeledGraph::from_edges(&edges).unwrap(), spec)
}

#[test]
fn criterion_8_graph_equivalence() {
    let (star, star_spec) = figure1_star();
    let fixed = verify_equivalence(&star, &star_spec).unwrap()
        && verify_equivalence(&figure2_graph(), &figure2_line_split()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let (mut trials, mut failed) = (0, Vec::new());
    while trials < 120 {
        let g = random_connected_multigraph(&mut rng, 6, 9);
        let Some(spec) = random_line_split(&mut rng, &g) else { continue };
        trials += 1;
        if !verify_equivalence(&g, &spec).unwrap() {
            failed.push(format!("{}{spec:?}", g.to_text()));
        }
    }
    let pass = fixed && failed.is_empty() && trials >= 100;
    report(
        "8",
        pass,
        &format!("figure configurations: {fixed}; {}/{trials} random multigraphs", trials - failed.len()),
    );
    assert!(pass, "{failed:#?}");
}

/// Counts failures of the four property suites on one instance.
#[derive(Default, Debug)]
struct Props {
    closure_span: usize,
    closure_absorb: usize,
    ox_subcircuit: usize,
    ox_triples: usize,
    t_in_closure: usize,
}

fn property_failures(ctx: &SplitContext, p: &mut Props) {
    for m in [ctx.base(), ctx.split_matroid()] {
        let circuits = m.circuit_masks().unwrap();
        for a in m.all().subsets() {
            let cl = m.closure_mask(a);
            let span = m
                .all()
                .difference(a)
                .iter()
                .filter(|&x| circuits.iter().any(|c| c.contains(x) && c.is_subset(a.with(x))))
                .fold(a, ElemSet::with);
            p.closure_span += (span != cl) as usize;
            p.closure_absorb += cl.iter().filter(|&x| m.closure_mask(a.with(x)) != cl).count();
        }
    }

    let e = ctx.e_index();
    let g = ctx.base_ground();
    let base_circuits = ctx.base().circuit_masks().unwrap();
    let through_e = |v: &[ElemSet]| v.iter().copied().filter(|c| c.contains(e)).collect::<Vec<_>>();
    for co in through_e(ctx.ox_circuits().unwrap()) {
        for ce in through_e(ctx.ex_circuits().unwrap()) {
            p.ox_triples += 1;
            let a = co.union(ce).without(e);
            let found = ctx
                .find_ox_subcircuit(&g.labels_of(co), &g.labels_of(ce), &g.labels_of(a))
                .ok()
                .and_then(|c| g.mask_of(&c).ok());
            let ok = found.is_some_and(|c| {
                base_circuits.contains(&c)
                    && parity_of(c, ctx.x_mask()) == CircuitParity::OX
                    && c.is_subset(a)
            });
            p.ox_subcircuit += (!ok) as usize;
        }
    }

    for a in ctx.base().all().subsets() {
        let cl = ctx.base().closure_mask(a);
        if cl.contains(e) && !ctx.t_mask(a).unwrap().is_subset(cl) {
            p.t_in_closure += 1;
        }
    }
}

#[test]
fn criterion_9_property_suites() {
    let mut p = Props::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let contexts = std::iter::once(figure2_context().unwrap())
        .chain((0..150).map(|_| random_context(&mut rng, 2..=8, 5)));
    let mut instances = 0;
    for ctx in contexts {
        instances += 1;
        property_failures(&ctx, &mut p);
    }
    let pass = p.closure_span == 0
        && p.closure_absorb == 0
        && p.ox_subcircuit == 0
        && p.t_in_closure == 0
        && p.ox_triples > 0;
    report(
        "9",
        pass,
        &format!(
            "{instances} instances: closure as circuit span {} failures, absorbing closure \
             members {} failures, OX subcircuit {} failures over {} triples, T inside the \
             closure {} failures",
            p.closure_span, p.closure_absorb, p.ox_subcircuit, p.ox_triples, p.t_in_closure
        ),
    );
    assert!(pass, "{p:?}");
}
