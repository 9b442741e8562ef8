use essplit::fixtures::figure2_graph;
use essplit::graph::cycle_matroid;
use essplit::random::random_matrix;
use essplit::{classify_circuit, BinaryMatroid, Caps, CircuitParity, ElemSet, Error, GF2Matrix, LabelSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_matroid(seed: u64, max_cols: usize) -> BinaryMatroid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    use rand::Rng;
    let rows = rng.gen_range(1..=5);
    let cols = rng.gen_range(1..=max_cols);
    BinaryMatroid::new(random_matrix(&mut rng, rows, cols))
}

/// Dependence without elimination: some nonempty subset of the columns
/// sums to zero.
fn dependent_by_search(m: &BinaryMatroid, s: ElemSet) -> bool {
    let cols = m.matrix();
    s.subsets()
        .filter(|t| !t.is_empty())
        .any(|t| t.iter().fold(0u64, |acc, j| acc ^ cols.column_word(j)) == 0)
}

fn circuits_by_search(m: &BinaryMatroid) -> Vec<ElemSet> {
    let mut out: Vec<ElemSet> = m
        .all()
        .subsets()
        .filter(|&s| dependent_by_search(m, s) && s.iter().all(|i| !dependent_by_search(m, s.without(i))))
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(*b));
    out
}

fn fig2() -> BinaryMatroid {
    cycle_matroid(&figure2_graph()).unwrap()
}

fn set(labels: &[&str]) -> LabelSet {
    LabelSet::new(labels.iter().copied())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn circuits_match_search(seed in any::<u64>()) {
        let m = random_matroid(seed, 8);
        prop_assert_eq!(m.circuit_masks().unwrap().to_vec(), circuits_by_search(&m));
    }

    #[test]
    fn closure_is_idempotent_and_absorbs_members(seed in any::<u64>()) {
        let m = random_matroid(seed, 8);
        for a in m.all().subsets() {
            let cl = m.closure_mask(a);
            prop_assert!(a.is_subset(cl));
            prop_assert_eq!(m.closure_mask(cl), cl);
            for x in cl.iter() {
                prop_assert_eq!(m.closure_mask(a.with(x)), cl);
            }
        }
    }

    #[test]
    fn closure_is_circuit_span(seed in any::<u64>()) {
        let m = random_matroid(seed, 10);
        let circuits = m.circuit_masks().unwrap();
        for a in m.all().subsets() {
            let mut expected = a;
            for x in m.all().difference(a).iter() {
                if circuits.iter().any(|c| c.contains(x) && c.is_subset(a.with(x))) {
                    expected = expected.with(x);
                }
            }
            prop_assert_eq!(m.closure_mask(a), expected);
        }
    }

    #[test]
    fn circuit_axioms(seed in any::<u64>()) {
        let m = random_matroid(seed, 9);
        let circuits = m.circuit_masks().unwrap();
        for (i, &c1) in circuits.iter().enumerate() {
            for &c2 in &circuits[i + 1..] {
                prop_assert!(!c1.is_subset(c2) && !c2.is_subset(c1));
                for z in c1.intersection(c2).iter() {
                    let rest = c1.union(c2).without(z);
                    prop_assert!(circuits.iter().any(|c| c.is_subset(rest)));
                }
                prop_assert!(m.is_dependent_mask(c1.symmetric_difference(c2)));
            }
        }
    }

    #[test]
    fn flats_are_closed_sets(seed in any::<u64>()) {
        let m = random_matroid(seed, 8);
        let flats = m.flat_masks().unwrap();
        let expected: Vec<ElemSet> = m.all().subsets().filter(|&a| m.closure_mask(a) == a).collect();
        prop_assert_eq!(flats.len(), expected.len());
        for f in expected {
            prop_assert!(flats.contains(&f));
        }
    }
}

#[test]
fn figure2_ranks() {
    let m = fig2();
    assert_eq!(m.rank_of(&LabelSet::empty()).unwrap(), 0);
    assert_eq!(m.rank_of(&set(&["4", "5", "x"])).unwrap(), 2);
    assert_eq!(m.rank(), 4);
}

#[test]
fn figure2_closures() {
    let m = fig2();
    assert_eq!(m.closure_of(&set(&["4", "5"])).unwrap(), set(&["4", "5", "x"]));
    assert_eq!(m.closure_of(&set(&["1", "5"])).unwrap(), set(&["1", "5", "6"]));
    let all = LabelSet::new(m.ground().labels().iter().cloned());
    assert_eq!(m.closure_of(&all).unwrap(), all);
}

#[test]
fn figure2_circuits_and_flats() {
    let m = fig2();
    let circuits = m.circuits().unwrap();
    for c in [&["1", "5", "6"][..], &["4", "5", "x"], &["2", "6", "y"], &["3", "x", "y"], &["1", "2", "3", "4"]] {
        assert!(circuits.contains(&set(c)), "missing {c:?}");
    }
    assert!(m.is_flat(&set(&["1", "5", "6"])).unwrap());
    assert!(!m.is_flat(&set(&["4", "5"])).unwrap());
    assert!(m.is_flat(&LabelSet::new(m.ground().labels().iter().cloned())).unwrap());
}

#[test]
fn free_matroid_and_loop() {
    let free = BinaryMatroid::new(GF2Matrix::from_rows(vec!["p", "q"], &[&[1, 0], &[0, 1]]).unwrap());
    assert!(free.circuits().unwrap().is_empty());
    assert_eq!(
        free.flats().unwrap(),
        vec![LabelSet::empty(), set(&["p"]), set(&["q"]), set(&["p", "q"])]
    );
    let looped = BinaryMatroid::new(GF2Matrix::from_rows(vec!["z", "p"], &[&[0, 1]]).unwrap());
    assert!(looped.circuits().unwrap().contains(&set(&["z"])));
}

#[test]
fn classification() {
    let x = set(&["x", "y"]);
    assert_eq!(classify_circuit(&set(&["2", "6", "y"]), &x), CircuitParity::OX);
    assert_eq!(classify_circuit(&set(&["1", "2", "3", "4"]), &x), CircuitParity::EX);
    assert_eq!(classify_circuit(&set(&["3", "x", "y"]), &x), CircuitParity::EX);
}

#[test]
fn caps_are_enforced() {
    let m = BinaryMatroid::with_caps(fig2().matrix().clone(), Caps { circuits: 7, subsets: 7 });
    assert!(matches!(m.circuits(), Err(Error::GroundSetTooLarge { size: 8, cap: 7 })));
    assert!(matches!(m.flats(), Err(Error::GroundSetTooLarge { .. })));
}

#[test]
fn unknown_labels_are_rejected() {
    assert_eq!(fig2().rank_of(&set(&["q"])).unwrap_err(), Error::UnknownLabel("q".into()));
}
