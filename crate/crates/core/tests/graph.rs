use std::collections::BTreeSet;

use essplit::fixtures::{figure2_graph, figure2_line_split};
use essplit::graph::{cycle_matroid, verify_equivalence_with};
use essplit::random::{random_connected_multigraph, random_line_split};
use essplit::{
    incidence_matrix, n_line_split, verify_equivalence, LabelSet, LabeledGraph, LineSplitSpec,
    NewLabels,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Hub `u` joined to `v` by `e`, to `x1..x3` and to `y1..y3`.
fn star() -> LabeledGraph {
    let mut edges = vec![("e".to_string(), "u".to_string(), "v".to_string())];
    for side in ["x", "y"] {
        for i in 1..=3 {
            edges.push((format!("{side}{i}e"), "u".into(), format!("{side}{i}")));
        }
    }
    LabeledGraph::from_edges(&edges).unwrap()
}

/// The star with a rim `v - x1 - x2 - x3 - y3 - y2 - y1 - v`.
fn wheel() -> LabeledGraph {
    let rim = ["v", "x1", "x2", "x3", "y3", "y2", "y1", "v"];
    let mut edges: Vec<(String, String, String)> = star()
        .edges()
        .iter()
        .map(|e| (e.label.clone(), e.u.clone(), e.v.clone()))
        .collect();
    for (i, w) in rim.windows(2).enumerate() {
        edges.push((format!("r{i}"), w[0].into(), w[1].into()));
    }
    LabeledGraph::from_edges(&edges).unwrap()
}

fn hub_spec() -> LineSplitSpec {
    LineSplitSpec {
        split_vertex: "u".into(),
        anchor_edge: "e".into(),
        left_edges: LabelSet::new(["x1e", "x2e", "x3e"]),
        right_edges: LabelSet::new(["y1e", "y2e", "y3e"]),
    }
}

fn neighbours(g: &LabeledGraph, v: &str) -> BTreeSet<String> {
    g.edges()
        .iter()
        .filter(|e| e.touches(v) && !e.is_loop())
        .map(|e| e.other(v).to_string())
        .collect()
}

#[test]
fn star_split_has_the_expected_shape() {
    let h = n_line_split(&star(), &hub_spec(), &NewLabels::default()).unwrap();
    let set = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
    assert_eq!(neighbours(&h, "u1"), set(&["v", "x1", "x2", "x3", "u2"]));
    assert_eq!(neighbours(&h, "u2"), set(&["v", "y1", "y2", "y3", "u1"]));
    assert_eq!(neighbours(&h, "v"), set(&["u1", "u2"]));
    assert_eq!(h.degree("u1"), 3 + 2);
    assert_eq!(h.degree("u2"), 3 + 2);
    assert!(!h.vertices().iter().any(|v| v == "u"));
}

#[test]
fn star_and_wheel_are_equivalent() {
    assert!(verify_equivalence(&star(), &hub_spec()).unwrap());
    assert!(verify_equivalence(&wheel(), &hub_spec()).unwrap());
}

#[test]
fn tree_split_has_only_the_new_triangle() {
    let g = star();
    let h = n_line_split(&g, &hub_spec(), &NewLabels::default()).unwrap();
    let circuits = cycle_matroid(&h).unwrap().circuits().unwrap();
    assert_eq!(circuits, vec![LabelSet::new(["e", "a", "gamma"])]);
}

#[test]
fn figure2_split() {
    let g = figure2_graph();
    let spec = figure2_line_split();
    let x_set = spec.x_set();
    let x: BTreeSet<&str> = x_set.iter().collect();
    assert_eq!(x, BTreeSet::from(["x", "y"]));
    let h = n_line_split(&g, &spec, &NewLabels::default()).unwrap();
    assert_eq!((h.vertices().len(), h.edges().len()), (6, 10));
    assert!(verify_equivalence(&g, &spec).unwrap());
}

#[test]
fn figure2_incidence_rank() {
    let m = incidence_matrix(&figure2_graph()).unwrap();
    assert_eq!((m.n_rows(), m.n_cols()), (5, 8));
    assert_eq!(m.rank(), 4);
}

#[test]
fn graph_text_round_trip() {
    let g = LabeledGraph::parse(include_str!("../data/figure2.edges")).unwrap();
    assert_eq!(g, figure2_graph());
    assert_eq!(LabeledGraph::parse(&g.to_text()).unwrap(), g);
}

#[test]
fn random_multigraphs_split_equivalently() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut tried = 0;
    while tried < 200 {
        let g = random_connected_multigraph(&mut rng, 6, 9);
        let Some(spec) = random_line_split(&mut rng, &g) else { continue };
        tried += 1;
        let h = n_line_split(&g, &spec, &NewLabels::default()).unwrap();
        assert_eq!(h.vertices().len(), g.vertices().len() + 1);
        assert_eq!(h.edges().len(), g.edges().len() + 2);
        assert_eq!(h.degree("u1"), spec.left_edges.len() + 2);
        assert_eq!(h.degree("u2"), spec.right_edges.len() + 2);
        assert!(verify_equivalence(&g, &spec).unwrap(), "{}\n{spec:?}", g.to_text());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn incidence_rank_is_vertices_minus_components(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_multigraph(&mut rng, 7, 10);
        // Drop loops and a random half of the remaining edges.
        let kept: Vec<(String, String, String)> = g
            .edges()
            .iter()
            .filter(|e| !e.is_loop() && rand::Rng::gen_bool(&mut rng, 0.5))
            .map(|e| (e.label.clone(), e.u.clone(), e.v.clone()))
            .collect();
        let sub = LabeledGraph::new(g.vertices().to_vec(), kept.iter().map(|(l, u, v)| essplit::graph::Edge {
            label: l.clone(), u: u.clone(), v: v.clone(),
        }).collect()).unwrap();
        let m = incidence_matrix(&sub).unwrap();
        prop_assert_eq!(m.rank(), sub.vertices().len() - sub.component_count());
    }

    #[test]
    fn equivalence_is_label_stable(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_multigraph(&mut rng, 6, 9);
        let Some(spec) = random_line_split(&mut rng, &g) else { return Ok(()) };
        let rename = |l: &str| format!("z_{l}");
        let g2 = g.relabel_edges(rename).unwrap();
        let spec2 = LineSplitSpec {
            split_vertex: spec.split_vertex.clone(),
            anchor_edge: rename(&spec.anchor_edge),
            left_edges: LabelSet::new(spec.left_edges.iter().map(rename)),
            right_edges: LabelSet::new(spec.right_edges.iter().map(rename)),
        };
        let labels = NewLabels { a: "new_a".into(), gamma: "new_g".into(), ..NewLabels::default() };
        let before = verify_equivalence(&g, &spec).unwrap();
        prop_assert_eq!(before, verify_equivalence_with(&g2, &spec2, &labels).unwrap());
        prop_assert!(before);
    }
}
