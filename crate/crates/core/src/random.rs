//! Seeded generators for random test instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::gf2::GF2Matrix;
use crate::graph::{LabeledGraph, LineSplitSpec};
use crate::matroid::BinaryMatroid;
use crate::set::{ElemSet, Ground, LabelSet};
use crate::split::SplitContext;

/// Uniformly random `n_rows × n_cols` matrix with columns `c0, c1, ...`.
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, n_rows: usize, n_cols: usize) -> GF2Matrix {
    let ground = Ground::new((0..n_cols).map(|i| format!("c{i}"))).expect("distinct labels");
    let mask = if n_rows == 64 { u64::MAX } else { (1u64 << n_rows) - 1 };
    let cols: Vec<u64> = (0..n_cols).map(|_| rng.gen::<u64>() & mask).collect();
    GF2Matrix::from_columns(ground, n_rows, &cols).expect("dimensions in range")
}

/// Random nonempty `X` and random `e ∈ X` for the given matroid.
pub fn random_split<R: Rng + ?Sized>(rng: &mut R, base: BinaryMatroid) -> SplitContext {
    let n = base.len();
    assert!(n > 0, "need at least one element");
    let x = loop {
        let x = ElemSet(rng.gen::<u64>()).intersection(base.all());
        if !x.is_empty() {
            break x;
        }
    };
    let members: Vec<usize> = x.iter().collect();
    let e = *members.choose(rng).expect("nonempty");
    let g = base.ground().clone();
    SplitContext::new(base, &g.labels_of(x), g.label(e)).expect("valid by construction")
}

/// Random matrix with `n_cols ∈ cols` and `n_rows ∈ 1..=max_rows`, wrapped
/// in a random split.
pub fn random_context<R: Rng + ?Sized>(
    rng: &mut R,
    cols: std::ops::RangeInclusive<usize>,
    max_rows: usize,
) -> SplitContext {
    let n_cols = rng.gen_range(cols);
    let n_rows = rng.gen_range(1..=max_rows);
    let base = BinaryMatroid::new(random_matrix(rng, n_rows, n_cols));
    random_split(rng, base)
}

/// Connected multigraph: a random spanning tree on `2..=max_vertices`
/// vertices plus extra edges (parallel edges and loops allowed) up to a
/// total of at most `max_edges`.
pub fn random_connected_multigraph<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
) -> LabeledGraph {
    let nv = rng.gen_range(2..=max_vertices);
    assert!(max_edges >= nv - 1, "not enough edges for a spanning tree");
    let vertices: Vec<String> = (0..nv).map(|i| format!("v{i}")).collect();
    let mut ends: Vec<(usize, usize)> = (1..nv).map(|i| (rng.gen_range(0..i), i)).collect();
    let total = rng.gen_range(nv - 1..=max_edges);
    while ends.len() < total {
        ends.push((rng.gen_range(0..nv), rng.gen_range(0..nv)));
    }
    ends.shuffle(rng);
    let triples: Vec<(String, String, String)> = ends
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| (format!("g{i}"), vertices[u].clone(), vertices[v].clone()))
        .collect();
    LabeledGraph::from_edges(&triples).expect("well formed")
}

/// A random valid line-split spec, or `None` if no vertex qualifies (every
/// vertex with a non-loop edge also carries a loop).
pub fn random_line_split<R: Rng + ?Sized>(rng: &mut R, g: &LabeledGraph) -> Option<LineSplitSpec> {
    let candidates: Vec<&String> = g
        .vertices()
        .iter()
        .filter(|v| {
            let edges = g.edges().iter().filter(|e| e.touches(v));
            let mut has_link = false;
            for e in edges {
                if e.is_loop() {
                    return false;
                }
                has_link = true;
            }
            has_link
        })
        .collect();
    let u = (*candidates.choose(rng)?).clone();
    let incident: Vec<&str> = g
        .edges()
        .iter()
        .filter(|e| e.touches(&u))
        .map(|e| e.label.as_str())
        .collect();
    let anchor = incident.choose(rng)?.to_string();
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for &l in &incident {
        if l == anchor {
            continue;
        }
        if rng.gen_bool(0.5) {
            left.push(l);
        } else {
            right.push(l);
        }
    }
    Some(LineSplitSpec {
        split_vertex: u,
        anchor_edge: anchor,
        left_edges: LabelSet::new(left),
        right_edges: LabelSet::new(right),
    })
}
