//! Graphs, incidence matrices and the n-line splitting of a vertex.
//!
//! The cycle matroid of the graph obtained by n-line splitting coincides with
//! the es-splitting of the original cycle matroid, taking `X` to be the
//! anchor edge plus the edges that stay on the anchor's side.
//! [`verify_equivalence`] checks this by comparing circuit families.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gf2::GF2Matrix;
use crate::matroid::BinaryMatroid;
use crate::set::{Ground, LabelSet};
use crate::split::SplitContext;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub u: String,
    pub v: String,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn touches(&self, vertex: &str) -> bool {
        self.u == vertex || self.v == vertex
    }

    /// The endpoint other than `vertex` (the vertex itself for loops).
    pub fn other(&self, vertex: &str) -> &str {
        if self.u == vertex {
            &self.v
        } else {
            &self.u
        }
    }
}

/// Multigraph with labelled edges. Loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl LabeledGraph {
    pub fn new<V: Into<String>>(vertices: Vec<V>, edges: Vec<Edge>) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let mut labels = BTreeSet::new();
        for e in &edges {
            if !labels.insert(e.label.as_str()) {
                return Err(Error::DuplicateLabel(e.label.clone()));
            }
            for end in [&e.u, &e.v] {
                if !seen.contains(end.as_str()) {
                    return Err(Error::UnknownLabel(end.clone()));
                }
            }
        }
        Ok(LabeledGraph { vertices, edges })
    }

    /// Builds from `(label, u, v)` triples; vertices in order of first
    /// appearance.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S, S)]) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        let mut list = Vec::with_capacity(edges.len());
        for (label, u, v) in edges {
            for end in [u.as_ref(), v.as_ref()] {
                if !vertices.iter().any(|w| w == end) {
                    vertices.push(end.to_string());
                }
            }
            list.push(Edge {
                label: label.as_ref().to_string(),
                u: u.as_ref().to_string(),
                v: v.as_ref().to_string(),
            });
        }
        LabeledGraph::new(vertices, list)
    }

    /// Edge-list text: one `label u v` per line, `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut triples = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [label, u, v] = parts[..] else {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("expected `label u v`, found {} fields", parts.len()),
                });
            };
            if triples.iter().any(|(l, _, _)| *l == label) {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("duplicate edge label `{label}`"),
                });
            }
            triples.push((label, u, v));
        }
        LabeledGraph::from_edges(&triples)
    }

    pub fn to_text(&self) -> String {
        self.edges
            .iter()
            .map(|e| format!("{} {} {}\n", e.label, e.u, e.v))
            .collect()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, label: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.label == label)
    }

    pub fn edge_labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    pub fn degree(&self, vertex: &str) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == vertex) as usize + (e.v == vertex) as usize)
            .sum()
    }

    /// Connected components, counting isolated vertices.
    pub fn component_count(&self) -> usize {
        let idx = |v: &str| self.vertices.iter().position(|w| w == v).expect("declared vertex");
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, idx(&e.u)), find(&mut parent, idx(&e.v)));
            parent[a] = b;
        }
        (0..parent.len()).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// Renames edges through `rename`; vertices are untouched.
    pub fn relabel_edges(&self, rename: impl Fn(&str) -> String) -> Result<Self> {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                label: rename(&e.label),
                ..e.clone()
            })
            .collect();
        LabeledGraph::new(self.vertices.clone(), edges)
    }
}

/// Vertex-by-edge incidence matrix over GF(2). A loop's two ends cancel, so
/// its column is zero.
pub fn incidence_matrix(g: &LabeledGraph) -> Result<GF2Matrix> {
    let ground = Ground::new(g.edge_labels())?;
    let columns: Vec<u64> = g
        .edges
        .iter()
        .map(|e| {
            let bit = |v: &str| 1u64 << g.vertices.iter().position(|w| w == v).expect("declared");
            bit(&e.u) ^ bit(&e.v)
        })
        .collect();
    GF2Matrix::from_columns(ground, g.vertices.len(), &columns)
}

/// Cycle matroid of `g`.
pub fn cycle_matroid(g: &LabeledGraph) -> Result<BinaryMatroid> {
    Ok(BinaryMatroid::new(incidence_matrix(g)?))
}

/// Which vertex to split and how its edges are distributed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineSplitSpec {
    pub split_vertex: String,
    /// The edge `e = uv`; it stays on the `u1` side.
    pub anchor_edge: String,
    /// Edges moving to `u1` together with the anchor.
    pub left_edges: LabelSet,
    /// Edges moving to `u2`.
    pub right_edges: LabelSet,
}

impl LineSplitSpec {
    /// `X = {e} ∪ left_edges`.
    pub fn x_set(&self) -> LabelSet {
        LabelSet::new(
            std::iter::once(self.anchor_edge.as_str())
                .chain(self.left_edges.iter())
                .map(str::to_string),
        )
    }
}

/// Names for the two new vertices and the two new edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewLabels {
    pub u1: String,
    pub u2: String,
    pub a: String,
    pub gamma: String,
}

impl Default for NewLabels {
    fn default() -> Self {
        NewLabels {
            u1: "u1".into(),
            u2: "u2".into(),
            a: crate::split::DEFAULT_LABEL_A.into(),
            gamma: crate::split::DEFAULT_LABEL_GAMMA.into(),
        }
    }
}

fn validate(g: &LabeledGraph, spec: &LineSplitSpec, labels: &NewLabels) -> Result<()> {
    let invalid = |msg: String| Err(Error::InvalidPartition(msg));
    let u = spec.split_vertex.as_str();
    if !g.vertices.iter().any(|v| v == u) {
        return invalid(format!("`{u}` is not a vertex"));
    }
    let Some(anchor) = g.edge(&spec.anchor_edge) else {
        return invalid(format!("`{}` is not an edge", spec.anchor_edge));
    };
    if !anchor.touches(u) || anchor.is_loop() {
        return invalid(format!("anchor `{}` must be a non-loop edge at `{u}`", anchor.label));
    }
    if let Some(l) = g.edges.iter().find(|e| e.is_loop() && e.u == u) {
        return invalid(format!("loop `{}` at the split vertex", l.label));
    }
    let incident: BTreeSet<&str> = g
        .edges
        .iter()
        .filter(|e| e.touches(u))
        .map(|e| e.label.as_str())
        .collect();
    let left: BTreeSet<&str> = spec.left_edges.iter().collect();
    let right: BTreeSet<&str> = spec.right_edges.iter().collect();
    if let Some(both) = left.intersection(&right).next() {
        return invalid(format!("`{both}` is on both sides"));
    }
    if left.contains(anchor.label.as_str()) || right.contains(anchor.label.as_str()) {
        return invalid(format!("anchor `{}` listed on a side", anchor.label));
    }
    let mut covered: BTreeSet<&str> = left.union(&right).copied().collect();
    covered.insert(anchor.label.as_str());
    if covered != incident {
        let stray: Vec<&str> = covered.symmetric_difference(&incident).copied().collect();
        return invalid(format!(
            "sides must cover exactly the edges at `{u}`; mismatch on {stray:?}"
        ));
    }
    for v in [&labels.u1, &labels.u2] {
        if g.vertices.iter().any(|w| w == v) && v != u {
            return invalid(format!("new vertex `{v}` already exists"));
        }
    }
    if labels.u1 == labels.u2 {
        return invalid("new vertices need distinct names".into());
    }
    for l in [&labels.a, &labels.gamma] {
        if g.edge(l).is_some() {
            return Err(Error::LabelCollision(l.clone()));
        }
    }
    if labels.a == labels.gamma {
        return Err(Error::LabelCollision(labels.gamma.clone()));
    }
    Ok(())
}

/// Replaces the split vertex `u` by adjacent vertices `u1`, `u2` (joined by
/// `a`). The anchor and the left edges move to `u1`, the right edges to
/// `u2`, and `γ` joins `u2` to the anchor's far end.
pub fn n_line_split(g: &LabeledGraph, spec: &LineSplitSpec, labels: &NewLabels) -> Result<LabeledGraph> {
    validate(g, spec, labels)?;
    let u = spec.split_vertex.as_str();
    let anchor = g.edge(&spec.anchor_edge).expect("validated");
    let far = anchor.other(u).to_string();

    let mut vertices = Vec::with_capacity(g.vertices.len() + 1);
    for v in &g.vertices {
        if v == u {
            vertices.push(labels.u1.clone());
            vertices.push(labels.u2.clone());
        } else {
            vertices.push(v.clone());
        }
    }
    let reattach = |end: &String, e: &Edge| -> String {
        if end != u {
            end.clone()
        } else if spec.right_edges.contains(&e.label) {
            labels.u2.clone()
        } else {
            labels.u1.clone()
        }
    };
    let mut edges: Vec<Edge> = g
        .edges
        .iter()
        .map(|e| Edge {
            label: e.label.clone(),
            u: reattach(&e.u, e),
            v: reattach(&e.v, e),
        })
        .collect();
    edges.push(Edge {
        label: labels.a.clone(),
        u: labels.u1.clone(),
        v: labels.u2.clone(),
    });
    edges.push(Edge {
        label: labels.gamma.clone(),
        u: labels.u2.clone(),
        v: far,
    });
    LabeledGraph::new(vertices, edges)
}

/// Compares the circuits of the split graph's cycle matroid with the
/// circuits of the es-splitting of `g`'s cycle matroid (`X = {e} ∪ left`).
pub fn verify_equivalence(g: &LabeledGraph, spec: &LineSplitSpec) -> Result<bool> {
    verify_equivalence_with(g, spec, &NewLabels::default())
}

pub fn verify_equivalence_with(
    g: &LabeledGraph,
    spec: &LineSplitSpec,
    labels: &NewLabels,
) -> Result<bool> {
    let h = n_line_split(g, spec, labels)?;
    let ctx = SplitContext::with_labels(
        cycle_matroid(g)?,
        &spec.x_set(),
        &spec.anchor_edge,
        &labels.a,
        &labels.gamma,
    )?;
    let graph_side = circuit_family(&cycle_matroid(&h)?)?;
    let matroid_side = circuit_family(ctx.split_matroid())?;
    Ok(graph_side == matroid_side)
}

fn circuit_family(m: &BinaryMatroid) -> Result<BTreeSet<BTreeSet<String>>> {
    Ok(m.circuits()?
        .into_iter()
        .map(|c| c.iter().map(str::to_string).collect())
        .collect())
}
