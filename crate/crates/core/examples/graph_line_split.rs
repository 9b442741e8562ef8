//! Splits a vertex of a graph and confirms the cycle matroid of the result
//! equals the es-splitting of the original cycle matroid.
//!
//! `cargo run --example graph_line_split [edges-file vertex anchor left,edges right,edges]`

use essplit::fixtures::{figure2_graph, figure2_line_split};
use essplit::{n_line_split, verify_equivalence, LabelSet, LabeledGraph, LineSplitSpec, NewLabels};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (g, spec) = if let [path, vertex, anchor, left, right] = args.as_slice() {
        let g = LabeledGraph::parse(&std::fs::read_to_string(path)?)?;
        let spec = LineSplitSpec {
            split_vertex: vertex.clone(),
            anchor_edge: anchor.clone(),
            left_edges: LabelSet::parse_list(left),
            right_edges: LabelSet::parse_list(right),
        };
        (g, spec)
    } else {
        (figure2_graph(), figure2_line_split())
    };

    let h = n_line_split(&g, &spec, &NewLabels::default())?;
    println!("before:\n{}", g.to_text());
    println!("after splitting {}:\n{}", spec.split_vertex, h.to_text());
    println!("X = {}", spec.x_set());
    println!("circuit families agree: {}", verify_equivalence(&g, &spec)?);
    Ok(())
}
