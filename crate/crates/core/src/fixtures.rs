//! The worked example: a five-vertex graph with eight edges, split at its
//! centre vertex with `X = {x, y}` and `e = y`, plus the published closure
//! illustrations and flat lists for it.
//!
//! Vertex names are positional: `TL`, `TR`, `BL`, `BR` for the corners of
//! the outer square and `C` for the centre.

use crate::error::Result;
use crate::graph::{cycle_matroid, LabeledGraph, LineSplitSpec};
use crate::set::LabelSet;
use crate::split::{ClosureCase, SplitContext};

pub const FIGURE2_EDGES: [(&str, &str, &str); 8] = [
    ("1", "TL", "BL"),
    ("2", "BL", "BR"),
    ("3", "TR", "BR"),
    ("4", "TL", "TR"),
    ("5", "TL", "C"),
    ("6", "BL", "C"),
    ("x", "C", "TR"),
    ("y", "C", "BR"),
];

pub const FIGURE2_X: [&str; 2] = ["x", "y"];
pub const FIGURE2_E: &str = "y";

pub fn figure2_graph() -> LabeledGraph {
    LabeledGraph::from_edges(&FIGURE2_EDGES).expect("fixture is well formed")
}

/// `X = {x, y}`, `e = y`, new elements `a` and `gamma`.
pub fn figure2_context() -> Result<SplitContext> {
    SplitContext::new(
        cycle_matroid(&figure2_graph())?,
        &LabelSet::new(FIGURE2_X),
        FIGURE2_E,
    )
}

/// Splitting the centre: `x` stays with the anchor `y`, edges 5 and 6 move
/// to the other new vertex.
pub fn figure2_line_split() -> LineSplitSpec {
    LineSplitSpec {
        split_vertex: "C".into(),
        anchor_edge: "y".into(),
        left_edges: LabelSet::new(["x"]),
        right_edges: LabelSet::new(["5", "6"]),
    }
}

/// One published closure computation on the worked example.
#[derive(Debug, Clone, Copy)]
pub struct ClosureIllustration {
    /// Lemma the example is attached to.
    pub case: ClosureCase,
    pub query: &'static [&'static str],
    /// The closure as printed.
    pub published: &'static [&'static str],
    pub note: Option<&'static str>,
}

pub const CLOSURE_ILLUSTRATIONS: [ClosureIllustration; 12] = [
    ClosureIllustration {
        case: ClosureCase::L3_2,
        query: &["4", "5"],
        published: &["4", "5"],
        note: None,
    },
    ClosureIllustration {
        case: ClosureCase::L3_3,
        query: &["1", "5"],
        published: &["1", "5", "6"],
        note: None,
    },
    ClosureIllustration {
        case: ClosureCase::L3_4_1,
        query: &["1", "4", "6", "x"],
        published: &["1", "4", "6", "x", "a"],
        note: Some(
            "{1,5,6} and {4,5,x} are circuits, so 5 lies in cl({1,4,6,x}); \
             the published set omits it",
        ),
    },
    ClosureIllustration {
        case: ClosureCase::L3_4_2,
        query: &["1", "6", "a"],
        published: &["1", "5", "6", "a"],
        note: None,
    },
    ClosureIllustration {
        case: ClosureCase::L3_5,
        query: &["2", "6"],
        published: &["2", "6", "gamma"],
        note: None,
    },
    ClosureIllustration {
        case: ClosureCase::L3_6,
        query: &["4", "5", "gamma"],
        published: &["3", "4", "5", "gamma"],
        note: None,
    },
    ClosureIllustration {
        case: ClosureCase::L3_7,
        query: &["1", "6", "gamma"],
        published: &["1", "2", "5", "6", "gamma"],
        note: Some("printed with A' = A; the lemma and the answer both need A' = A ∪ γ"),
    },
    ClosureIllustration {
        case: ClosureCase::L3_8_1,
        query: &["a", "gamma"],
        published: &["a", "y", "gamma"],
        note: None,
    },
    ClosureIllustration {
        case: ClosureCase::L3_8_2,
        query: &["a", "6", "2"],
        published: &["a", "6", "2", "y", "gamma"],
        note: None,
    },
    ClosureIllustration {
        case: ClosureCase::L3_8_3,
        query: &["4", "5", "x", "gamma"],
        published: &["4", "5", "x", "a", "y", "gamma"],
        note: None,
    },
    ClosureIllustration {
        case: ClosureCase::L3_8_4,
        query: &["y", "gamma"],
        published: &["a", "y", "gamma"],
        note: None,
    },
    ClosureIllustration {
        case: ClosureCase::L3_8_5,
        query: &["2", "6", "y"],
        published: &["2", "6", "a", "y", "gamma"],
        note: None,
    },
];

/// Published list of flats of the base matroid (the empty flat is not listed).
pub const BASE_FLATS: [&[&str]; 32] = [
    &["1"],
    &["2"],
    &["3"],
    &["4"],
    &["5"],
    &["6"],
    &["x"],
    &["y"],
    &["1", "4"],
    &["1", "3"],
    &["1", "x"],
    &["1", "y"],
    &["1", "2"],
    &["2", "3"],
    &["2", "4"],
    &["2", "5"],
    &["2", "x"],
    &["3", "4"],
    &["3", "5"],
    &["3", "6"],
    &["4", "6"],
    &["4", "y"],
    &["1", "5", "6"],
    &["x", "y", "3"],
    &["2", "6", "y"],
    &["1", "2", "3", "4"],
    &["4", "5", "x"],
    &["1", "2", "5", "6", "y"],
    &["3", "4", "5", "x", "y"],
    &["1", "4", "5", "6", "x"],
    &["2", "3", "6", "x", "y"],
    &["1", "2", "3", "4", "5", "6", "x", "y"],
];

/// Published list of flats of the split matroid. The final entry, printed as
/// `E`, is the whole split ground set.
pub const SPLIT_FLATS: [&[&str]; 50] = [
    &["1"],
    &["2"],
    &["3"],
    &["4"],
    &["5"],
    &["6"],
    &["x"],
    &["y"],
    &["a"],
    &["gamma"],
    &["1", "4"],
    &["1", "3"],
    &["1", "x"],
    &["1", "y"],
    &["1", "2"],
    &["2", "3"],
    &["2", "4"],
    &["2", "5"],
    &["2", "x"],
    &["3", "4"],
    &["3", "5"],
    &["3", "6"],
    &["4", "6"],
    &["4", "y"],
    &["1", "a"],
    &["2", "a"],
    &["3", "a"],
    &["4", "a"],
    &["5", "a"],
    &["6", "a"],
    &["x", "a"],
    &["1", "gamma"],
    &["3", "gamma"],
    &["4", "gamma"],
    &["5", "gamma"],
    &["x", "gamma"],
    &["1", "5", "6"],
    &["x", "y", "3"],
    &["a", "y", "gamma"],
    &["2", "6", "gamma"],
    &["1", "2", "3", "4"],
    &["4", "5", "a", "x"],
    &["1", "2", "5", "6", "gamma"],
    &["3", "a", "x", "y", "gamma"],
    &["2", "6", "a", "y", "gamma"],
    &["3", "4", "5", "a", "x", "y"],
    &["1", "4", "5", "6", "a", "x"],
    &["1", "2", "5", "6", "a", "y", "gamma"],
    &["2", "3", "6", "a", "x", "y", "gamma"],
    &["1", "2", "3", "4", "5", "6", "x", "y", "a", "gamma"],
];

/// Renders `gamma` as `γ` for human-facing output.
pub fn pretty(label: &str) -> String {
    if label == crate::split::DEFAULT_LABEL_GAMMA {
        "γ".to_string()
    } else {
        label.to_string()
    }
}
