//! Binary matroids over GF(2), the es-splitting operation, and closed-form
//! predictors for the circuits, ranks, closures and flats of a split matroid.
//!
//! Each predictor in [`split`] has an independent counterpart in
//! [`matroid`], computed by brute force from the split matrix, and
//! [`check`] runs the two side by side over every subset of an instance.

pub mod check;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod gf2;
pub mod graph;
pub mod matroid;
pub mod random;
pub mod set;
pub mod split;

pub use error::{Error, Result};
pub use gf2::{GF2Matrix, GF2Vector};
pub use graph::{
    incidence_matrix, n_line_split, verify_equivalence, LabeledGraph, LineSplitSpec, NewLabels,
};
pub use matroid::{classify_circuit, BinaryMatroid, Caps, CircuitParity};
pub use set::{ElemSet, Ground, LabelSet};
pub use split::{
    build_split_matrix, CircuitFamily, ClosureCase, ClosureCaseReport, ClosureShape,
    FlatCondition, SplitContext, SplitQuery,
};
