//! Ground-truth matroid computations for binary matroids.
//!
//! Everything here is computed from the representation matrix by definition:
//! ranks by elimination, closures by testing each element, circuits and
//! flats by enumerating subsets. These are the reference values every
//! closed-form predictor is compared against.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{Basis, GF2Matrix};
use crate::set::{sort_canonical, ElemSet, Ground, LabelSet};

/// Default ceiling for circuit enumeration.
pub const DEFAULT_CIRCUIT_CAP: usize = 24;
/// Default ceiling for walks over every subset of the ground set.
pub const DEFAULT_SUBSET_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub circuits: usize,
    pub subsets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            circuits: DEFAULT_CIRCUIT_CAP,
            subsets: DEFAULT_SUBSET_CAP,
        }
    }
}

/// Vector matroid of a GF(2) matrix.
///
/// The circuit list is computed on first request and cached; concurrent
/// first calls block on a single computation.
pub struct BinaryMatroid {
    matrix: GF2Matrix,
    caps: Caps,
    circuits: OnceLock<Vec<ElemSet>>,
}

impl Clone for BinaryMatroid {
    fn clone(&self) -> Self {
        BinaryMatroid {
            matrix: self.matrix.clone(),
            caps: self.caps,
            circuits: self.circuits.clone(),
        }
    }
}

impl std::fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BinaryMatroid")
            .field("ground", self.ground())
            .field("rank", &self.rank())
            .finish()
    }
}

impl BinaryMatroid {
    pub fn new(matrix: GF2Matrix) -> Self {
        BinaryMatroid::with_caps(matrix, Caps::default())
    }

    pub fn with_caps(matrix: GF2Matrix, caps: Caps) -> Self {
        BinaryMatroid {
            matrix,
            caps,
            circuits: OnceLock::new(),
        }
    }

    pub fn matrix(&self) -> &GF2Matrix {
        &self.matrix
    }

    pub fn ground(&self) -> &Ground {
        self.matrix.ground()
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn len(&self) -> usize {
        self.ground().len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground().is_empty()
    }

    pub fn all(&self) -> ElemSet {
        self.ground().all()
    }

    pub fn rank(&self) -> usize {
        self.rank_mask(self.all())
    }

    pub fn rank_mask(&self, set: ElemSet) -> usize {
        self.matrix.rank_of_columns(set)
    }

    pub fn is_dependent_mask(&self, set: ElemSet) -> bool {
        self.rank_mask(set) < set.len()
    }

    /// `{x | r(A ∪ x) = r(A)}`, i.e. every column lying in the span of `set`.
    pub fn closure_mask(&self, set: ElemSet) -> ElemSet {
        let mut span = Basis::default();
        for j in set.iter() {
            span.insert(self.matrix.column_word(j));
        }
        (0..self.len())
            .filter(|&j| set.contains(j) || span.contains(self.matrix.column_word(j)))
            .fold(ElemSet::EMPTY, ElemSet::with)
    }

    pub fn is_flat_mask(&self, set: ElemSet) -> bool {
        self.closure_mask(set) == set
    }

    pub fn rank_of(&self, a: &LabelSet) -> Result<usize> {
        Ok(self.rank_mask(self.ground().mask_of(a)?))
    }

    pub fn closure_of(&self, a: &LabelSet) -> Result<LabelSet> {
        let mask = self.ground().mask_of(a)?;
        Ok(self.ground().labels_of(self.closure_mask(mask)))
    }

    pub fn is_flat(&self, a: &LabelSet) -> Result<bool> {
        Ok(self.is_flat_mask(self.ground().mask_of(a)?))
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.len() > cap {
            Err(Error::GroundSetTooLarge {
                size: self.len(),
                cap,
            })
        } else {
            Ok(())
        }
    }

    /// All circuits in canonical order (size, then lexicographic).
    pub fn circuit_masks(&self) -> Result<&[ElemSet]> {
        self.check_cap(self.caps.circuits)?;
        Ok(self.circuits.get_or_init(|| enumerate_circuits(self)))
    }

    pub fn circuits(&self) -> Result<Vec<LabelSet>> {
        Ok(self
            .circuit_masks()?
            .iter()
            .map(|&c| self.ground().labels_of(c))
            .collect())
    }

    /// Every flat, canonical order. The empty set is included when it is
    /// closed (no loops).
    pub fn flat_masks(&self) -> Result<Vec<ElemSet>> {
        self.check_cap(self.caps.subsets)?;
        let mut flats: Vec<ElemSet> = self
            .all()
            .subsets()
            .filter(|&s| self.is_flat_mask(s))
            .collect();
        sort_canonical(&mut flats);
        Ok(flats)
    }

    pub fn flats(&self) -> Result<Vec<LabelSet>> {
        Ok(self
            .flat_masks()?
            .into_iter()
            .map(|f| self.ground().labels_of(f))
            .collect())
    }

    /// Fails unless `|E|` is within the all-subsets cap.
    pub fn require_subset_walk(&self) -> Result<()> {
        self.check_cap(self.caps.subsets)
    }
}

// Size-ordered sweep. A k-subset that contains no smaller circuit has only
// independent proper subsets, so it is a circuit exactly when it is
// dependent; the one-element deletions are re-checked anyway.
fn enumerate_circuits(m: &BinaryMatroid) -> Vec<ElemSet> {
    let n = m.len();
    let max_size = (m.rank() + 1).min(n);
    let mut found: Vec<ElemSet> = Vec::new();
    for k in 1..=max_size {
        let level_start = found.len();
        for s in k_subsets(n, k) {
            if found[..level_start].iter().any(|c| c.is_subset(s)) {
                continue;
            }
            if !m.is_dependent_mask(s) {
                continue;
            }
            debug_assert!(s.iter().all(|i| !m.is_dependent_mask(s.without(i))));
            found.push(s);
        }
    }
    sort_canonical(&mut found);
    found
}

/// All `k`-element subsets of `{0..n}` (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = ElemSet> {
    let limit: u128 = 1u128 << n;
    let mut next: Option<u128> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u128 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < limit).then_some(nxt)
        };
        Some(ElemSet(cur as u64))
    })
}

/// Parity class of a circuit with respect to a distinguished set `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CircuitParity {
    /// Odd intersection with `X`.
    OX,
    /// Even intersection with `X`.
    EX,
}

pub fn parity_of(c: ElemSet, x_set: ElemSet) -> CircuitParity {
    if c.intersection(x_set).len() % 2 == 1 {
        CircuitParity::OX
    } else {
        CircuitParity::EX
    }
}

/// Classifies `c` by `|c ∩ x_set|` mod 2. Labels are compared by name, so
/// the two sets need not come from the same ground.
pub fn classify_circuit(c: &LabelSet, x_set: &LabelSet) -> CircuitParity {
    let common = c.iter().filter(|l| x_set.contains(l)).count();
    if common % 2 == 1 {
        CircuitParity::OX
    } else {
        CircuitParity::EX
    }
}
