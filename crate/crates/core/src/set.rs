//! Element labels, ground sets and subsets.
//!
//! Every ground set here has at most 64 elements, so a subset is a single
//! `u64` mask ([`ElemSet`]) indexed by ground position. [`LabelSet`] is the
//! label-level view handed across the public API; a [`Ground`] converts
//! between the two and fixes the canonical element order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 64;

/// Subset of a ground set, bit `i` standing for the element at position `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(i: usize) -> Self {
        ElemSet(1 << i)
    }

    /// The first `n` positions.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        ElemSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        ElemSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        ElemSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Positions in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Size first, then lexicographic on the sorted position lists.
    pub fn canonical_cmp(self, other: Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = ElemSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            // Standard submask walk in increasing numeric order.
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(ElemSet(cur))
        })
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Sorts a list of masks into canonical order.
pub fn sort_canonical(sets: &mut [ElemSet]) {
    sets.sort_by(|a, b| a.canonical_cmp(*b));
}

/// Ordered list of distinct element labels.
///
/// Cloning is cheap; the label storage is shared.
#[derive(Clone, PartialEq, Eq)]
pub struct Ground {
    labels: Arc<[String]>,
    index: Arc<HashMap<String, usize>>,
}

impl Ground {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                what: "ground set",
                got: labels.len(),
                max: MAX_ELEMENTS,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Ground {
            labels: labels.into(),
            index: Arc::new(index),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    /// Mask of the given labels; duplicates collapse.
    pub fn mask<I, S>(&self, labels: I) -> Result<ElemSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels
            .into_iter()
            .try_fold(ElemSet::EMPTY, |acc, l| Ok(acc.with(self.index_of(l.as_ref())?)))
    }

    pub fn mask_of(&self, set: &LabelSet) -> Result<ElemSet> {
        self.mask(set.iter())
    }

    /// Canonical label set for the given labels.
    pub fn set<I, S>(&self, labels: I) -> Result<LabelSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Ok(self.labels_of(self.mask(labels)?))
    }

    pub fn labels_of(&self, set: ElemSet) -> LabelSet {
        LabelSet(set.iter().map(|i| self.labels[i].clone()).collect())
    }

    /// A new ground with `extra` appended; fails on collisions.
    pub fn extended<I, S>(&self, extra: I) -> Result<Ground>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut labels = self.labels.to_vec();
        for l in extra {
            let l = l.into();
            if labels.contains(&l) {
                return Err(Error::LabelCollision(l));
            }
            labels.push(l);
        }
        Ground::new(labels)
    }
}

impl fmt::Debug for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// A set of labels. Sets produced by a [`Ground`] list their labels in ground
/// order; sets built with [`LabelSet::new`] keep the order given, minus
/// duplicates.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LabelSet(Vec<String>);

impl LabelSet {
    pub fn new<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for l in labels {
            let l = l.into();
            if !out.contains(&l) {
                out.push(l);
            }
        }
        LabelSet(out)
    }

    /// Comma-separated list, e.g. `2,6,gamma`. Blank entries are skipped.
    pub fn parse_list(s: &str) -> Self {
        LabelSet::new(s.split(',').map(str::trim).filter(|t| !t.is_empty()))
    }

    pub fn empty() -> Self {
        LabelSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.0.iter().any(|l| l == label)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn as_slice(&self) -> &[String] {
        &self.0
    }

    /// Same renderer as `Display`, with each label passed through `rename`.
    pub fn display_with(&self, rename: impl Fn(&str) -> String) -> String {
        let parts: Vec<String> = self.iter().map(rename).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.join(","))
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> IntoIterator for &'a LabelSet {
    type Item = &'a String;
    type IntoIter = std::slice::Iter<'a, String>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
