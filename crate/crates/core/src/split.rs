//! The es-splitting operation and closed-form descriptions of the split
//! matroid in terms of the base matroid.
//!
//! Given a binary matroid `M` on `E`, a set `X ⊆ E` and `e ∈ X`, the split
//! matrix is the base matrix with one extra row (the indicator of `X`) and
//! two extra columns: `a`, a unit vector in the new row, and `γ = col(e) + a`.
//! The predictors below describe circuits, ranks, closures and flats of the
//! split matroid using only data of `M`; each one can be compared with the
//! oracle running on the split matrix itself.
//!
//! In the split ground set the base elements keep their positions, `a` sits
//! at position `|E|` and `γ` at `|E| + 1`, so a mask over `E` means the same
//! thing in both matroids.

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::GF2Matrix;
use crate::matroid::{parity_of, BinaryMatroid, CircuitParity};
use crate::set::{sort_canonical, ElemSet, Ground, LabelSet, MAX_ELEMENTS};

pub const DEFAULT_LABEL_A: &str = "a";
pub const DEFAULT_LABEL_GAMMA: &str = "gamma";

struct Classes {
    ox: Vec<ElemSet>,
    ex: Vec<ElemSet>,
}

/// One es-splitting instance: base matroid, `X`, `e` and the labels of the
/// two new elements.
pub struct SplitContext {
    base: BinaryMatroid,
    x: ElemSet,
    e: usize,
    split: BinaryMatroid,
    classes: OnceLock<Classes>,
}

impl fmt::Debug for SplitContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SplitContext")
            .field("ground", self.split.ground())
            .field("x", &self.x_set())
            .field("e", &self.e_label())
            .finish()
    }
}

/// A query set `A' ⊆ E ∪ {a, γ}` together with its trace `A = A' ∖ {a, γ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplitQuery {
    /// Mask over the split ground.
    pub a_prime: ElemSet,
    /// Mask over `E`.
    pub a: ElemSet,
    pub has_a: bool,
    pub has_gamma: bool,
}

impl SplitContext {
    pub fn new(base: BinaryMatroid, x_set: &LabelSet, e: &str) -> Result<Self> {
        SplitContext::with_labels(base, x_set, e, DEFAULT_LABEL_A, DEFAULT_LABEL_GAMMA)
    }

    /// Fails with `LabelCollision` if either new label is already used and
    /// with `ElementNotInX` if `e ∉ X`; new labels are never renamed.
    pub fn with_labels(
        base: BinaryMatroid,
        x_set: &LabelSet,
        e: &str,
        label_a: &str,
        label_gamma: &str,
    ) -> Result<Self> {
        let ground = base.ground().clone();
        let x = ground.mask_of(x_set)?;
        let e_idx = ground.index_of(e)?;
        if !x.contains(e_idx) {
            return Err(Error::ElementNotInX(e.to_string()));
        }
        if label_a == label_gamma {
            return Err(Error::LabelCollision(label_gamma.to_string()));
        }
        if ground.len() + 2 > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                what: "split ground set",
                got: ground.len() + 2,
                max: MAX_ELEMENTS,
            });
        }
        let split_ground = ground.extended([label_a, label_gamma])?;
        let split_matrix = split_matrix(base.matrix(), x, e_idx, split_ground)?;
        let split = BinaryMatroid::with_caps(split_matrix, base.caps());
        Ok(SplitContext {
            base,
            x,
            e: e_idx,
            split,
            classes: OnceLock::new(),
        })
    }

    pub fn base(&self) -> &BinaryMatroid {
        &self.base
    }

    /// The vector matroid of the split matrix; the oracle model of `M^e_X`.
    pub fn split_matroid(&self) -> &BinaryMatroid {
        &self.split
    }

    pub fn build_split_matrix(&self) -> GF2Matrix {
        self.split.matrix().clone()
    }

    pub fn split_ground(&self) -> &Ground {
        self.split.ground()
    }

    pub fn base_ground(&self) -> &Ground {
        self.base.ground()
    }

    pub fn x_mask(&self) -> ElemSet {
        self.x
    }

    pub fn x_set(&self) -> LabelSet {
        self.base_ground().labels_of(self.x)
    }

    pub fn e_index(&self) -> usize {
        self.e
    }

    pub fn e_label(&self) -> &str {
        self.base_ground().label(self.e)
    }

    pub fn a_index(&self) -> usize {
        self.base.len()
    }

    pub fn gamma_index(&self) -> usize {
        self.base.len() + 1
    }

    pub fn label_a(&self) -> &str {
        self.split_ground().label(self.a_index())
    }

    pub fn label_gamma(&self) -> &str {
        self.split_ground().label(self.gamma_index())
    }

    /// `{e, a, γ}` as a split-ground mask.
    pub fn delta_mask(&self) -> ElemSet {
        ElemSet::singleton(self.e)
            .with(self.a_index())
            .with(self.gamma_index())
    }

    pub fn query(&self, a_prime: &LabelSet) -> Result<SplitQuery> {
        Ok(self.query_mask(self.split_ground().mask_of(a_prime)?))
    }

    pub fn query_mask(&self, a_prime: ElemSet) -> SplitQuery {
        debug_assert!(a_prime.is_subset(self.split.all()));
        SplitQuery {
            a_prime,
            a: a_prime.intersection(self.base.all()),
            has_a: a_prime.contains(self.a_index()),
            has_gamma: a_prime.contains(self.gamma_index()),
        }
    }

    fn base_mask(&self, s: &LabelSet) -> Result<ElemSet> {
        self.base_ground().mask_of(s)
    }

    fn classes(&self) -> Result<&Classes> {
        let circuits = self.base.circuit_masks()?;
        Ok(self.classes.get_or_init(|| {
            let (ox, ex) = circuits
                .iter()
                .partition(|&&c| parity_of(c, self.x) == CircuitParity::OX);
            Classes { ox, ex }
        }))
    }

    pub fn ox_circuits(&self) -> Result<&[ElemSet]> {
        Ok(&self.classes()?.ox)
    }

    pub fn ex_circuits(&self) -> Result<&[ElemSet]> {
        Ok(&self.classes()?.ex)
    }

    /// Whether some OX-circuit of `M` lies inside `s`.
    pub fn contains_ox_mask(&self, s: ElemSet) -> Result<bool> {
        Ok(self.ox_circuits()?.iter().any(|c| c.is_subset(s)))
    }

    pub fn contains_ox_circuit(&self, s: &LabelSet) -> Result<bool> {
        self.contains_ox_mask(self.base_mask(s)?)
    }

    /// `T(A)`: elements `x ∉ A`, `x ≠ e`, lying with `e` on an OX-circuit
    /// inside `A ∪ {e, x}`.
    pub fn t_mask(&self, a: ElemSet) -> Result<ElemSet> {
        let e = ElemSet::singleton(self.e);
        let mut t = ElemSet::EMPTY;
        for &c in self.ox_circuits()? {
            if !c.contains(self.e) {
                continue;
            }
            let rest = c.difference(a.union(e));
            if rest.len() == 1 {
                t = t.union(rest);
            }
        }
        Ok(t)
    }

    pub fn set_t(&self, a: &LabelSet) -> Result<LabelSet> {
        Ok(self.base_ground().labels_of(self.t_mask(self.base_mask(a)?)?))
    }

    /// `F(A)`: elements of `cl(A) ∖ A` lying on an OX-circuit contained in
    /// `cl(A)`.
    pub fn f_mask(&self, a: ElemSet) -> Result<ElemSet> {
        self.f_mask_with(a, false)
    }

    /// `F(A)` with the containment `C ⊂ cl(A)` read strictly.
    pub fn f_mask_strict(&self, a: ElemSet) -> Result<ElemSet> {
        self.f_mask_with(a, true)
    }

    fn f_mask_with(&self, a: ElemSet, strict: bool) -> Result<ElemSet> {
        let cl = self.base.closure_mask(a);
        let outside = cl.difference(a);
        let mut f = ElemSet::EMPTY;
        for &c in self.ox_circuits()? {
            if c.is_subset(cl) && !(strict && c == cl) {
                f = f.union(c.intersection(outside));
            }
        }
        Ok(f)
    }

    pub fn set_f(&self, a: &LabelSet) -> Result<LabelSet> {
        Ok(self.base_ground().labels_of(self.f_mask(self.base_mask(a)?)?))
    }

    /// Circuits of the split matroid predicted from the circuits of `M`.
    pub fn predict_circuit_masks(&self) -> Result<FamilyMasks> {
        let Classes { ox, ex } = self.classes()?;
        let e = self.e;
        let a = ElemSet::singleton(self.a_index());
        let g = ElemSet::singleton(self.gamma_index());

        let c0 = ex.clone();

        let mut unions: Vec<ElemSet> = Vec::new();
        for (i, &c1) in ox.iter().enumerate() {
            for &c2 in &ox[i + 1..] {
                if !c1.is_disjoint(c2) {
                    continue;
                }
                let u = c1.union(c2);
                if c0.iter().any(|c| c.is_subset(u)) {
                    continue;
                }
                unions.push(u);
            }
        }
        unions.sort();
        unions.dedup();
        let mut c1: Vec<ElemSet> = unions
            .iter()
            .copied()
            .filter(|&u| !unions.iter().any(|&v| v != u && v.is_subset(u)))
            .collect();
        sort_canonical(&mut c1);

        let mut c2: Vec<ElemSet> = ox.iter().map(|c| c.union(a)).collect();
        sort_canonical(&mut c2);

        let mut c3 = Vec::new();
        let circuits = self.base.circuit_masks()?;
        for &c in ox {
            if !c.contains(e) {
                c3.push(c.with(e).union(g));
            } else {
                c3.push(c.without(e).union(g));
            }
        }
        for &c in circuits {
            if c.contains(e) && parity_of(c.without(e), self.x) == CircuitParity::OX {
                c3.push(c.without(e).union(a).union(g));
            }
        }
        sort_canonical(&mut c3);
        c3.dedup();

        Ok(FamilyMasks {
            c0,
            c1,
            c2,
            c3,
            delta: self.delta_mask(),
        })
    }

    pub fn predict_circuits(&self) -> Result<CircuitFamily> {
        let m = self.predict_circuit_masks()?;
        let g = self.split_ground();
        let conv = |v: &[ElemSet]| v.iter().map(|&c| g.labels_of(c)).collect();
        Ok(CircuitFamily {
            c0: conv(&m.c0),
            c1: conv(&m.c1),
            c2: conv(&m.c2),
            c3: conv(&m.c3),
            delta: g.labels_of(m.delta),
        })
    }

    /// Rank of `A'` in the split matroid from ranks and closures in `M`.
    pub fn predict_rank(&self, q: &SplitQuery) -> Result<usize> {
        let a = q.a;
        let r = self.base.rank_mask(a);
        let rank = match (q.has_a, q.has_gamma) {
            (false, false) => r + self.contains_ox_mask(a)? as usize,
            (true, false) => r + 1,
            (false, true) => {
                let ox_a = self.contains_ox_mask(a)?;
                if !ox_a && self.contains_ox_mask(a.with(self.e))? {
                    r
                } else if ox_a && !self.e_in_closure(a) {
                    r + 2
                } else {
                    r + 1
                }
            }
            (true, true) => {
                if self.e_in_closure(a) {
                    r + 1
                } else {
                    r + 2
                }
            }
        };
        Ok(rank)
    }

    fn e_in_closure(&self, a: ElemSet) -> bool {
        self.base.closure_mask(a).contains(self.e)
    }

    /// Given an OX-circuit and an EX-circuit of `M`, both through `e` and
    /// inside `A ∪ e`, returns an OX-circuit of `M` inside their symmetric
    /// difference (and hence inside `A`).
    pub fn find_ox_subcircuit(
        &self,
        c_ox: &LabelSet,
        c_ex: &LabelSet,
        a: &LabelSet,
    ) -> Result<LabelSet> {
        let (c_ox, c_ex, a) = (self.base_mask(c_ox)?, self.base_mask(c_ex)?, self.base_mask(a)?);
        let g = self.base_ground();
        let Classes { ox, ex } = self.classes()?;
        let a_e = a.with(self.e);
        if !ox.contains(&c_ox) {
            return Err(Error::PreconditionViolated(format!(
                "{} is not an OX-circuit",
                g.labels_of(c_ox)
            )));
        }
        if !ex.contains(&c_ex) {
            return Err(Error::PreconditionViolated(format!(
                "{} is not an EX-circuit",
                g.labels_of(c_ex)
            )));
        }
        for c in [c_ox, c_ex] {
            if !c.contains(self.e) || !c.is_subset(a_e) {
                return Err(Error::PreconditionViolated(format!(
                    "{} must contain {} and lie inside A ∪ {}",
                    g.labels_of(c),
                    self.e_label(),
                    self.e_label()
                )));
            }
        }
        let diff = c_ox.symmetric_difference(c_ex);
        // The difference is a cycle meeting X oddly, so it contains an
        // OX-circuit.
        let found = ox
            .iter()
            .find(|c| c.is_subset(diff))
            .copied()
            .expect("symmetric difference of an OX- and an EX-circuit contains an OX-circuit");
        Ok(g.labels_of(found))
    }

    /// Every closure lemma whose hypotheses hold for `q`, with the set its
    /// formula produces (split-ground masks).
    pub fn closure_candidates(&self, q: &SplitQuery) -> Result<Vec<(ClosureCase, ElemSet)>> {
        use ClosureCase::*;
        let a = q.a;
        let cl = self.base.closure_mask(a);
        let e_in_cl = cl.contains(self.e);
        let ox_a = self.contains_ox_mask(a)?;
        let ox_ae = self.contains_ox_mask(a.with(self.e))?;
        let ox_cl = self.contains_ox_mask(cl)?;
        let shapes = ShapeSet::new(self, a)?;

        let plain = !q.has_a && !q.has_gamma;
        let only_a = q.has_a && !q.has_gamma;
        let only_g = !q.has_a && q.has_gamma;
        let both = q.has_a && q.has_gamma;

        let rules: [(ClosureCase, bool, ClosureShape); 12] = [
            (L3_2, plain && !ox_ae, ClosureShape::ClMinusF),
            (L3_3, plain && !ox_cl, ClosureShape::Cl),
            (L3_4_1, plain && ox_a && !e_in_cl, ClosureShape::ClPlusA),
            (L3_4_2, only_a && !e_in_cl, ClosureShape::ClPlusA),
            (L3_5, plain && ox_ae && !ox_a, ClosureShape::ClMinusFPlusGamma),
            (
                L3_6,
                only_g && !e_in_cl && ox_cl && !ox_a,
                ClosureShape::ClMinusFPlusGammaT,
            ),
            (L3_7, only_g && !ox_cl && !e_in_cl, ClosureShape::ClPlusGammaT),
            (L3_8_1, both, ClosureShape::ClPlusAEGamma),
            (L3_8_2, only_a && e_in_cl, ClosureShape::ClPlusAEGamma),
            (L3_8_3, only_g && ox_a, ClosureShape::ClPlusAEGamma),
            (L3_8_4, only_g && e_in_cl, ClosureShape::ClPlusAEGamma),
            (L3_8_5, plain && ox_a && e_in_cl, ClosureShape::ClPlusAEGamma),
        ];
        Ok(rules
            .into_iter()
            .filter(|(_, holds, _)| *holds)
            .map(|(case, _, shape)| (case, shapes.get(shape)))
            .collect())
    }

    /// Runs every closure lemma on `q`. All matching formulas must agree;
    /// a disagreement is returned as `FormulaDisagreement`.
    pub fn predict_closure(&self, q: &SplitQuery, with_oracle: bool) -> Result<ClosureCaseReport> {
        let candidates = self.closure_candidates(q)?;
        let g = self.split_ground();
        if let Some(&(first_case, first_set)) = candidates.first() {
            if let Some(&(case, set)) = candidates.iter().find(|(_, s)| *s != first_set) {
                return Err(Error::FormulaDisagreement {
                    query: g.labels_of(q.a_prime),
                    first: (first_case, g.labels_of(first_set)),
                    second: (case, g.labels_of(set)),
                });
            }
        }
        let formula = candidates.first().map(|&(_, s)| s);
        let oracle = with_oracle.then(|| self.split.closure_mask(q.a_prime));
        let agree = match (formula, oracle) {
            (Some(f), Some(o)) => Some(f == o),
            _ => None,
        };
        Ok(ClosureCaseReport {
            matched: candidates.iter().map(|&(c, _)| c).collect(),
            formula: formula.map(|s| g.labels_of(s)),
            oracle: oracle.map(|s| g.labels_of(s)),
            agree,
        })
    }

    /// The seven candidate closure shapes instantiated at `A ⊆ E`.
    pub fn closure_shapes(&self, a: ElemSet) -> Result<[(ClosureShape, ElemSet); 7]> {
        let s = ShapeSet::new(self, a)?;
        Ok(ClosureShape::ALL.map(|shape| (shape, s.get(shape))))
    }

    /// First sufficient flat condition satisfied by `q`, if any. `A` must be
    /// a flat of `M`.
    pub fn predict_is_flat(&self, q: &SplitQuery) -> Result<Option<FlatCondition>> {
        Ok(self.flat_conditions(q)?.first().copied())
    }

    /// Every sufficient flat condition satisfied by `q`, in order.
    pub fn flat_conditions(&self, q: &SplitQuery) -> Result<Vec<FlatCondition>> {
        use FlatCondition::*;
        let a = q.a;
        let cl = self.base.closure_mask(a);
        if cl != a {
            return Err(Error::BaseNotFlat(self.base_ground().labels_of(a)));
        }
        let e_in_cl = cl.contains(self.e);
        let ox_a = self.contains_ox_mask(a)?;
        let ox_cl = self.contains_ox_mask(cl)?;
        let ox_ae = self.contains_ox_mask(a.with(self.e))?;
        let f_empty = self.f_mask(a)?.is_empty();
        let t_empty = self.t_mask(a)?.is_empty();
        let plain = !q.has_a && !q.has_gamma;
        let only_a = q.has_a && !q.has_gamma;
        let only_g = !q.has_a && q.has_gamma;
        let both = q.has_a && q.has_gamma;

        let conditions = [
            (One, plain && !ox_ae && f_empty),
            (Two, plain && !ox_cl),
            (Three, only_a && !e_in_cl),
            (Four, only_g && !e_in_cl && ox_cl && !ox_a && f_empty && t_empty),
            (Five, only_g && !ox_cl && !e_in_cl && t_empty),
            (Six, both && a.contains(self.e)),
        ];
        Ok(conditions
            .into_iter()
            .filter(|(_, holds)| *holds)
            .map(|(c, _)| c)
            .collect())
    }
}

/// Builds the split matrix for `X` (mask) and `e` (position) over
/// `split_ground`, which must be the base ground followed by `a` and `γ`.
fn split_matrix(base: &GF2Matrix, x: ElemSet, e: usize, split_ground: Ground) -> Result<GF2Matrix> {
    let n_rows = base.n_rows() + 1;
    let new_row = 1u64 << base.n_rows();
    let mut cols: Vec<u64> = (0..base.n_cols())
        .map(|j| {
            let c = base.column_word(j);
            if x.contains(j) {
                c | new_row
            } else {
                c
            }
        })
        .collect();
    let a_col = new_row;
    let gamma_col = cols[e] ^ a_col;
    cols.push(a_col);
    cols.push(gamma_col);
    GF2Matrix::from_columns(split_ground, n_rows, &cols)
}

/// Convenience wrapper for [`SplitContext::build_split_matrix`].
pub fn build_split_matrix(ctx: &SplitContext) -> GF2Matrix {
    ctx.build_split_matrix()
}

/// Predicted circuit classes as split-ground masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMasks {
    pub c0: Vec<ElemSet>,
    pub c1: Vec<ElemSet>,
    pub c2: Vec<ElemSet>,
    pub c3: Vec<ElemSet>,
    pub delta: ElemSet,
}

impl FamilyMasks {
    /// Union of all classes, deduplicated, canonical order.
    pub fn flattened(&self) -> Vec<ElemSet> {
        let mut all: Vec<ElemSet> = self
            .c0
            .iter()
            .chain(&self.c1)
            .chain(&self.c2)
            .chain(&self.c3)
            .copied()
            .chain([self.delta])
            .collect();
        all.sort();
        all.dedup();
        sort_canonical(&mut all);
        all
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircuitFamily {
    pub c0: Vec<LabelSet>,
    pub c1: Vec<LabelSet>,
    pub c2: Vec<LabelSet>,
    pub c3: Vec<LabelSet>,
    pub delta: LabelSet,
}

/// Closure lemma (and sub-condition) identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosureCase {
    L3_2,
    L3_3,
    L3_4_1,
    L3_4_2,
    L3_5,
    L3_6,
    L3_7,
    L3_8_1,
    L3_8_2,
    L3_8_3,
    L3_8_4,
    L3_8_5,
}

impl ClosureCase {
    pub const ALL: [ClosureCase; 12] = [
        ClosureCase::L3_2,
        ClosureCase::L3_3,
        ClosureCase::L3_4_1,
        ClosureCase::L3_4_2,
        ClosureCase::L3_5,
        ClosureCase::L3_6,
        ClosureCase::L3_7,
        ClosureCase::L3_8_1,
        ClosureCase::L3_8_2,
        ClosureCase::L3_8_3,
        ClosureCase::L3_8_4,
        ClosureCase::L3_8_5,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ClosureCase::L3_2 => "L3.2",
            ClosureCase::L3_3 => "L3.3",
            ClosureCase::L3_4_1 => "L3.4.1",
            ClosureCase::L3_4_2 => "L3.4.2",
            ClosureCase::L3_5 => "L3.5",
            ClosureCase::L3_6 => "L3.6",
            ClosureCase::L3_7 => "L3.7",
            ClosureCase::L3_8_1 => "L3.8.1",
            ClosureCase::L3_8_2 => "L3.8.2",
            ClosureCase::L3_8_3 => "L3.8.3",
            ClosureCase::L3_8_4 => "L3.8.4",
            ClosureCase::L3_8_5 => "L3.8.5",
        }
    }
}

impl fmt::Display for ClosureCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for ClosureCase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Outcome of [`SplitContext::predict_closure`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureCaseReport {
    pub matched: Vec<ClosureCase>,
    pub formula: Option<LabelSet>,
    pub oracle: Option<LabelSet>,
    pub agree: Option<bool>,
}

impl ClosureCaseReport {
    pub fn no_lemma_applies(&self) -> bool {
        self.matched.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// The seven set shapes a split closure can take, in terms of `cl`, `F`
/// and `T` of the trace `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosureShape {
    /// `cl(A) − F(A)`
    ClMinusF,
    /// `cl(A)`
    Cl,
    /// `cl(A) ∪ a`
    ClPlusA,
    /// `(cl(A) − F(A)) ∪ γ`
    ClMinusFPlusGamma,
    /// `(cl(A) − F(A)) ∪ γ ∪ T(A)`
    ClMinusFPlusGammaT,
    /// `cl(A) ∪ γ ∪ T(A)`
    ClPlusGammaT,
    /// `cl(A) ∪ {a, e, γ}`
    ClPlusAEGamma,
}

impl ClosureShape {
    pub const ALL: [ClosureShape; 7] = [
        ClosureShape::ClMinusF,
        ClosureShape::Cl,
        ClosureShape::ClPlusA,
        ClosureShape::ClMinusFPlusGamma,
        ClosureShape::ClMinusFPlusGammaT,
        ClosureShape::ClPlusGammaT,
        ClosureShape::ClPlusAEGamma,
    ];
}

struct ShapeSet {
    cl: ElemSet,
    f: ElemSet,
    t: ElemSet,
    a: ElemSet,
    gamma: ElemSet,
    delta: ElemSet,
}

impl ShapeSet {
    fn new(ctx: &SplitContext, a: ElemSet) -> Result<Self> {
        Ok(ShapeSet {
            cl: ctx.base.closure_mask(a),
            f: ctx.f_mask(a)?,
            t: ctx.t_mask(a)?,
            a: ElemSet::singleton(ctx.a_index()),
            gamma: ElemSet::singleton(ctx.gamma_index()),
            delta: ctx.delta_mask(),
        })
    }

    fn get(&self, shape: ClosureShape) -> ElemSet {
        let cl_f = self.cl.difference(self.f);
        match shape {
            ClosureShape::ClMinusF => cl_f,
            ClosureShape::Cl => self.cl,
            ClosureShape::ClPlusA => self.cl.union(self.a),
            ClosureShape::ClMinusFPlusGamma => cl_f.union(self.gamma),
            ClosureShape::ClMinusFPlusGammaT => cl_f.union(self.gamma).union(self.t),
            ClosureShape::ClPlusGammaT => self.cl.union(self.gamma).union(self.t),
            ClosureShape::ClPlusAEGamma => self.cl.union(self.delta),
        }
    }
}

/// Sufficient conditions for `A'` to be a flat of the split matroid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FlatCondition {
    /// `A' = A`, `A ∪ e` has no OX-circuit, `F(A) = ∅`.
    One,
    /// `A' = A`, `cl(A)` has no OX-circuit.
    Two,
    /// `A' = A ∪ a`, `e ∉ cl(A)`.
    Three,
    /// `A' = A ∪ γ`, `e ∉ cl(A)`, `cl(A)` has an OX-circuit but `A` has none,
    /// `F(A) = T(A) = ∅`.
    Four,
    /// `A' = A ∪ γ`, `cl(A)` has no OX-circuit, `e ∉ cl(A)`, `T(A) = ∅`.
    Five,
    /// `A' = A ∪ {a, γ}`, `e ∈ A`.
    Six,
}

impl FlatCondition {
    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

impl fmt::Display for FlatCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.number())
    }
}
