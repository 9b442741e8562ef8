//! Exhaustive (or sampled) comparison of every predictor against the oracle
//! on one split instance.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::set::{ElemSet, LabelSet};
use crate::split::{ClosureCase, FlatCondition, SplitContext};

/// How many witnesses of each failure kind are kept in a summary.
pub const MAX_WITNESSES: usize = 10;

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    /// Sample this many random `A'` instead of walking all subsets.
    pub sample: Option<usize>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureWitness {
    pub query: LabelSet,
    pub matched: Vec<ClosureCase>,
    pub formula: LabelSet,
    pub other: LabelSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankWitness {
    pub query: LabelSet,
    pub predicted: usize,
    pub oracle: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlatWitness {
    pub query: LabelSet,
    pub condition: FlatCondition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub equal: bool,
    pub predicted: usize,
    pub oracle: usize,
    /// Oracle circuits the prediction misses.
    pub missing: Vec<LabelSet>,
    /// Predicted sets that are not circuits.
    pub extra: Vec<LabelSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tally<W> {
    pub count: usize,
    pub witnesses: Vec<W>,
}

impl<W> Default for Tally<W> {
    fn default() -> Self {
        Tally {
            count: 0,
            witnesses: Vec::new(),
        }
    }
}

impl<W> Tally<W> {
    fn record(&mut self, w: impl FnOnce() -> W) {
        self.count += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub queries: usize,
    pub sampled: bool,
    pub lemma_hits: BTreeMap<String, usize>,
    pub no_lemma_applies: usize,
    /// Matched formula differs from the oracle closure.
    pub closure_disagreements: Tally<ClosureWitness>,
    /// Two matched lemmas give different sets.
    pub lemma_conflicts: Tally<ClosureWitness>,
    /// Oracle closure equals none of the seven shapes.
    pub shape_misses: Tally<ClosureWitness>,
    pub rank_disagreements: Tally<RankWitness>,
    /// A flat condition fired but the oracle says `A'` is not closed.
    pub flat_violations: Tally<FlatWitness>,
    pub flats_certified: usize,
    /// `e ∈ cl(A)` but `T(A) ⊄ cl(A)`.
    pub t_outside_closure: Tally<LabelSet>,
    pub circuit_family: FamilyCheck,
    pub base_rank: usize,
    pub split_rank: usize,
    pub delta_is_circuit: bool,
}

impl CheckSummary {
    pub fn rank_corollary_holds(&self) -> bool {
        self.split_rank == self.base_rank + 1
    }

    /// True iff every soundness property held.
    pub fn passed(&self) -> bool {
        self.closure_disagreements.count == 0
            && self.lemma_conflicts.count == 0
            && self.shape_misses.count == 0
            && self.rank_disagreements.count == 0
            && self.flat_violations.count == 0
            && self.t_outside_closure.count == 0
            && self.circuit_family.equal
            && self.rank_corollary_holds()
            && self.delta_is_circuit
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let ok = |b: bool| if b { "ok" } else { "FAILED" };
        let _ = writeln!(
            s,
            "queries: {}{}",
            self.queries,
            if self.sampled { " (sampled)" } else { " (exhaustive)" }
        );
        for (id, n) in &self.lemma_hits {
            let _ = writeln!(s, "  {id:<7} {n}");
        }
        let _ = writeln!(s, "  none    {}", self.no_lemma_applies);
        let tallies = [
            ("closure formula vs oracle disagreements", self.closure_disagreements.count),
            ("lemma conflicts", self.lemma_conflicts.count),
            ("oracle closures outside the seven shapes", self.shape_misses.count),
            ("rank formula disagreements", self.rank_disagreements.count),
            ("flat condition violations", self.flat_violations.count),
            ("T(A) outside cl(A) with e in cl(A)", self.t_outside_closure.count),
        ];
        for (what, n) in tallies {
            let _ = writeln!(s, "{what}: {n}");
        }
        let _ = writeln!(s, "flat conditions certified: {}", self.flats_certified);
        let fam = &self.circuit_family;
        let _ = writeln!(
            s,
            "circuit family: {} (predicted {}, oracle {})",
            ok(fam.equal),
            fam.predicted,
            fam.oracle
        );
        for c in &fam.missing {
            let _ = writeln!(s, "  missing {c}");
        }
        for c in &fam.extra {
            let _ = writeln!(s, "  extra   {c}");
        }
        let _ = writeln!(
            s,
            "rank: r(M) = {}, r(split) = {}: {}",
            self.base_rank,
            self.split_rank,
            ok(self.rank_corollary_holds())
        );
        let _ = writeln!(s, "delta is a circuit: {}", ok(self.delta_is_circuit));
        let witness_lists = [
            ("closure disagreement", &self.closure_disagreements.witnesses),
            ("lemma conflict", &self.lemma_conflicts.witnesses),
            ("shape miss", &self.shape_misses.witnesses),
        ];
        for (what, list) in witness_lists {
            for w in list {
                let ids: Vec<&str> = w.matched.iter().map(|c| c.id()).collect();
                let _ = writeln!(
                    s,
                    "{what}: A' = {} [{}] formula {} vs {}",
                    w.query,
                    ids.join(","),
                    w.formula,
                    w.other
                );
            }
        }
        for w in &self.rank_disagreements.witnesses {
            let _ = writeln!(
                s,
                "rank disagreement: A' = {} predicted {} oracle {}",
                w.query, w.predicted, w.oracle
            );
        }
        for w in &self.flat_violations.witnesses {
            let _ = writeln!(s, "flat violation: A' = {} condition {}", w.query, w.condition);
        }
        for w in &self.t_outside_closure.witnesses {
            let _ = writeln!(s, "T(A) outside cl(A): A = {w}");
        }
        let _ = writeln!(s, "result: {}", if self.passed() { "PASS" } else { "FAIL" });
        s
    }
}

/// Compares the predicted circuit family with the oracle circuits.
pub fn check_circuit_family(ctx: &SplitContext) -> Result<FamilyCheck> {
    let predicted = ctx.predict_circuit_masks()?.flattened();
    let oracle = ctx.split_matroid().circuit_masks()?;
    let g = ctx.split_ground();
    let missing = oracle
        .iter()
        .filter(|c| !predicted.contains(c))
        .map(|&c| g.labels_of(c))
        .collect::<Vec<_>>();
    let extra = predicted
        .iter()
        .filter(|c| !oracle.contains(c))
        .map(|&c| g.labels_of(c))
        .collect::<Vec<_>>();
    Ok(FamilyCheck {
        equal: missing.is_empty() && extra.is_empty(),
        predicted: predicted.len(),
        oracle: oracle.len(),
        missing,
        extra,
    })
}

/// The queries a check visits: every subset of the split ground, or a seeded
/// sample when requested.
pub fn queries(ctx: &SplitContext, opts: &CheckOptions) -> Result<Vec<ElemSet>> {
    let split = ctx.split_matroid();
    match opts.sample {
        Some(n) => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let all = split.all();
            Ok((0..n)
                .map(|_| ElemSet(rng.gen::<u64>()).intersection(all))
                .collect())
        }
        None => {
            split.require_subset_walk()?;
            Ok(split.all().subsets().collect())
        }
    }
}

pub fn run_check(ctx: &SplitContext, opts: &CheckOptions) -> Result<CheckSummary> {
    let qs = queries(ctx, opts)?;
    let split = ctx.split_matroid();
    let base = ctx.base();
    let g = ctx.split_ground();

    let mut lemma_hits: BTreeMap<String, usize> = ClosureCase::ALL
        .iter()
        .map(|c| (c.id().to_string(), 0))
        .collect();
    let mut no_lemma = 0;
    let mut closure_disagreements = Tally::default();
    let mut lemma_conflicts = Tally::default();
    let mut shape_misses = Tally::default();
    let mut rank_disagreements = Tally::default();
    let mut flat_violations = Tally::default();
    let mut flats_certified = 0;
    let mut t_outside_closure = Tally::default();

    for &mask in &qs {
        let q = ctx.query_mask(mask);
        let oracle_cl = split.closure_mask(mask);

        let candidates = ctx.closure_candidates(&q)?;
        let matched: Vec<ClosureCase> = candidates.iter().map(|&(c, _)| c).collect();
        for c in &matched {
            *lemma_hits.get_mut(c.id()).expect("all ids present") += 1;
        }
        match candidates.first() {
            None => no_lemma += 1,
            Some(&(_, first)) => {
                if let Some(&(_, other)) = candidates.iter().find(|(_, s)| *s != first) {
                    lemma_conflicts.record(|| ClosureWitness {
                        query: g.labels_of(mask),
                        matched: matched.clone(),
                        formula: g.labels_of(first),
                        other: g.labels_of(other),
                    });
                }
                for &(_, s) in &candidates {
                    if s != oracle_cl {
                        closure_disagreements.record(|| ClosureWitness {
                            query: g.labels_of(mask),
                            matched: matched.clone(),
                            formula: g.labels_of(s),
                            other: g.labels_of(oracle_cl),
                        });
                        break;
                    }
                }
            }
        }

        let shapes = ctx.closure_shapes(q.a)?;
        if !shapes.iter().any(|&(_, s)| s == oracle_cl) {
            shape_misses.record(|| ClosureWitness {
                query: g.labels_of(mask),
                matched: matched.clone(),
                formula: LabelSet::empty(),
                other: g.labels_of(oracle_cl),
            });
        }

        let predicted = ctx.predict_rank(&q)?;
        let oracle_rank = split.rank_mask(mask);
        if predicted != oracle_rank {
            rank_disagreements.record(|| RankWitness {
                query: g.labels_of(mask),
                predicted,
                oracle: oracle_rank,
            });
        }

        if base.is_flat_mask(q.a) {
            if let Some(condition) = ctx.predict_is_flat(&q)? {
                flats_certified += 1;
                if oracle_cl != mask {
                    flat_violations.record(|| FlatWitness {
                        query: g.labels_of(mask),
                        condition,
                    });
                }
            }
        }

        if !q.has_a && !q.has_gamma {
            let cl = base.closure_mask(q.a);
            if cl.contains(ctx.e_index()) && !ctx.t_mask(q.a)?.is_subset(cl) {
                t_outside_closure.record(|| g.labels_of(mask));
            }
        }
    }

    let circuit_family = check_circuit_family(ctx)?;
    let delta_is_circuit = split.circuit_masks()?.contains(&ctx.delta_mask());

    Ok(CheckSummary {
        queries: qs.len(),
        sampled: opts.sample.is_some(),
        lemma_hits,
        no_lemma_applies: no_lemma,
        closure_disagreements,
        lemma_conflicts,
        shape_misses,
        rank_disagreements,
        flat_violations,
        flats_certified,
        t_outside_closure,
        circuit_family,
        base_rank: base.rank(),
        split_rank: split.rank(),
        delta_is_circuit,
    })
}
