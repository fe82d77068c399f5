//! Exhaustive case enumeration and the metric-vs-property checker.
//!
//! Enumeration is deterministic and lexicographic in `(n, g, p, q)`, reading
//! each sequence as a binary string (first position most significant). The
//! checker fans the per-`g` partitions out to parallel workers and merges the
//! partial reports back in enumeration order, so reports are identical for
//! any worker count.

use super::predicates::{precondition_advanced, precondition_simple, GroundTruth};
use super::{
    PropertyCase, PropertyFamily, PropertyId, PropertyReport, Provenance, Relation, Verdict,
    Witness, MAX_ENUM_LEN,
};
use crate::classify::{classify_alarms, AlarmClassification};
use crate::metrics::{evaluate, MetricDescriptor};
use crate::score::ScoreValue;
use crate::seq::BinarySeq;
use rayon::prelude::*;

/// Absolute tolerance for `equal` comparisons of float-valued metrics;
/// rational-valued metrics compare exactly.
pub const FLOAT_EQ_TOL: f64 = 1e-12;

/// Number of violating witnesses kept in a report by default.
pub const DEFAULT_MAX_WITNESSES: usize = 10;

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub max_witnesses: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_witnesses: DEFAULT_MAX_WITNESSES,
            workers: None,
        }
    }
}

/// Sequence whose 1-based position `i` is bit `n - i` of `v`, so that
/// ascending `v` enumerates binary strings in lexicographic order.
fn seq_from_lex(v: u64, n: usize) -> BinarySeq {
    BinarySeq::from_bools((0..n).map(|i| v >> (n - 1 - i) & 1 == 1).collect())
        .expect("n >= 1")
}

fn guard_max_len(max_len: usize) {
    assert!(
        (1..=MAX_ENUM_LEN).contains(&max_len),
        "max_len must lie in 1..={MAX_ENUM_LEN} (cost grows as 8^n)"
    );
}

/// Calls `f` for every enumerated case, in lexicographic `(n, g, p, q)` order.
pub fn for_each_case<F: FnMut(&PropertyCase)>(prop: PropertyId, max_len: usize, mut f: F) {
    guard_max_len(max_len);
    for n in 1..=max_len {
        let seqs: Vec<BinarySeq> = (0..1u64 << n).map(|v| seq_from_lex(v, n)).collect();
        let masks: Vec<u64> = seqs.iter().map(|s| s.as_mask()).collect();
        for gv in 0..1u64 << n {
            let g = &seqs[gv as usize];
            let gt = GroundTruth::new(g);
            let mut classifications: Vec<Option<AlarmClassification>> = vec![None; 1 << n];
            for pv in 0..1u64 << n {
                for qv in 0..1u64 << n {
                    let rel = relation_for(
                        &gt,
                        prop,
                        g,
                        &seqs,
                        &masks,
                        pv as usize,
                        qv as usize,
                        &mut classifications,
                    );
                    if let Some(expected) = rel {
                        f(&PropertyCase {
                            g: g.clone(),
                            p: seqs[pv as usize].clone(),
                            q: seqs[qv as usize].clone(),
                            expected,
                            provenance: Provenance::Enumerated,
                        });
                    }
                }
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn relation_for(
    gt: &GroundTruth,
    prop: PropertyId,
    g: &BinarySeq,
    seqs: &[BinarySeq],
    masks: &[u64],
    pv: usize,
    qv: usize,
    classifications: &mut [Option<AlarmClassification>],
) -> Option<Relation> {
    match prop.family {
        PropertyFamily::Simple => precondition_simple(gt, prop.index, masks[pv], masks[qv]),
        PropertyFamily::Advanced => {
            if classifications[pv].is_none() {
                classifications[pv] =
                    Some(classify_alarms(g, &seqs[pv]).expect("equal lengths"));
            }
            if classifications[qv].is_none() {
                classifications[qv] =
                    Some(classify_alarms(g, &seqs[qv]).expect("equal lengths"));
            }
            let cp = classifications[pv].as_ref().unwrap();
            let cq = classifications[qv].as_ref().unwrap();
            precondition_advanced(gt, prop.index, masks[pv], masks[qv], cp, cq)
        }
    }
}

/// Materializes the full case stream (mainly for tests and small bounds).
pub fn enumerate_cases(prop: PropertyId, max_len: usize) -> Vec<PropertyCase> {
    let mut out = Vec::new();
    for_each_case(prop, max_len, |c| out.push(c.clone()));
    out
}

struct PartialReport {
    cases: u64,
    skipped: u64,
    skipped_with_anomalies: u64,
    witnesses: Vec<Witness>,
}

fn check_outcome(a: &ScoreValue, b: &ScoreValue, rel: Relation) -> Option<bool> {
    match rel {
        Relation::Greater => a.strictly_greater(b),
        Relation::Equal => a.equals_with_tol(b, FLOAT_EQ_TOL),
    }
}

/// Checks `metric` against `prop` on every enumerated case with `len <= max_len`.
pub fn check_property(metric: &MetricDescriptor, prop: PropertyId, max_len: usize) -> PropertyReport {
    check_property_with(metric, prop, max_len, &CheckOptions::default())
}

pub fn check_property_with(
    metric: &MetricDescriptor,
    prop: PropertyId,
    max_len: usize,
    opts: &CheckOptions,
) -> PropertyReport {
    guard_max_len(max_len);
    let run = || {
        let mut partials: Vec<PartialReport> = Vec::new();
        for n in 1..=max_len {
            let seqs: Vec<BinarySeq> = (0..1u64 << n).map(|v| seq_from_lex(v, n)).collect();
            let mut level: Vec<PartialReport> = (0..1u64 << n)
                .into_par_iter()
                .map(|gv| check_for_g(metric, prop, &seqs, gv as usize, opts.max_witnesses))
                .collect();
            partials.append(&mut level);
        }
        merge_partials(metric, prop, max_len, partials, opts.max_witnesses)
    };
    match opts.workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("thread pool");
            pool.install(run)
        }
        None => run(),
    }
}

fn check_for_g(
    metric: &MetricDescriptor,
    prop: PropertyId,
    seqs: &[BinarySeq],
    gv: usize,
    max_witnesses: usize,
) -> PartialReport {
    let g = &seqs[gv];
    let n = g.len();
    let gt = GroundTruth::new(g);
    let masks: Vec<u64> = seqs.iter().map(|s| s.as_mask()).collect();
    let mut scores: Vec<Option<ScoreValue>> = vec![None; 1 << n];
    let mut classifications: Vec<Option<AlarmClassification>> = vec![None; 1 << n];
    let mut part = PartialReport {
        cases: 0,
        skipped: 0,
        skipped_with_anomalies: 0,
        witnesses: Vec::new(),
    };
    let g_has_anomaly = gt.has_anomaly();
    for pv in 0..1usize << n {
        for qv in 0..1usize << n {
            let rel = relation_for(&gt, prop, g, seqs, &masks, pv, qv, &mut classifications);
            let Some(expected) = rel else { continue };
            part.cases += 1;
            for v in [pv, qv] {
                if scores[v].is_none() {
                    scores[v] = Some(
                        evaluate(metric, g, &seqs[v])
                            .expect("validated descriptor and equal lengths")
                            .value,
                    );
                }
            }
            let sp = scores[pv].as_ref().unwrap();
            let sq = scores[qv].as_ref().unwrap();
            match check_outcome(sp, sq, expected) {
                None => {
                    part.skipped += 1;
                    if g_has_anomaly {
                        part.skipped_with_anomalies += 1;
                    }
                }
                Some(true) => {}
                Some(false) => {
                    if part.witnesses.len() < max_witnesses {
                        part.witnesses.push(Witness {
                            g: g.to_string(),
                            p: seqs[pv].to_string(),
                            q: seqs[qv].to_string(),
                            expected,
                        });
                    }
                }
            }
        }
    }
    part
}

fn merge_partials(
    metric: &MetricDescriptor,
    prop: PropertyId,
    max_len: usize,
    partials: Vec<PartialReport>,
    max_witnesses: usize,
) -> PropertyReport {
    let mut cases = 0;
    let mut skipped = 0;
    let mut skipped_with_anomalies = 0;
    let mut witnesses = Vec::new();
    let mut violated = false;
    for p in partials {
        cases += p.cases;
        skipped += p.skipped;
        skipped_with_anomalies += p.skipped_with_anomalies;
        if !p.witnesses.is_empty() {
            violated = true;
            for w in p.witnesses {
                if witnesses.len() < max_witnesses {
                    witnesses.push(w);
                }
            }
        }
    }
    PropertyReport {
        metric: metric.clone(),
        property: prop,
        max_len,
        cases_checked: cases,
        skipped,
        skipped_with_anomalies,
        verdict: if violated {
            Verdict::Violated
        } else {
            Verdict::NoCounterexampleUpToMaxLen
        },
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::MetricId;
    use crate::properties::precondition;

    #[test]
    fn p1_case_count_at_len_3_matches_frozen_constant() {
        // brute-force count over all 3-bit triples, frozen before the build
        assert_eq!(enumerate_cases(PropertyId::simple(1), 3).len(), 47);
    }

    #[test]
    fn every_enumerated_case_repasses_its_precondition() {
        for prop in [PropertyId::simple(2), PropertyId::simple(6), PropertyId::advanced(1)] {
            for case in enumerate_cases(prop, 4) {
                assert_eq!(
                    precondition(prop, &case.g, &case.p, &case.q),
                    Some(case.expected),
                    "case {:?} fails self-consistency for {prop}",
                    case
                );
            }
        }
    }

    #[test]
    fn p5_contains_the_two_step_swap() {
        let cases = enumerate_cases(PropertyId::simple(5), 2);
        assert!(cases.iter().any(|c| {
            c.g.to_string() == "00"
                && c.p.to_string() == "10"
                && c.q.to_string() == "01"
                && c.expected == Relation::Equal
        }));
    }

    #[test]
    fn reports_are_identical_for_different_worker_counts() {
        let metric = MetricDescriptor::new(MetricId::PointwisePrecision);
        let prop = PropertyId::simple(4);
        let one = check_property_with(
            &metric,
            prop,
            5,
            &CheckOptions {
                max_witnesses: 10,
                workers: Some(1),
            },
        );
        let four = check_property_with(
            &metric,
            prop,
            5,
            &CheckOptions {
                max_witnesses: 10,
                workers: Some(4),
            },
        );
        assert_eq!(one.cases_checked, four.cases_checked);
        assert_eq!(one.skipped, four.skipped);
        assert_eq!(one.verdict, four.verdict);
        assert_eq!(one.witnesses, four.witnesses);
    }

    #[test]
    fn larm_has_p1_up_to_len_5() {
        let metric = MetricDescriptor::new(MetricId::Larm);
        let report = check_property(&metric, PropertyId::simple(1), 5);
        assert_eq!(report.verdict, Verdict::NoCounterexampleUpToMaxLen);
        assert_eq!(report.skipped_with_anomalies, 0);
    }

    #[test]
    fn pointwise_precision_violates_p1_with_a_witness() {
        let metric = MetricDescriptor::new(MetricId::PointwisePrecision);
        let report = check_property(&metric, PropertyId::simple(1), 5);
        assert_eq!(report.verdict, Verdict::Violated);
        assert!(!report.witnesses.is_empty());
    }
}
