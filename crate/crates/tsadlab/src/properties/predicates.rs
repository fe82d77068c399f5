//! Literal precondition predicates for the simple properties P1–P9 and the
//! advanced properties A1–A9.
//!
//! All predicates operate on bitmask views of the three sequences (bit `i-1`
//! set means position `i` carries a 1), with the ground-truth interval
//! structure precomputed once per `g`. The advanced predicates additionally
//! consume the DA/TA/EA/LA classifications of `p` and `q` against `g`.
//!
//! Two notation slips in the source statements are resolved the same way as
//! the redundant-alarms property names its conclusion: the advanced
//! maximizing-true-positives hypothesis `EA(p,g) = EA(p,g)` is read as
//! `EA(p,g) = EA(q,g)`, and the alarm-timing minima are taken over in-window
//! hits, parallel to the simple variant.

use super::{PropertyFamily, PropertyId, Relation};
use crate::classify::{classify_alarms, AlarmClassification};
use crate::seq::{BinarySeq, Interval};

/// Precomputed per-`g` context shared across many `(p, q)` pairs.
pub(crate) struct GroundTruth {
    pub n: usize,
    pub ones_runs: Vec<Interval>,
    pub zero_runs: Vec<Interval>,
    pub g_mask: u64,
}

impl GroundTruth {
    pub fn new(g: &BinarySeq) -> Self {
        GroundTruth {
            n: g.len(),
            ones_runs: g.runs(true),
            zero_runs: g.runs(false),
            g_mask: g.as_mask(),
        }
    }

    pub fn has_anomaly(&self) -> bool {
        !self.ones_runs.is_empty()
    }
}

fn window_mask(w: &Interval) -> u64 {
    debug_assert!(w.hi <= 64);
    let width = w.len();
    let ones = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
    ones << (w.lo - 1)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits_in(mask: u64, w: &Interval) -> u64 {
    mask & window_mask(w)
}

fn count_runs(mask: u64) -> u32 {
    // run starts are 1-bits whose lower neighbour is 0
    (mask & !(mask << 1)).count_ones()
}

fn runs_in(mask: u64, w: &Interval) -> u32 {
    count_runs(bits_in(mask, w))
}

fn first_one_in(mask: u64, w: &Interval) -> Option<usize> {
    let m = bits_in(mask, w);
    (m != 0).then(|| m.trailing_zeros() as usize + 1)
}

fn bit(mask: u64, i: usize) -> bool {
    mask >> (i - 1) & 1 == 1
}

/// Simple-property preconditions over bitmasks. Returns the expected relation
/// when the triple satisfies the property's hypotheses.
pub(crate) fn precondition_simple(
    gt: &GroundTruth,
    index: u8,
    p: u64,
    q: u64,
) -> Option<Relation> {
    let diff = p ^ q;
    match index {
        // p = q outside A; p raises an alarm inside A, q none
        1 => gt
            .ones_runs
            .iter()
            .any(|a| {
                diff & !window_mask(a) == 0 && runs_in(p, a) > 0 && runs_in(q, a) == 0
            })
            .then_some(Relation::Greater),
        // q = p plus one extra all-new alarm strictly after p's last in-A hit
        2 => {
            if diff == 0 || p & diff != 0 {
                return None;
            }
            gt.ones_runs
                .iter()
                .any(|a| {
                    if diff & !window_mask(a) != 0 {
                        return false;
                    }
                    let p_in_a = bits_in(p, a);
                    if p_in_a == 0 {
                        return false; // max over an empty hit set is undefined
                    }
                    let last_hit = 64 - p_in_a.leading_zeros() as usize;
                    let first_new = diff.trailing_zeros() as usize + 1;
                    first_new > last_hit && runs_in(q, a) == runs_in(p, a) + 1
                })
                .then_some(Relation::Greater)
        }
        // one extra false positive, alarm count in its normal run unchanged
        3 => {
            if diff.count_ones() != 1 || q & diff == 0 {
                return None;
            }
            let i = diff.trailing_zeros() as usize + 1;
            gt.zero_runs
                .iter()
                .any(|n| n.contains(i) && runs_in(p, n) == runs_in(q, n))
                .then_some(Relation::Greater)
        }
        // fewer false alarms within one normal run
        4 => gt
            .zero_runs
            .iter()
            .any(|n| diff & !window_mask(n) == 0 && runs_in(p, n) < runs_in(q, n))
            .then_some(Relation::Greater),
        // permutation of false positives: same totals, same alarm count in N
        5 => gt
            .zero_runs
            .iter()
            .any(|n| {
                diff & !window_mask(n) == 0
                    && p.count_ones() == q.count_ones()
                    && runs_in(p, n) == runs_in(q, n)
            })
            .then_some(Relation::Equal),
        // q adds a single false positive in an empty normal run, in-window
        // alarm counts equal
        6 => {
            for a in &gt.ones_runs {
                for n in &gt.zero_runs {
                    let outside = !(window_mask(a) | window_mask(n));
                    if diff & outside != 0 {
                        continue;
                    }
                    let qn = bits_in(q, n);
                    if bits_in(p, n) == 0
                        && qn.count_ones() == 1
                        && runs_in(p, a) == runs_in(q, a)
                    {
                        return Some(Relation::Greater);
                    }
                }
            }
            None
        }
        // p has one extra true positive without extra alarms
        7 => {
            if diff.count_ones() != 1 || p & diff == 0 {
                return None;
            }
            let i = diff.trailing_zeros() as usize + 1;
            gt.ones_runs
                .iter()
                .any(|a| a.contains(i) && runs_in(p, a) <= runs_in(q, a))
                .then_some(Relation::Greater)
        }
        // earlier first in-window hit, alarm counts and totals fixed
        8 => gt
            .ones_runs
            .iter()
            .any(|a| {
                diff & !window_mask(a) == 0
                    && runs_in(p, a) == runs_in(q, a)
                    && p.count_ones() == q.count_ones()
                    && match (first_one_in(p, a), first_one_in(q, a)) {
                        (Some(fp), Some(fq)) => fp < fq,
                        _ => false,
                    }
            })
            .then_some(Relation::Greater),
        // one in-window hit moved to an earlier position
        9 => {
            if diff.count_ones() != 2 {
                return None;
            }
            let i_star = diff.trailing_zeros() as usize + 1;
            let i_star2 = 64 - diff.leading_zeros() as usize;
            if !(bit(p, i_star) && !bit(q, i_star) && !bit(p, i_star2) && bit(q, i_star2)) {
                return None;
            }
            gt.ones_runs
                .iter()
                .any(|a| {
                    a.contains(i_star) && a.contains(i_star2) && runs_in(p, a) <= runs_in(q, a)
                })
                .then_some(Relation::Greater)
        }
        _ => unreachable!("property index out of range"),
    }
}

fn same_intervals(a: &[Interval], b: &[Interval]) -> bool {
    a == b
}

/// The normal part `A_O ∩ g^{-1}(0)` of an early/late alarm; early and late
/// alarms straddle exactly one junction boundary, so it is an interval.
fn normal_part(gt: &GroundTruth, a: &Interval) -> Option<Interval> {
    let zeros: Vec<usize> = (a.lo..=a.hi).filter(|&i| !bit(gt.g_mask, i)).collect();
    let (first, last) = (*zeros.first()?, *zeros.last()?);
    (last - first + 1 == zeros.len()).then(|| Interval::new(first, last))
}

/// Advanced-property preconditions; `cp`/`cq` are the classifications of `p`
/// and `q` against `g`.
pub(crate) fn precondition_advanced(
    gt: &GroundTruth,
    index: u8,
    p: u64,
    q: u64,
    cp: &AlarmClassification,
    cq: &AlarmClassification,
) -> Option<Relation> {
    let diff = p ^ q;
    match index {
        // DA(p) = DA(q) ⊔ {A}; overlapping early/late alarms of p shrink to
        // true false alarms of q
        1 => {
            for a in &gt.ones_runs {
                if diff & !window_mask(a) != 0 {
                    continue;
                }
                if !cp.detected.contains(a) || cq.detected.contains(a) {
                    continue;
                }
                let rest: Vec<Interval> = cp
                    .detected
                    .iter()
                    .copied()
                    .filter(|w| w != a)
                    .collect();
                if rest != cq.detected {
                    continue;
                }
                let ok = cp
                    .early
                    .iter()
                    .chain(cp.late.iter())
                    .filter(|o| o.intersects(a))
                    .all(|o| {
                        normal_part(gt, o).is_some_and(|np| cq.true_false.contains(&np))
                    });
                if ok {
                    return Some(Relation::Greater);
                }
            }
            None
        }
        // redundant alarm after detection, with an in-window alarm present
        2 => {
            if diff == 0 || p & diff != 0 {
                return None;
            }
            if !same_intervals(&cp.detected, &cq.detected) {
                return None;
            }
            cp.detected
                .iter()
                .any(|a| {
                    if diff & !window_mask(a) != 0 {
                        return false;
                    }
                    let p_in_a = bits_in(p, a);
                    if p_in_a == 0 {
                        return false;
                    }
                    let last_hit = 64 - p_in_a.leading_zeros() as usize;
                    let first_new = diff.trailing_zeros() as usize + 1;
                    first_new > last_hit
                        && runs_in(q, a) == runs_in(p, a) + 1
                        && crate_alarm_inside(p, a)
                })
                .then_some(Relation::Greater)
        }
        // one extra false positive, global alarm count not decreased
        3 => {
            if diff.count_ones() != 1 || q & diff == 0 {
                return None;
            }
            let i = diff.trailing_zeros() as usize + 1;
            (gt.zero_runs.iter().any(|n| n.contains(i))
                && count_runs(p & full_mask(gt.n)) <= count_runs(q & full_mask(gt.n)))
            .then_some(Relation::Greater)
        }
        // strictly fewer classified false alarms overall, none more per class
        4 => gt
            .zero_runs
            .iter()
            .any(|n| {
                diff & !window_mask(n) == 0
                    && same_intervals(&cp.detected, &cq.detected)
                    && p.count_ones() == q.count_ones()
                    && cp.true_false.len() <= cq.true_false.len()
                    && cp.early.len() <= cq.early.len()
                    && cp.late.len() <= cq.late.len()
                    && cp.true_false.len() + cp.early.len() + cp.late.len()
                        < cq.true_false.len() + cq.early.len() + cq.late.len()
            })
            .then_some(Relation::Greater),
        // permuting true false alarms
        5 => (p & gt.g_mask == q & gt.g_mask
            && p.count_ones() == q.count_ones()
            && same_intervals(&cp.early, &cq.early)
            && same_intervals(&cp.late, &cq.late)
            && cp.true_false.len() == cq.true_false.len())
        .then_some(Relation::Equal),
        // (i) early alarm of q traded for a true false alarm of p;
        // (ii) true false alarm of q traded for a late alarm of p
        6 => {
            if p.count_ones() != q.count_ones() || !same_intervals(&cp.detected, &cq.detected) {
                return None;
            }
            let case_i = cq.early.iter().any(|a| {
                normal_part(gt, a).is_some_and(|ae| {
                    cp.true_false.iter().any(|at| {
                        !ae.intersects(at)
                            && diff & !(window_mask(&ae) | window_mask(at)) == 0
                            && bits_in(p, &ae) == 0
                            && bits_in(q, at) == 0
                    })
                })
            });
            if case_i {
                return Some(Relation::Greater);
            }
            let case_ii = cp.late.iter().any(|a| {
                normal_part(gt, a).is_some_and(|al| {
                    cq.true_false.iter().any(|at| {
                        !at.intersects(&al)
                            && diff & !(window_mask(at) | window_mask(&al)) == 0
                            && bits_in(p, at) == 0
                            && bits_in(q, &al) == 0
                    })
                })
            });
            case_ii.then_some(Relation::Greater)
        }
        // extra true positive in a window detected by both, early alarms fixed
        7 => {
            if diff.count_ones() != 1 || p & diff == 0 {
                return None;
            }
            let i = diff.trailing_zeros() as usize + 1;
            (cp.detected
                .iter()
                .any(|a| a.contains(i) && cq.detected.contains(a))
                && same_intervals(&cp.early, &cq.early))
            .then_some(Relation::Greater)
        }
        // earlier first in-window hit, early alarms and late-alarm counts fixed
        8 => cp
            .detected
            .iter()
            .any(|a| {
                cq.detected.contains(a)
                    && diff & !window_mask(a) == 0
                    && runs_in(p, a) == runs_in(q, a)
                    && p.count_ones() == q.count_ones()
                    && same_intervals(&cp.early, &cq.early)
                    && cp.late.len() == cq.late.len()
                    && match (first_one_in(p, a), first_one_in(q, a)) {
                        (Some(fp), Some(fq)) => fp < fq,
                        _ => false,
                    }
            })
            .then_some(Relation::Greater),
        // in-window hit moved earlier, early alarms and late-alarm counts fixed
        9 => {
            if diff.count_ones() != 2 {
                return None;
            }
            let i_star = diff.trailing_zeros() as usize + 1;
            let i_star2 = 64 - diff.leading_zeros() as usize;
            if !(bit(p, i_star) && !bit(q, i_star) && !bit(p, i_star2) && bit(q, i_star2)) {
                return None;
            }
            (same_intervals(&cp.early, &cq.early)
                && cp.late.len() == cq.late.len()
                && cp.detected.iter().any(|a| {
                    cq.detected.contains(a)
                        && a.contains(i_star)
                        && a.contains(i_star2)
                        && runs_in(p, a) <= runs_in(q, a)
                }))
            .then_some(Relation::Greater)
        }
        _ => unreachable!("property index out of range"),
    }
}

/// at least one alarm of `p` lies entirely inside `a`
fn crate_alarm_inside(p: u64, a: &Interval) -> bool {
    let inside = bits_in(p, a);
    if inside == 0 {
        return false;
    }
    // an in-window run is a whole alarm of p iff its boundary neighbours
    // (within the sequence) are 0; equivalently some run of p is contained in a
    let mut m = inside;
    while m != 0 {
        let lo = m.trailing_zeros() as usize + 1;
        let mut hi = lo;
        while hi < a.hi && m >> hi & 1 == 1 {
            hi += 1;
        }
        let left_ok = lo == 1 || p >> (lo - 2) & 1 == 0;
        let right_ok = p >> hi & 1 == 0;
        if left_ok && right_ok {
            return true;
        }
        let width = hi - lo + 1;
        let run_mask = if width == 64 { u64::MAX } else { ((1u64 << width) - 1) << (lo - 1) };
        m &= !run_mask;
    }
    false
}

/// Checks whether `(g, p, q)` satisfies the stated hypotheses of `prop`,
/// returning the expected relation when it does.
pub fn precondition(
    prop: PropertyId,
    g: &BinarySeq,
    p: &BinarySeq,
    q: &BinarySeq,
) -> Option<Relation> {
    assert!(g.len() <= 64, "preconditions use 64-bit masks");
    if g.len() != p.len() || g.len() != q.len() {
        return None;
    }
    let gt = GroundTruth::new(g);
    match prop.family {
        PropertyFamily::Simple => precondition_simple(&gt, prop.index, p.as_mask(), q.as_mask()),
        PropertyFamily::Advanced => {
            let cp = classify_alarms(g, p).expect("equal lengths");
            let cq = classify_alarms(g, q).expect("equal lengths");
            precondition_advanced(&gt, prop.index, p.as_mask(), q.as_mask(), &cp, &cq)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    #[test]
    fn p1_reference_configuration() {
        let r = precondition(
            PropertyId::simple(1),
            &seq("000110011000"),
            &seq("000110001000"),
            &seq("000110000000"),
        );
        assert_eq!(r, Some(Relation::Greater));
    }

    #[test]
    fn p5_reference_configuration() {
        let r = precondition(
            PropertyId::simple(5),
            &seq("000111111000"),
            &seq("110111000000"),
            &seq("011111000000"),
        );
        assert_eq!(r, Some(Relation::Equal));
    }

    #[test]
    fn p5_two_step_instance() {
        let r = precondition(PropertyId::simple(5), &seq("00"), &seq("10"), &seq("01"));
        assert_eq!(r, Some(Relation::Equal));
    }

    #[test]
    fn p8_reference_configuration() {
        let r = precondition(
            PropertyId::simple(8),
            &seq("000111111000"),
            &seq("000110000000"),
            &seq("000011000000"),
        );
        assert_eq!(r, Some(Relation::Greater));
    }

    #[test]
    fn p2_requires_existing_detection() {
        // p misses the window entirely: max over the empty hit set is
        // undefined, so the hypothesis cannot hold
        let r = precondition(PropertyId::simple(2), &seq("0110"), &seq("0000"), &seq("0100"));
        assert_eq!(r, None);
    }

    #[test]
    fn a1_detection_instance() {
        let r = precondition(
            PropertyId::advanced(1),
            &seq("011000"),
            &seq("010000"),
            &seq("000000"),
        );
        assert_eq!(r, Some(Relation::Greater));
    }

    #[test]
    fn a7_rejects_changed_early_alarms() {
        // p merges with a preceding zero-run alarm, creating a new early
        // alarm; the repaired hypothesis EA(p) = EA(q) rejects the case
        let r = precondition(PropertyId::advanced(7), &seq("0110"), &seq("1110"), &seq("1010"));
        assert_eq!(r, None);
    }
}
