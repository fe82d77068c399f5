//! Range-based and TimeSeAD-style precision/recall/F1 with the front-biased
//! positional weighting and 1/k cardinality factor used throughout the proofs.
//!
//! The positional conventions follow the reference computations these metrics
//! are checked against: the standalone recalls weight position `pos` (1-based)
//! by `|W| - pos + 2` over the denominator `|W|(|W|+1)/2` and apply no
//! cardinality factor, while the recall component inside the F1 scores weights
//! by `|W| - pos + 1` and multiplies by `1/k` for `k` overlapping alarms.

use crate::score::{harmonic_exact, rat_usize, Rat, ScoreValue};
use crate::seq::{BinarySeq, Interval};
use num_traits::Zero;

fn overlap_count(windows: &[Interval], w: &Interval) -> usize {
    windows.iter().filter(|x| x.intersects(w)).count()
}

fn cardinality_factor(k: usize) -> Rat {
    if k > 1 {
        Rat::new(1.into(), k.into())
    } else {
        Rat::new(1.into(), 1.into())
    }
}

/// Front-biased coverage of `w` by the intersection with `other`:
/// weight `|w| - pos + 1` at 1-based position `pos`, normalized by the full
/// weight sum.
fn omega_front(w: &Interval, other: &Interval) -> Rat {
    let len = w.len();
    let denom = len * (len + 1) / 2;
    let num: usize = match w.intersect(other) {
        Some(iv) => (iv.lo..=iv.hi).map(|i| len - (i - w.lo + 1) + 1).sum(),
        None => 0,
    };
    Rat::new(num.into(), denom.into())
}

/// The recall weighting of the standalone recalls: numerator weight
/// `|w| - pos + 2`, denominator `|w|(|w|+1)/2`.
fn omega_front_shifted(w: &Interval, other: &Interval) -> Rat {
    let len = w.len();
    let denom = len * (len + 1) / 2;
    let num: usize = match w.intersect(other) {
        Some(iv) => (iv.lo..=iv.hi).map(|i| len - (i - w.lo + 1) + 2).sum(),
        None => 0,
    };
    Rat::new(num.into(), denom.into())
}

/// Range-based precision: mean over prediction alarms of the front-biased
/// fraction covered by ground truth, split by `1/k` when one alarm spans `k`
/// ground-truth windows.
pub fn precision(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let alarms = p.runs(true);
    if alarms.is_empty() {
        return ScoreValue::Undefined;
    }
    let windows = g.runs(true);
    let mut total = Rat::zero();
    for a in &alarms {
        let k = overlap_count(&windows, a);
        let mut s = Rat::zero();
        for w in &windows {
            s += omega_front(a, w);
        }
        total += cardinality_factor(k) * s;
    }
    ScoreValue::Exact(total / rat_usize(alarms.len()))
}

/// Range-based recall with existence weight `alpha`.
pub fn recall(g: &BinarySeq, p: &BinarySeq, alpha: f64) -> ScoreValue {
    let windows = g.runs(true);
    if windows.is_empty() {
        return ScoreValue::Undefined;
    }
    let alpha = Rat::from_float(alpha).expect("alphaWeight validated finite");
    let one = Rat::new(1.into(), 1.into());
    let alarms = p.runs(true);
    let mut total = Rat::zero();
    for w in &windows {
        let mut s = Rat::zero();
        let mut hit = false;
        for a in &alarms {
            if w.intersects(a) {
                hit = true;
                s += omega_front_shifted(w, a);
            }
        }
        if hit {
            total += &alpha;
        }
        total += (&one - &alpha) * s;
    }
    ScoreValue::Exact(total / rat_usize(windows.len()))
}

/// The recall component used inside the F1 scores: plain front bias with the
/// cardinality factor.
fn recall_f1_component(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let windows = g.runs(true);
    if windows.is_empty() {
        return ScoreValue::Undefined;
    }
    let alarms = p.runs(true);
    let mut total = Rat::zero();
    for w in &windows {
        let k = overlap_count(&alarms, w);
        let mut s = Rat::zero();
        for a in &alarms {
            s += omega_front(w, a);
        }
        total += cardinality_factor(k) * s;
    }
    ScoreValue::Exact(total / rat_usize(windows.len()))
}

pub fn f1(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    harmonic_exact(&precision(g, p), &recall_f1_component(g, p))
}

/// TimeSeAD-style precision: length-weighted flat overlap with the 1/k
/// cardinality factor.
pub fn timesead_precision(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let alarms = p.runs(true);
    if alarms.is_empty() {
        return ScoreValue::Undefined;
    }
    let windows = g.runs(true);
    let total_len: usize = alarms.iter().map(|a| a.len()).sum();
    let mut total = Rat::zero();
    for a in &alarms {
        let k = overlap_count(&windows, a);
        let overlap: usize = windows
            .iter()
            .filter_map(|w| a.intersect(w))
            .map(|iv| iv.len())
            .sum();
        total += cardinality_factor(k) * rat_usize(overlap);
    }
    ScoreValue::Exact(total / rat_usize(total_len))
}

pub fn timesead_recall(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    recall(g, p, 0.0)
}

pub fn timesead_f1(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    harmonic_exact(&timesead_precision(g, p), &recall_f1_component(g, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::score::rat;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    fn close(v: ScoreValue, expected: f64) {
        let x = v.as_f64();
        assert!((x - expected).abs() < 5e-5, "{x} vs {expected}");
    }

    #[test]
    fn range_reference_values() {
        assert_eq!(
            precision(&seq("000011110000"), &seq("110011000000")),
            ScoreValue::Exact(rat(1, 2))
        );
        close(recall(&seq("111111111111"), &seq("110011111111"), 0.0), 0.8846);
        close(f1(&seq("111111111111"), &seq("100000000000")), 0.2667);
    }

    #[test]
    fn range_proof_fixture_values() {
        let g = seq("111111111111");
        assert_eq!(recall(&g, &seq("100000000000"), 0.0), ScoreValue::Exact(rat(1, 6)));
        close(recall(&g, &seq("100000000001"), 0.0), 0.1923);
        close(recall(&g, &seq("010100000000"), 0.0), 0.2821);
        close(f1(&g, &seq("110011111111")), 0.5488);
        close(f1(&g, &seq("100000000001")), 0.1538);
        close(f1(&g, &seq("010100000000")), 0.2273);
        assert_eq!(
            precision(&seq("000011110000"), &seq("001111000000")),
            ScoreValue::Exact(rat(3, 10))
        );
    }

    #[test]
    fn timesead_reference_values() {
        close(
            timesead_precision(&seq("011111111110"), &seq("000000001011")),
            0.6667,
        );
        close(timesead_recall(&seq("111111111111"), &seq("010100000000")), 0.2821);
        close(timesead_f1(&seq("111111111111"), &seq("100000000001")), 0.1538);
    }

    #[test]
    fn undefined_without_alarms_or_windows() {
        assert!(precision(&seq("0110"), &seq("0000")).is_undefined());
        assert!(recall(&seq("0000"), &seq("0110"), 0.0).is_undefined());
        assert!(timesead_precision(&seq("0110"), &seq("0000")).is_undefined());
    }
}
