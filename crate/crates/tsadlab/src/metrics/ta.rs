//! Time-series aware precision/recall (with the sigmoid slack kernel), the
//! enhanced variants with mutually recursive window filtering, and the
//! time-tolerant pair.

use crate::score::{rat_usize, Rat, ScoreValue};
use crate::seq::{BinarySeq, Interval};
use num_traits::Zero;

/// Sigmoid slack credit at position `j` in `[max W + 1, max W + delta]`.
/// For `delta = 1` the exponent degenerates; the kernel takes its limit
/// value 1 at `j = max W + 1`.
fn slack_kernel(j: usize, w_hi: usize, delta: usize) -> f64 {
    if delta == 1 {
        return 1.0;
    }
    let e = 12.0 * (j as f64 - 2.0 - w_hi as f64) / (delta as f64 - 1.0) - 6.0;
    1.0 / (1.0 + e.exp())
}

/// `O(W, W_p)`: overlap plus sigmoid slack credit for prediction points within
/// `delta` after the window end.
fn overlap_credit(w: &Interval, wp: &Interval, delta: usize) -> f64 {
    let mut s = w.intersect(wp).map_or(0.0, |iv| iv.len() as f64);
    for j in (w.hi + 1)..=(w.hi + delta) {
        if wp.contains(j) {
            s += slack_kernel(j, w.hi, delta);
        }
    }
    s
}

pub fn precision(g: &BinarySeq, p: &BinarySeq, alpha: f64, delta: usize, theta: f64) -> ScoreValue {
    let alarms = p.runs(true);
    if alarms.is_empty() {
        return ScoreValue::Undefined;
    }
    let windows = g.runs(true);
    let mut above = 0usize;
    let mut ratios = 0.0f64;
    for a in &alarms {
        let o: f64 = windows.iter().map(|w| overlap_credit(w, a, delta)).sum();
        let r = o / a.len() as f64;
        if r >= theta {
            above += 1;
        }
        ratios += r;
    }
    let m = alarms.len() as f64;
    ScoreValue::Real(alpha * above as f64 / m + (1.0 - alpha) * ratios / m)
}

pub fn recall(g: &BinarySeq, p: &BinarySeq, alpha: f64, delta: usize, theta: f64) -> ScoreValue {
    let windows = g.runs(true);
    if windows.is_empty() {
        return ScoreValue::Undefined;
    }
    let alarms = p.runs(true);
    let mut above = 0usize;
    let mut ratios = 0.0f64;
    for w in &windows {
        let o: f64 = alarms.iter().map(|a| overlap_credit(w, a, delta)).sum();
        let r = o / w.len() as f64;
        if r >= theta {
            above += 1;
        }
        ratios += r.min(1.0);
    }
    let m = windows.len() as f64;
    ScoreValue::Real(alpha * above as f64 / m + (1.0 - alpha) * ratios / m)
}

/// Resolves the mutually recursive surviving sets of eTaP/eTaR by fixed-point
/// iteration from all windows, alternately dropping below-threshold windows.
fn enhanced_sets(
    g: &BinarySeq,
    p: &BinarySeq,
    theta_p: f64,
    theta_r: f64,
) -> (Vec<Interval>, Vec<Interval>) {
    let tp = Rat::from_float(theta_p).expect("thetaP finite");
    let tr = Rat::from_float(theta_r).expect("thetaR finite");
    let g_windows = g.runs(true);
    let p_windows = p.runs(true);
    let coverage = |w: &Interval, others: &[Interval]| -> Rat {
        let num: usize = others
            .iter()
            .filter_map(|o| w.intersect(o))
            .map(|iv| iv.len())
            .sum();
        Rat::new(num.into(), w.len().into())
    };
    let mut a: Vec<Interval> = g_windows.clone();
    let mut pset: Vec<Interval> = p_windows.clone();
    loop {
        let a2: Vec<Interval> = g_windows
            .iter()
            .filter(|w| coverage(w, &pset) >= tr)
            .copied()
            .collect();
        let p2: Vec<Interval> = p_windows
            .iter()
            .filter(|w| coverage(w, &a2) >= tp)
            .copied()
            .collect();
        if a2 == a && p2 == pset {
            return (a, pset);
        }
        a = a2;
        pset = p2;
    }
}

pub fn enhanced_precision(g: &BinarySeq, p: &BinarySeq, theta_p: f64, theta_r: f64) -> ScoreValue {
    let alarms = p.runs(true);
    if alarms.is_empty() {
        return ScoreValue::Undefined;
    }
    let (a, pset) = enhanced_sets(g, p, theta_p, theta_r);
    let denom: f64 = alarms.iter().map(|w| (w.len() as f64).sqrt()).sum();
    let mut s = 0.0f64;
    for w in &pset {
        let cov: f64 = a
            .iter()
            .filter_map(|wg| w.intersect(wg))
            .map(|iv| iv.len() as f64 / w.len() as f64)
            .sum();
        s += (1.0 + cov) * (w.len() as f64).sqrt() / denom;
    }
    ScoreValue::Real(0.5 * s)
}

pub fn enhanced_recall(g: &BinarySeq, p: &BinarySeq, theta_p: f64, theta_r: f64) -> ScoreValue {
    let windows = g.runs(true);
    if windows.is_empty() {
        return ScoreValue::Undefined;
    }
    let (a, pset) = enhanced_sets(g, p, theta_p, theta_r);
    let mut s = Rat::zero();
    for w in &a {
        let mut cov = Rat::zero();
        for wp in &pset {
            if let Some(iv) = w.intersect(wp) {
                cov += Rat::new(iv.len().into(), w.len().into());
            }
        }
        s += rat_usize(1) + cov;
    }
    ScoreValue::Exact(s / rat_usize(2 * windows.len()))
}

pub fn time_tolerant_precision(g: &BinarySeq, p: &BinarySeq, delta: usize) -> ScoreValue {
    let denom = p.count_ones();
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    let n = g.len();
    let hit = (1..=n)
        .filter(|&i| {
            p.get(i) && {
                let lo = i.saturating_sub(delta).max(1);
                let hi = (i + delta).min(n);
                (lo..=hi).any(|j| g.get(j))
            }
        })
        .count();
    ScoreValue::Exact(Rat::new(hit.into(), denom.into()))
}

pub fn time_tolerant_recall(g: &BinarySeq, p: &BinarySeq, delta: usize) -> ScoreValue {
    let denom = g.count_ones();
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    let n = g.len();
    let hit = (1..=n)
        .filter(|&i| {
            g.get(i) && {
                let lo = i.saturating_sub(delta).max(1);
                let hi = (i + delta).min(n);
                (lo..=hi).any(|j| p.get(j))
            }
        })
        .count();
    ScoreValue::Exact(Rat::new(hit.into(), denom.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::score::rat;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    #[test]
    fn ta_reference_values() {
        let v = precision(&seq("000000111000"), &seq("000100000000"), 0.5, 1, 0.5);
        assert_eq!(v.as_f64(), 0.0);
        let v = recall(&seq("000000111000"), &seq("000100000000"), 0.5, 1, 0.5);
        assert_eq!(v.as_f64(), 0.0);
        let v = precision(&seq("000111111000"), &seq("000110000000"), 0.5, 1, 0.5);
        assert!((v.as_f64() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn slack_gives_full_credit_right_after_window_at_delta_one() {
        // prediction at max W + 1 earns the step value 1
        let v = recall(&seq("100000"), &seq("010000"), 0.5, 1, 0.5);
        assert!((v.as_f64() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn enhanced_reference_values() {
        assert_eq!(enhanced_precision(&seq("11111"), &seq("10000"), 0.5, 0.5).as_f64(), 0.0);
        assert_eq!(
            enhanced_recall(&seq("100000000000"), &seq("100000000000"), 0.5, 0.5),
            ScoreValue::Exact(rat(1, 1))
        );
        let v = enhanced_precision(&seq("11100"), &seq("11100"), 0.5, 0.5);
        assert!((v.as_f64() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn time_tolerant_reference_values() {
        assert_eq!(
            time_tolerant_precision(&seq("000000110000"), &seq("000001010000"), 1),
            ScoreValue::Exact(rat(1, 1))
        );
        assert_eq!(
            time_tolerant_precision(&seq("000000110000"), &seq("000010010000"), 1),
            ScoreValue::Exact(rat(1, 2))
        );
        assert_eq!(
            time_tolerant_recall(&seq("000000111000"), &seq("000001001000"), 1),
            ScoreValue::Exact(rat(1, 1))
        );
    }
}
