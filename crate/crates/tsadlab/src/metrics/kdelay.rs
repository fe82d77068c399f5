//! The k-delay family, temporal distance and average alert delay.

use super::pointwise::false_positives;
use crate::score::{rat_usize, Rat, ScoreValue};
use crate::seq::{BinarySeq, Interval};
use num_traits::Zero;

/// First predicted index inside `w`, if any.
fn first_hit(p: &BinarySeq, w: &Interval) -> Option<usize> {
    (w.lo..=w.hi).find(|&i| p.get(i))
}

/// A window counts when its first hit occurs within `k` steps of its start;
/// the minimum over an empty hit set is +inf, so unhit windows never count.
fn counted_windows(g: &BinarySeq, p: &BinarySeq, k: usize) -> (usize, usize) {
    let mut counted = 0;
    let mut uncounted = 0;
    for w in g.runs(true) {
        match first_hit(p, &w) {
            Some(h) if h <= w.lo + k => counted += w.len(),
            _ => uncounted += w.len(),
        }
    }
    (counted, uncounted)
}

pub fn precision(g: &BinarySeq, p: &BinarySeq, k: usize) -> ScoreValue {
    let (counted, _) = counted_windows(g, p, k);
    let denom = false_positives(g, p) + counted;
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(Rat::new(counted.into(), denom.into()))
}

pub fn recall(g: &BinarySeq, p: &BinarySeq, k: usize) -> ScoreValue {
    let denom = g.count_ones();
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    let (counted, _) = counted_windows(g, p, k);
    ScoreValue::Exact(Rat::new(counted.into(), denom.into()))
}

pub fn f1(g: &BinarySeq, p: &BinarySeq, k: usize) -> ScoreValue {
    let (counted, uncounted) = counted_windows(g, p, k);
    let denom = false_positives(g, p) + 2 * counted + uncounted;
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(Rat::new((2 * counted).into(), denom.into()))
}

/// Temporal distance, exposed as `-TD` so that higher is better. The distance
/// to an empty index set is +inf, giving `NegInf` after negation.
pub fn neg_temporal_distance(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    fn closest_sum(from: &[usize], to: &[usize]) -> Option<usize> {
        if from.is_empty() {
            return Some(0);
        }
        if to.is_empty() {
            return None;
        }
        // both sorted ascending; sweep a pointer for the nearest neighbour
        let mut j = 0;
        let mut total = 0usize;
        for &i in from {
            while j + 1 < to.len() && to[j + 1] <= i {
                j += 1;
            }
            let mut best = i.abs_diff(to[j]);
            if j + 1 < to.len() {
                best = best.min(i.abs_diff(to[j + 1]));
            }
            total += best;
        }
        Some(total)
    }
    let go = g.ones();
    let po = p.ones();
    match (closest_sum(&go, &po), closest_sum(&po, &go)) {
        (Some(a), Some(b)) => ScoreValue::Exact(-rat_usize(a + b)),
        _ => ScoreValue::NegInf,
    }
}

/// Average alert delay over detected windows, exposed as `-AAD`. Undefined
/// when no window is hit (empty mean).
pub fn neg_average_alert_delay(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let mut total = 0usize;
    let mut hits = 0usize;
    for w in g.runs(true) {
        if let Some(h) = first_hit(p, &w) {
            total += h - w.lo;
            hits += 1;
        }
    }
    if hits == 0 {
        return ScoreValue::Undefined;
    }
    let mean = Rat::new(total.into(), hits.into());
    ScoreValue::Exact(if mean.is_zero() { mean } else { -mean })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::score::rat;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    #[test]
    fn kdelay_reference_values() {
        assert_eq!(
            precision(&seq("000111011000"), &seq("000001011000"), 1),
            ScoreValue::Exact(rat(1, 1))
        );
        assert_eq!(
            recall(&seq("000111011000"), &seq("000000011000"), 1),
            ScoreValue::Exact(rat(2, 5))
        );
        assert_eq!(
            f1(&seq("000111011000"), &seq("000000011000"), 1),
            ScoreValue::Exact(rat(4, 7))
        );
    }

    #[test]
    fn temporal_distance_reference_values() {
        assert_eq!(
            neg_temporal_distance(&seq("000111111000"), &seq("000111000000")),
            ScoreValue::Exact(rat(-6, 1))
        );
        assert_eq!(
            neg_temporal_distance(&seq("000111111000"), &seq("000111011000")),
            ScoreValue::Exact(rat(-1, 1))
        );
        let g = seq("010010");
        assert_eq!(neg_temporal_distance(&g, &g), ScoreValue::Exact(rat(0, 1)));
        assert_eq!(
            neg_temporal_distance(&g, &seq("000000")),
            ScoreValue::NegInf
        );
    }

    #[test]
    fn alert_delay_reference_values() {
        assert_eq!(
            neg_average_alert_delay(&seq("000111111000"), &seq("000010000000")),
            ScoreValue::Exact(rat(-1, 1))
        );
        assert_eq!(
            neg_average_alert_delay(&seq("000110011000"), &seq("000110010000")),
            ScoreValue::Exact(rat(0, 1))
        );
        let g = seq("0110");
        assert_eq!(neg_average_alert_delay(&g, &g), ScoreValue::Exact(rat(0, 1)));
        assert!(neg_average_alert_delay(&g, &seq("0000")).is_undefined());
    }
}
