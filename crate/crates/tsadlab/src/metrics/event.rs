//! Event-wise precision/recall/F1 and the composite F1 score.

use super::pointwise;
use crate::score::{harmonic_exact, Rat, ScoreValue};
use crate::seq::BinarySeq;

/// (#hit windows, #prediction alarms disjoint from g, #missed windows)
pub fn event_counts(g: &BinarySeq, p: &BinarySeq) -> (usize, usize, usize) {
    let windows = g.runs(true);
    let hit = windows.iter().filter(|w| p.ones_within(**w) > 0).count();
    let false_alarms = p
        .runs(true)
        .iter()
        .filter(|a| (a.lo..=a.hi).all(|i| !g.get(i)))
        .count();
    (hit, false_alarms, windows.len() - hit)
}

pub fn precision(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let (hit, fa, _) = event_counts(g, p);
    if hit + fa == 0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(Rat::new(hit.into(), (hit + fa).into()))
}

pub fn recall(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let windows = g.runs(true).len();
    if windows == 0 {
        return ScoreValue::Undefined;
    }
    let (hit, _, _) = event_counts(g, p);
    ScoreValue::Exact(Rat::new(hit.into(), windows.into()))
}

pub fn f1(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let (hit, fa, missed) = event_counts(g, p);
    let denom = 2 * hit + fa + missed;
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(Rat::new((2 * hit).into(), denom.into()))
}

/// Harmonic mean of point-wise precision and event-wise recall.
pub fn composite_f1(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    harmonic_exact(&pointwise::precision(g, p), &recall(g, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::score::rat;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    #[test]
    fn event_reference_values() {
        assert_eq!(
            precision(&seq("000111111000"), &seq("110111000000")),
            ScoreValue::Exact(rat(1, 2))
        );
        assert_eq!(
            f1(&seq("000111111000"), &seq("010111000000")),
            ScoreValue::Exact(rat(2, 3))
        );
        assert_eq!(
            composite_f1(&seq("000111111000"), &seq("000111011000")),
            ScoreValue::Exact(rat(1, 1))
        );
    }

    #[test]
    fn straddling_alarm_is_not_a_false_alarm() {
        // one alarm crossing from the normal prefix into the window
        let (hit, fa, missed) = event_counts(&seq("000111"), &seq("011100"));
        assert_eq!((hit, fa, missed), (1, 0, 0));
    }

    #[test]
    fn composite_is_undefined_without_predictions() {
        assert!(composite_f1(&seq("010"), &seq("000")).is_undefined());
    }
}
