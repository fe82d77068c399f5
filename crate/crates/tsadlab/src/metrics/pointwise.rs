//! Point-wise and point-adjusted precision/recall/F1.

use crate::score::{rat_usize, Rat, ScoreValue};
use crate::seq::BinarySeq;
use num_traits::Zero;

pub fn true_positives(g: &BinarySeq, p: &BinarySeq) -> usize {
    (1..=g.len()).filter(|&i| p.get(i) && g.get(i)).count()
}

pub fn false_positives(g: &BinarySeq, p: &BinarySeq) -> usize {
    (1..=g.len()).filter(|&i| p.get(i) && !g.get(i)).count()
}

pub fn precision(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let denom = p.count_ones();
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(Rat::new(true_positives(g, p).into(), denom.into()))
}

pub fn recall(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let denom = g.count_ones();
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(Rat::new(true_positives(g, p).into(), denom.into()))
}

pub fn f1(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let denom = p.count_ones() + g.count_ones();
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(Rat::new((2 * true_positives(g, p)).into(), denom.into()))
}

/// Total length of ground-truth windows touched by at least one prediction.
pub fn adjusted_hit_length(g: &BinarySeq, p: &BinarySeq) -> usize {
    g.runs(true)
        .iter()
        .filter(|w| p.ones_within(**w) > 0)
        .map(|w| w.len())
        .sum()
}

pub fn pa_precision(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let hit = adjusted_hit_length(g, p);
    let denom = false_positives(g, p) + hit;
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(Rat::new(hit.into(), denom.into()))
}

pub fn pa_recall(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let denom = g.count_ones();
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(Rat::new(adjusted_hit_length(g, p).into(), denom.into()))
}

pub fn pa_f1(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let hit = adjusted_hit_length(g, p);
    let denom = rat_usize(hit) + rat_usize(false_positives(g, p)) + rat_usize(g.count_ones());
    if denom.is_zero() {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(rat_usize(2 * hit) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::score::rat;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    #[test]
    fn pointwise_reference_values() {
        assert_eq!(
            precision(&seq("000110011000"), &seq("000110001000")),
            ScoreValue::Exact(rat(1, 1))
        );
        assert_eq!(
            recall(&seq("000111111000"), &seq("000111011000")),
            ScoreValue::Exact(rat(5, 6))
        );
        assert_eq!(
            f1(&seq("000111111000"), &seq("000111000000")),
            ScoreValue::Exact(rat(2, 3))
        );
    }

    #[test]
    fn point_adjusted_reference_values() {
        assert_eq!(
            pa_precision(&seq("000000111000"), &seq("010010010000")),
            ScoreValue::Exact(rat(3, 5))
        );
        assert_eq!(
            pa_recall(&seq("000111111000"), &seq("000111000000")),
            ScoreValue::Exact(rat(1, 1))
        );
        assert_eq!(
            pa_f1(&seq("000000111000"), &seq("001100010000")),
            ScoreValue::Exact(rat(3, 4))
        );
    }

    #[test]
    fn empty_denominators_are_undefined() {
        assert!(precision(&seq("010"), &seq("000")).is_undefined());
        assert!(recall(&seq("000"), &seq("010")).is_undefined());
        assert!(f1(&seq("000"), &seq("000")).is_undefined());
        assert!(pa_precision(&seq("000"), &seq("000")).is_undefined());
        assert!(pa_recall(&seq("000"), &seq("010")).is_undefined());
    }
}
