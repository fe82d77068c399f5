//! Alarm classification of a prediction against a ground truth.
//!
//! Four classes are distinguished:
//! * detected anomalies (`DA`): ground-truth alarms reached by a prediction
//!   alarm that starts inside them or whose lead-in covers only normal steps;
//! * early alarms (`EA`): restrictions of prediction alarms to a 0→1 junction
//!   of the ground truth that cover both a normal and an anomalous step;
//! * late alarms (`LA`): the symmetric notion on 1→0 junctions;
//! * true false alarms (`TA`): prediction alarms entirely on normal steps that
//!   are not contained in an early or late alarm.
//!
//! A prediction alarm that spans a whole anomaly (starts before it, ends after
//! it) contributes one early and one late alarm through its two junction
//! restrictions; no merging rule is applied.

use crate::seq::{BinarySeq, Interval, SeqError};

/// The DA/TA/EA/LA classification of a prediction `p` against a ground truth `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlarmClassification {
    /// Detected ground-truth anomalies, a subset of `I_1(g)`.
    pub detected: Vec<Interval>,
    /// True false alarms, a subset of `I_1(p)`.
    pub true_false: Vec<Interval>,
    /// Early alarms (restrictions of prediction alarms to 0→1 junctions).
    pub early: Vec<Interval>,
    /// Late alarms (restrictions of prediction alarms to 1→0 junctions).
    pub late: Vec<Interval>,
}

fn surjective_onto_both(g: &BinarySeq, iv: Interval) -> bool {
    let mut saw0 = false;
    let mut saw1 = false;
    for i in iv.lo..=iv.hi {
        if g.get(i) {
            saw1 = true;
        } else {
            saw0 = true;
        }
        if saw0 && saw1 {
            return true;
        }
    }
    false
}

/// Computes the DA/TA/EA/LA classification, literally from the junction-run
/// definitions.
pub fn classify_alarms(g: &BinarySeq, p: &BinarySeq) -> Result<AlarmClassification, SeqError> {
    g.check_same_len(p)?;

    let g_ones = g.runs(true);
    let p_alarms = p.runs(true);

    let mut early = Vec::new();
    for junction in g.junction_runs(false, true) {
        for a in p.runs_within(junction) {
            if surjective_onto_both(g, a) {
                early.push(a);
            }
        }
    }

    let mut late = Vec::new();
    for junction in g.junction_runs(true, false) {
        for a in p.runs_within(junction) {
            if surjective_onto_both(g, a) {
                late.push(a);
            }
        }
    }

    let mut true_false = Vec::new();
    for a in &p_alarms {
        let on_zeros = (a.lo..=a.hi).all(|i| !g.get(i));
        if on_zeros
            && !early.iter().chain(late.iter()).any(|o| o.contains_interval(a))
        {
            true_false.push(*a);
        }
    }

    let mut detected = Vec::new();
    for w in &g_ones {
        let hit = p_alarms.iter().any(|a| {
            if !a.intersects(w) {
                return false;
            }
            if w.contains(a.lo) {
                return true;
            }
            // lead-in [min A_s, min A) covers only normal steps; the empty
            // range (a.lo == w.lo) is vacuously all-zero
            (a.lo..w.lo).all(|i| !g.get(i))
        });
        if hit {
            detected.push(*w);
        }
    }

    Ok(AlarmClassification {
        detected,
        true_false,
        early,
        late,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    fn ivs(pairs: &[(usize, usize)]) -> Vec<Interval> {
        pairs.iter().map(|&(a, b)| Interval::new(a, b)).collect()
    }

    #[test]
    fn spanning_alarm_yields_detection_plus_early_and_late() {
        // The alarm [3,6] starts inside [2,3] (detected), persists past its
        // end (late alarm [3,5] on the 1→0 junction [2,5]) and reaches into
        // [6,7] through normal steps (early alarm [4,6] on the 0→1 junction
        // [4,7]); [6,7] itself stays undetected because the lead-in [3,5]
        // touches the first anomaly.
        let c = classify_alarms(&seq("0110011"), &seq("0011110")).unwrap();
        assert_eq!(c.detected, ivs(&[(2, 3)]));
        assert_eq!(c.early, ivs(&[(4, 6)]));
        assert_eq!(c.late, ivs(&[(3, 5)]));
        assert!(c.true_false.is_empty());
    }

    #[test]
    fn isolated_false_alarm() {
        let c = classify_alarms(&seq("011000"), &seq("000010")).unwrap();
        assert!(c.detected.is_empty());
        assert_eq!(c.true_false, ivs(&[(5, 5)]));
        assert!(c.early.is_empty());
        assert!(c.late.is_empty());
    }

    #[test]
    fn all_zero_prediction_is_empty_everywhere() {
        let c = classify_alarms(&seq("0000"), &seq("0000")).unwrap();
        assert!(c.detected.is_empty() && c.true_false.is_empty());
        assert!(c.early.is_empty() && c.late.is_empty());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(classify_alarms(&seq("01"), &seq("010")).is_err());
    }

    #[test]
    fn perfect_prediction_detects_everything_exhaustive_n10() {
        for n in 1..=10usize {
            for mask in 0..(1u64 << n) {
                let g = BinarySeq::from_mask(mask, n).unwrap();
                let c = classify_alarms(&g, &g).unwrap();
                assert_eq!(c.detected, g.runs(true));
                assert!(c.true_false.is_empty());
                assert!(c.early.is_empty());
                assert!(c.late.is_empty());
            }
        }
    }

    #[test]
    fn all_zero_prediction_empty_exhaustive_n10() {
        for n in 1..=10usize {
            let p = BinarySeq::zeros(n).unwrap();
            for mask in 0..(1u64 << n) {
                let g = BinarySeq::from_mask(mask, n).unwrap();
                let c = classify_alarms(&g, &p).unwrap();
                assert!(c.detected.is_empty());
                assert!(c.true_false.is_empty());
                assert!(c.early.is_empty());
                assert!(c.late.is_empty());
            }
        }
    }
}
