//! The NAB score: sigmoid-positioned credit for first hits, sigmoid-decayed
//! penalties for false positives after the first anomaly, flat penalties
//! before it, and the 0–100 normalization between the all-zero and perfect
//! predictions.

use crate::score::ScoreValue;
use crate::seq::BinarySeq;

fn scaled_sigmoid(y: f64) -> f64 {
    2.0 / (1.0 + y.exp()) - 1.0
}

/// Raw `s_NAB`.
pub fn raw(g: &BinarySeq, p: &BinarySeq, a_tp: f64, a_fp: f64, a_fn: f64) -> ScoreValue {
    let windows = g.runs(true);
    let mut s = 0.0f64;

    for w in &windows {
        match (w.lo..=w.hi).find(|&i| p.get(i)) {
            Some(h) => {
                // first-hit credit; a hit at the window start earns the full
                // sigmoid plateau (exponent 5(h - hi - 1))
                s += a_tp * scaled_sigmoid(5.0 * (h as f64 - w.hi as f64 - 1.0));
            }
            None => s += a_fn,
        }
    }

    match windows.first() {
        Some(first) => {
            let first_anomaly = first.lo;
            for i in 1..=g.len() {
                if p.get(i) && !g.get(i) {
                    if i < first_anomaly {
                        s -= a_fp;
                    } else {
                        // distance to the closest preceding window end
                        let d = windows
                            .iter()
                            .filter(|w| w.hi < i)
                            .map(|w| i - w.hi)
                            .min()
                            .expect("a window ends before any FP after the first anomaly");
                        s += a_fp * scaled_sigmoid(5.0 * d as f64);
                    }
                }
            }
        }
        None => {
            // anomaly-free ground truth: every false positive takes the flat
            // penalty
            s -= a_fp * p.count_ones() as f64;
        }
    }

    ScoreValue::Real(s)
}

/// `100 (s(g,p) - s(g,0)) / (s(g,g) - s(g,0))`; Undefined when the perfect and
/// all-zero baselines coincide.
pub fn normalized(g: &BinarySeq, p: &BinarySeq, a_tp: f64, a_fp: f64, a_fn: f64) -> ScoreValue {
    let zero = BinarySeq::zeros(g.len()).expect("g non-empty");
    let base = raw(g, &zero, a_tp, a_fp, a_fn).as_f64();
    let perfect = raw(g, g, a_tp, a_fp, a_fn).as_f64();
    if perfect == base {
        return ScoreValue::Undefined;
    }
    let s = raw(g, p, a_tp, a_fp, a_fn).as_f64();
    ScoreValue::Real(100.0 * (s - base) / (perfect - base))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    #[test]
    fn raw_reference_values() {
        let v = raw(&seq("000111111000"), &seq("000111011000"), 1.0, 0.11, -1.0).as_f64();
        let expected = 2.0 / (1.0 + (-30.0f64).exp()) - 1.0;
        assert!((v - expected).abs() < 1e-12, "{v} vs {expected}");

        let v = raw(&seq("000110000000"), &seq("000001000000"), 1.0, 0.11, -1.0).as_f64();
        let expected = -1.0 + 0.11 * (2.0 / (1.0 + 5.0f64.exp()) - 1.0);
        assert!((v - expected).abs() < 1e-12, "{v} vs {expected}");
    }

    #[test]
    fn normalization_endpoints() {
        let g = seq("000110000000");
        assert!((normalized(&g, &g, 1.0, 0.11, -1.0).as_f64() - 100.0).abs() < 1e-9);
        let z = seq("000000000000");
        assert!(
            (normalized(&g, &z, 1.0, 0.11, -1.0).as_f64()).abs() < 1e-9,
            "all-zero prediction normalizes to 0"
        );
        // anomaly-free ground truth: baselines coincide
        assert!(normalized(&z, &g, 1.0, 0.11, -1.0).is_undefined());
    }

    #[test]
    fn flat_penalty_before_first_anomaly() {
        // FP at index 1 sits before the first anomaly
        let v = raw(&seq("000110"), &seq("100000"), 1.0, 0.11, -1.0).as_f64();
        assert!((v - (-1.0 - 0.11)).abs() < 1e-12);
    }
}
