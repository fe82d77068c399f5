//! The LARM and ALARM scores.
//!
//! LARM rewards each detected anomaly window through an alignment term
//! `(α(p_A)+1) / 2^{|I_1(p_A)|}` and charges every normal run 2 per false
//! alarm plus a saturating false-positive penalty β. ALARM replaces the flat
//! false-alarm charge with the DA/TA/EA/LA classification, weighing early
//! alarms 3/2, late alarms 1/2 and true false alarms 1, scaled by the
//! reciprocal alarm tolerance `1/t`.

use crate::classify::classify_alarms;
use crate::score::{dyadic, rat_int, rat_usize, Rat, ScoreValue};
use crate::seq::{BinarySeq, Interval};
use num_traits::{One, Zero};
use std::sync::Arc;

/// Within-window alignment function: maps the window and the prediction
/// restricted to it to a rational in `[0, 1)`.
pub type AlignmentFn = Arc<dyn Fn(&BinarySeq, Interval) -> Rat + Send + Sync>;

/// False-positive saturation function over counts.
pub type SaturationFn = Arc<dyn Fn(usize) -> Rat + Send + Sync>;

/// Default alignment: `α(p_A) = Σ_j p_A(lo+j-1) · 2^{-j}` with `j` the 1-based
/// position inside the window. Early in-window hits dominate later ones.
pub fn default_alignment(p: &BinarySeq, window: Interval) -> Rat {
    let mut s = Rat::zero();
    for j in 1..=window.len() {
        if p.get(window.lo + j - 1) {
            s += dyadic(j);
        }
    }
    s
}

/// Default saturation: `β(0) = 0`, `β(x) = 1 - 1/x` for `x >= 1`.
pub fn default_saturation(x: usize) -> Rat {
    if x == 0 {
        Rat::zero()
    } else {
        Rat::one() - Rat::new(1.into(), x.into())
    }
}

/// Configuration for the LARM/ALARM scores.
#[derive(Clone)]
pub struct LarmConfig {
    pub alpha: AlignmentFn,
    pub beta: SaturationFn,
    /// Alarm tolerance (ALARM only): how many false alarms one detected
    /// anomaly compensates for.
    pub tolerance: u32,
}

impl Default for LarmConfig {
    fn default() -> Self {
        LarmConfig {
            alpha: Arc::new(default_alignment),
            beta: Arc::new(default_saturation),
            tolerance: 2,
        }
    }
}

impl LarmConfig {
    pub fn with_tolerance(mut self, t: u32) -> Self {
        self.tolerance = t;
        self
    }
}

fn alignment_term(cfg: &LarmConfig, p: &BinarySeq, window: Interval) -> Option<Rat> {
    let alarms_inside = p.runs_within(window).len();
    if alarms_inside == 0 {
        return None;
    }
    let a = (cfg.alpha)(p, window);
    Some((a + Rat::one()) * dyadic(alarms_inside))
}

/// LARM. Undefined when `g` has no anomaly window.
pub fn larm(cfg: &LarmConfig, g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let windows = g.runs(true);
    if windows.is_empty() {
        return ScoreValue::Undefined;
    }
    let mut s = Rat::zero();
    for w in &windows {
        if let Some(t) = alignment_term(cfg, p, *w) {
            s += t;
        }
    }
    s /= rat_usize(windows.len());
    for n in g.runs(false) {
        let false_alarms = p.runs_within(n).len();
        s -= rat_int(2) * rat_usize(false_alarms);
        s -= (cfg.beta)(p.ones_within(n));
    }
    ScoreValue::Exact(s)
}

/// ALARM. The averaged alignment term is 0 when no anomaly is detected.
pub fn alarm(cfg: &LarmConfig, g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let c = classify_alarms(g, p).expect("lengths checked by caller");
    let mut s = rat_usize(c.detected.len());
    if !c.detected.is_empty() {
        let mut align = Rat::zero();
        for w in &c.detected {
            // a detected anomaly is intersected by some alarm, but need not
            // contain one that starts inside it; an empty restriction
            // contributes nothing
            if let Some(t) = alignment_term(cfg, p, *w) {
                align += t;
            }
        }
        s += align / rat_usize(c.detected.len());
    }
    let fp_total = (1..=g.len()).filter(|&i| p.get(i) && !g.get(i)).count();
    s -= (cfg.beta)(fp_total);
    let alarm_penalty = rat_usize(2 * c.true_false.len())
        + rat_int(3) * rat_usize(c.early.len())
        + rat_usize(c.late.len());
    s -= alarm_penalty / (rat_int(2) * rat_int(cfg.tolerance as i64));
    ScoreValue::Exact(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::score::rat;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    fn cfg() -> LarmConfig {
        LarmConfig::default()
    }

    #[test]
    fn larm_reference_values() {
        assert_eq!(
            larm(&cfg(), &seq("0110"), &seq("0110")),
            ScoreValue::Exact(rat(7, 8))
        );
        assert_eq!(
            larm(&cfg(), &seq("011000"), &seq("010010")),
            ScoreValue::Exact(rat(-5, 4))
        );
        assert_eq!(
            larm(&cfg(), &seq("0110"), &seq("0000")),
            ScoreValue::Exact(rat(0, 1))
        );
        assert!(larm(&cfg(), &seq("0000"), &seq("0110")).is_undefined());
    }

    #[test]
    fn alarm_reference_values() {
        assert_eq!(
            alarm(&cfg(), &seq("0110"), &seq("0110")),
            ScoreValue::Exact(rat(15, 8))
        );
        assert_eq!(
            alarm(&cfg(), &seq("011000"), &seq("000010")),
            ScoreValue::Exact(rat(-1, 2))
        );
        assert_eq!(
            alarm(&cfg(), &seq("011000"), &seq("000000")),
            ScoreValue::Exact(rat(0, 1))
        );
    }

    #[test]
    fn alignment_prefers_early_hits_and_more_hits() {
        let w = Interval::new(1, 4);
        let early = default_alignment(&seq("1000"), w);
        let late = default_alignment(&seq("0001"), w);
        assert!(early > late);
        let more = default_alignment(&seq("1001"), w);
        assert!(more > early);
        // codomain [0, 1)
        assert!(default_alignment(&seq("1111"), w) < Rat::one());
    }

    #[test]
    fn saturation_is_monotone_below_one() {
        let mut prev = default_saturation(0);
        assert!(prev.is_zero());
        for x in 1..200usize {
            let b = default_saturation(x);
            assert!(b >= prev && b < Rat::one());
            prev = b;
        }
    }
}
