//! Affiliation metrics: zone-normalized distance probabilities.
//!
//! The domain is partitioned into affiliation zones, one per ground-truth
//! window; a point equidistant between two windows is assigned to the earlier
//! one. Precision averages over predicted points in each zone their distance
//! penalty towards the zone's window; recall averages over anomaly points
//! their distance towards the zone's false-positive predictions — a window
//! whose zone holds no prediction outside the window itself contributes -inf.

use crate::score::{harmonic_exact, rat_usize, Rat, ScoreValue};
use crate::seq::{BinarySeq, Interval};
use num_traits::{One, Zero};

fn dist_to_interval(i: usize, w: &Interval) -> usize {
    if w.contains(i) {
        0
    } else if i < w.lo {
        w.lo - i
    } else {
        i - w.hi
    }
}

/// Affiliation zones: `(window, zone)` pairs covering `[1, n]`. Boundary ties
/// between two windows go to the earlier window.
pub fn zones(g: &BinarySeq) -> Vec<(Interval, Interval)> {
    let windows = g.runs(true);
    let n = g.len();
    let mut out = Vec::with_capacity(windows.len());
    for (idx, w) in windows.iter().enumerate() {
        let lo = if idx == 0 { 1 } else { out.last().map(|(_, z): &(Interval, Interval)| z.hi + 1).unwrap() };
        let hi = if idx + 1 == windows.len() {
            n
        } else {
            let next = &windows[idx + 1];
            // last index at least as close to w as to the next window
            let mut hi = w.hi;
            let mut i = w.hi + 1;
            while i < next.lo {
                if i - w.hi <= next.lo - i {
                    hi = i;
                    i += 1;
                } else {
                    break;
                }
            }
            hi
        };
        out.push((*w, Interval::new(lo, hi)));
    }
    out
}

pub fn precision(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    if g.count_ones() == 0 || p.count_ones() == 0 {
        return ScoreValue::Undefined;
    }
    let mut total = Rat::zero();
    let mut active = 0usize;
    for (w, z) in zones(g) {
        let preds: Vec<usize> = (z.lo..=z.hi).filter(|&i| p.get(i)).collect();
        if preds.is_empty() {
            continue;
        }
        active += 1;
        let border_room = (w.lo - z.lo).min(z.hi - w.hi);
        let zone_len = rat_usize(z.len());
        let mut s = Rat::zero();
        for i in &preds {
            let d = dist_to_interval(*i, &w);
            let penalty = rat_usize(w.len() + d.min(border_room) + d);
            s += Rat::one() - penalty / &zone_len;
        }
        total += s / rat_usize(preds.len());
    }
    ScoreValue::Exact(total / rat_usize(active))
}

pub fn recall(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    if g.count_ones() == 0 {
        return ScoreValue::Undefined;
    }
    let zs = zones(g);
    let mut total = Rat::zero();
    for (w, z) in &zs {
        // predictions affiliated with the window but outside it
        let zone_fps: Vec<usize> = (z.lo..=z.hi)
            .filter(|&i| p.get(i) && !w.contains(i))
            .collect();
        if zone_fps.is_empty() {
            return ScoreValue::NegInf;
        }
        let zone_len = rat_usize(z.len());
        let mut s = Rat::zero();
        for i in w.lo..=w.hi {
            let d = zone_fps.iter().map(|&j| i.abs_diff(j)).min().unwrap();
            let b = (i - z.lo).min(z.hi - i);
            s += Rat::one() - rat_usize(d.min(b) + d) / &zone_len;
        }
        total += s / rat_usize(w.len());
    }
    ScoreValue::Exact(total / rat_usize(zs.len()))
}

pub fn f1(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    harmonic_exact(&precision(g, p), &recall(g, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::score::rat;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    #[test]
    fn reference_values() {
        let g = seq("000000111000");
        let p = seq("010000100000");
        assert_eq!(precision(&g, &p), ScoreValue::Exact(rat(5, 12)));
        assert_eq!(recall(&g, &p), ScoreValue::Exact(rat(1, 6)));
        assert_eq!(f1(&g, &p), ScoreValue::Exact(rat(5, 21)));
        let q = seq("000010100000");
        assert_eq!(precision(&g, &q), ScoreValue::Exact(rat(7, 12)));
        assert_eq!(recall(&g, &q), ScoreValue::Exact(rat(19, 36)));
    }

    #[test]
    fn recall_distance_fixture() {
        let g = seq("000000010000");
        assert_eq!(recall(&g, &seq("000100000000")), ScoreValue::Exact(rat(1, 3)));
        assert_eq!(recall(&g, &seq("000010000000")), ScoreValue::Exact(rat(1, 2)));
    }

    #[test]
    fn zone_ties_go_to_the_earlier_window() {
        // windows at 2 and 9; the midpoint 5.5 is not integral, zones meet at 5|6;
        // windows at 2 and 8 tie exactly at 5, which joins the earlier zone
        let zs = zones(&seq("010000010"));
        assert_eq!(zs[0].1, Interval::new(1, 5));
        assert_eq!(zs[1].1, Interval::new(6, 9));
    }

    #[test]
    fn recall_without_zone_predictions_is_neg_inf() {
        let g = seq("0110");
        assert_eq!(recall(&g, &g), ScoreValue::NegInf);
        assert!(precision(&g, &seq("0000")).is_undefined());
    }

    #[test]
    fn precision_trust_fixture() {
        let g = seq("000111111000");
        assert_eq!(precision(&g, &seq("100000001000")), ScoreValue::Exact(rat(1, 4)));
        assert_eq!(precision(&g, &seq("100111100010")), ScoreValue::Exact(rat(13, 36)));
    }
}
