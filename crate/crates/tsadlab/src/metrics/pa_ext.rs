//! Point-adjustment variants: PA%K (plus its exact integral), decayed PA,
//! reduced-length, balanced PA, and the latency/sparsity-aware F1.

use super::pointwise::false_positives;
use crate::score::{rat_usize, Rat, ScoreValue};
use crate::seq::BinarySeq;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// F1 where a window is fully credited only when its overlap ratio exceeds `k`;
/// below the threshold its raw overlap counts and the rest turns into misses.
fn pa_percent_k_exact(g: &BinarySeq, p: &BinarySeq, k: &Rat) -> ScoreValue {
    let mut correct = Rat::zero();
    let mut partial_miss = 0usize;
    for w in g.runs(true) {
        let overlap = p.ones_within(w);
        let ratio = Rat::new(overlap.into(), w.len().into());
        if &ratio > k {
            correct += rat_usize(w.len());
        } else {
            correct += rat_usize(overlap);
            partial_miss += w.len() - overlap;
        }
    }
    let denom =
        Rat::from_integer(BigInt::from(2)) * &correct + rat_usize(false_positives(g, p) + partial_miss);
    if denom.is_zero() {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(Rat::from_integer(BigInt::from(2)) * correct / denom)
}

pub fn pa_percent_k(g: &BinarySeq, p: &BinarySeq, k_percent: f64) -> ScoreValue {
    let k = Rat::from_float(k_percent).expect("kPercent validated finite");
    pa_percent_k_exact(g, p, &k)
}

/// Exact integral of `k ↦ F1_PA%k` over `[0,1]`.
///
/// The integrand is piecewise constant with breakpoints at the finitely many
/// overlap ratios, so the integral is a finite sum over those segments; the
/// value on each open segment is evaluated at its midpoint.
pub fn pa_percent_k_integrated(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let mut breakpoints: Vec<Rat> = vec![Rat::zero(), Rat::one()];
    for w in g.runs(true) {
        let r = Rat::new(p.ones_within(w).into(), w.len().into());
        breakpoints.push(r);
    }
    breakpoints.sort();
    breakpoints.dedup();

    let mut total = Rat::zero();
    for pair in breakpoints.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        if b <= a {
            continue;
        }
        let mid = (a + b) / Rat::from_integer(BigInt::from(2));
        match pa_percent_k_exact(g, p, &mid) {
            ScoreValue::Exact(v) => total += (b - a) * v,
            other => return other,
        }
    }
    ScoreValue::Exact(total)
}

/// Point-adjusted F1 with decay `d^(first hit - window start)` on the credit.
pub fn pa_decay(g: &BinarySeq, p: &BinarySeq, d: f64) -> ScoreValue {
    let mut credit = 0.0f64;
    let mut hit_len = 0usize;
    let mut missed_len = 0usize;
    for w in g.runs(true) {
        match (w.lo..=w.hi).find(|&i| p.get(i)) {
            Some(h) => {
                credit += d.powi((h - w.lo) as i32) * w.len() as f64;
                hit_len += w.len();
            }
            None => missed_len += w.len(),
        }
    }
    let denom = (2 * hit_len + false_positives(g, p) + missed_len) as f64;
    if denom == 0.0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Real(2.0 * credit / denom)
}

/// F1 with window lengths replaced by `ln |W|` (a single-point window carries
/// zero weight).
pub fn reduced_length_f1(g: &BinarySeq, p: &BinarySeq) -> ScoreValue {
    let mut hit = 0.0f64;
    let mut missed = 0.0f64;
    for w in g.runs(true) {
        let weight = (w.len() as f64).ln();
        if p.ones_within(w) > 0 {
            hit += weight;
        } else {
            missed += weight;
        }
    }
    let denom = 2.0 * hit + false_positives(g, p) as f64 + missed;
    if denom == 0.0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Real(2.0 * hit / denom)
}

/// Balanced point-adjusted F1 with the symmetric neighbourhood `[i-B, i+B]`.
///
/// A point of a missed window is credited when any predicted point lies within
/// the radius; unpredicted normal points near a prediction count as extra
/// false positives.
pub fn balanced_pa_f1(g: &BinarySeq, p: &BinarySeq, radius: usize) -> ScoreValue {
    let n = g.len();
    let near = |i: usize| -> bool {
        let lo = i.saturating_sub(radius).max(1);
        let hi = (i + radius).min(n);
        (lo..=hi).any(|j| p.get(j))
    };
    let mut tp = 0usize;
    let mut fn_count = 0usize;
    for w in g.runs(true) {
        if p.ones_within(w) > 0 {
            tp += w.len();
        } else {
            for i in w.lo..=w.hi {
                if near(i) {
                    tp += 1;
                } else {
                    fn_count += 1;
                }
            }
        }
    }
    let mut fp = false_positives(g, p);
    for i in 1..=n {
        if !p.get(i) && !g.get(i) && near(i) {
            fp += 1;
        }
    }
    let denom = 2 * tp + fp + fn_count;
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(Rat::new((2 * tp).into(), denom.into()))
}

/// Latency- and sparsity-aware F1: the sequences are downsampled into blocks of
/// size `b` (block label = max over the block), then within every anomalous
/// block run a block is credited once any prediction occurred from the run's
/// start through that block; plain point-wise F1 is taken over the block domain.
pub fn lsa_f1(g: &BinarySeq, p: &BinarySeq, b: usize) -> ScoreValue {
    let n = g.len();
    let nb = n.div_ceil(b);
    let block_max = |s: &BinarySeq, k: usize| -> bool {
        let lo = (k - 1) * b + 1;
        let hi = (k * b).min(n);
        (lo..=hi).any(|i| s.get(i))
    };
    let gb: Vec<bool> = (1..=nb).map(|k| block_max(g, k)).collect();
    let pb: Vec<bool> = (1..=nb).map(|k| block_max(p, k)).collect();

    let gb_seq = BinarySeq::from_bools(gb.clone()).expect("non-empty by construction");
    let mut padj = pb.clone();
    for w in gb_seq.runs(true) {
        for k in w.lo..=w.hi {
            padj[k - 1] = (w.lo..=k).any(|j| pb[j - 1]);
        }
    }

    let mut tp = 0usize;
    let mut fp = 0usize;
    let mut fn_count = 0usize;
    for k in 0..nb {
        match (gb[k], padj[k]) {
            (true, true) => tp += 1,
            (false, true) => fp += 1,
            (true, false) => fn_count += 1,
            (false, false) => {}
        }
    }
    let denom = 2 * tp + fp + fn_count;
    if denom == 0 {
        return ScoreValue::Undefined;
    }
    ScoreValue::Exact(Rat::new((2 * tp).into(), denom.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::score::rat;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    #[test]
    fn pa_percent_k_reference_values() {
        assert_eq!(
            pa_percent_k(&seq("000000111000"), &seq("000000100000"), 0.4),
            ScoreValue::Exact(rat(1, 2))
        );
        assert_eq!(
            pa_percent_k_integrated(&seq("000000111000"), &seq("000000100000")),
            ScoreValue::Exact(rat(2, 3))
        );
    }

    #[test]
    fn pa_decay_reference_value() {
        let v = pa_decay(&seq("001111111111"), &seq("000000000001"), 0.9);
        match v {
            ScoreValue::Real(x) => assert!((x - 0.9f64.powi(9)).abs() < 1e-15),
            other => panic!("expected real value, got {other:?}"),
        }
    }

    #[test]
    fn reduced_length_reference_value() {
        let v = reduced_length_f1(&seq("000000111000"), &seq("010010010000"));
        let expected = 3f64.ln() / (1.0 + 3f64.ln());
        match v {
            ScoreValue::Real(x) => assert!((x - expected).abs() < 1e-15),
            other => panic!("expected real value, got {other:?}"),
        }
    }

    #[test]
    fn balanced_pa_reference_value() {
        assert_eq!(
            balanced_pa_f1(&seq("000001000111"), &seq("000000000010"), 1),
            ScoreValue::Exact(rat(6, 7))
        );
        // near-credit for a missed window plus the extra neighbourhood FPs
        assert_eq!(
            balanced_pa_f1(&seq("000000100000"), &seq("000011000000"), 1),
            ScoreValue::Exact(rat(2, 5))
        );
    }

    #[test]
    fn lsa_reference_values() {
        assert_eq!(
            lsa_f1(&seq("111111000000"), &seq("000100000000"), 3),
            ScoreValue::Exact(rat(2, 3))
        );
        assert_eq!(
            lsa_f1(&seq("111111000000"), &seq("100000100000"), 3),
            ScoreValue::Exact(rat(4, 5))
        );
    }

    #[test]
    fn integrated_matches_quadrature() {
        // trapezoid quadrature over a fine grid agrees with the exact
        // breakpoint sum
        let g = seq("001110100110");
        let p = seq("010100101010");
        let exact = match pa_percent_k_integrated(&g, &p) {
            ScoreValue::Exact(v) => crate::score::ScoreValue::Exact(v).as_f64(),
            other => panic!("unexpected {other:?}"),
        };
        let samples = 100_000;
        let mut acc = 0.0f64;
        for i in 0..samples {
            let k0 = i as f64 / samples as f64;
            let k1 = (i + 1) as f64 / samples as f64;
            let f0 = pa_percent_k(&g, &p, k0).as_f64();
            let f1v = pa_percent_k(&g, &p, k1).as_f64();
            acc += 0.5 * (f0 + f1v) * (k1 - k0);
        }
        assert!((acc - exact).abs() < 1e-4, "quadrature {acc} vs exact {exact}");
    }
}
