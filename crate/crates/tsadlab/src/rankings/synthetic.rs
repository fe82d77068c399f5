//! Deterministic synthetic prediction generators: the degradation patterns
//! used to probe ranking disagreement between metrics.

use super::RankError;
use crate::seq::BinarySeq;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A synthetic prediction recipe applied to a ground truth.
#[derive(Clone, Debug, PartialEq)]
pub enum SyntheticSpec {
    /// The ground truth itself.
    Perfect,
    /// The all-zero prediction.
    Empty,
    /// The bitwise complement.
    Inverted,
    /// Every window's onset shifted right by `d`, clipped within the window.
    Delayed(usize),
    /// The first `ceil(fraction * |W|)` steps of every window.
    Truncated(f64),
    /// Every `period`-th in-window position, counted from each onset.
    Oscillating(usize),
    /// The whole ground truth shifted right by `offset` (clipped).
    Shifted(usize),
    /// All windows merged into one alarm spanning first onset to last end.
    MergedAlarms,
    /// The ground truth plus `count` isolated false alarms placed in normal
    /// gaps by a seeded generator.
    ExtraFalseAlarms { count: usize, seed: u64 },
    /// I.i.d. Bernoulli(rate) bits from a seeded generator.
    Random { rate: f64, seed: u64 },
}

impl SyntheticSpec {
    pub fn validate(&self) -> Result<(), RankError> {
        match self {
            SyntheticSpec::Truncated(f) if !(*f > 0.0 && *f <= 1.0) => Err(RankError::BadSpec(
                format!("truncation fraction {f} must lie in (0,1]"),
            )),
            SyntheticSpec::Oscillating(p) if *p < 2 => {
                Err(RankError::BadSpec("oscillation period must be >= 2".into()))
            }
            SyntheticSpec::Random { rate, .. } if !(0.0..=1.0).contains(rate) => {
                Err(RankError::BadSpec(format!("rate {rate} must lie in [0,1]")))
            }
            _ => Ok(()),
        }
    }
}

/// Generates the synthetic prediction; deterministic for fixed `(spec, g)`.
pub fn generate_synthetic(spec: &SyntheticSpec, g: &BinarySeq) -> Result<BinarySeq, RankError> {
    spec.validate()?;
    let n = g.len();
    let windows = g.runs(true);
    let mut bits = vec![false; n];
    match spec {
        SyntheticSpec::Perfect => return Ok(g.clone()),
        SyntheticSpec::Empty => {}
        SyntheticSpec::Inverted => {
            for i in 1..=n {
                bits[i - 1] = !g.get(i);
            }
        }
        SyntheticSpec::Delayed(d) => {
            for w in &windows {
                let onset = (w.lo + d).min(w.hi);
                for i in onset..=w.hi {
                    bits[i - 1] = true;
                }
            }
        }
        SyntheticSpec::Truncated(fraction) => {
            for w in &windows {
                let keep = ((fraction * w.len() as f64).ceil() as usize).clamp(1, w.len());
                for i in w.lo..w.lo + keep {
                    bits[i - 1] = true;
                }
            }
        }
        SyntheticSpec::Oscillating(period) => {
            for w in &windows {
                for i in (w.lo..=w.hi).step_by(*period) {
                    bits[i - 1] = true;
                }
            }
        }
        SyntheticSpec::Shifted(offset) => {
            for i in 1..=n {
                if g.get(i) && i + offset <= n {
                    bits[i + offset - 1] = true;
                }
            }
        }
        SyntheticSpec::MergedAlarms => {
            if let (Some(first), Some(last)) = (windows.first(), windows.last()) {
                for i in first.lo..=last.hi {
                    bits[i - 1] = true;
                }
            }
        }
        SyntheticSpec::ExtraFalseAlarms { count, seed } => {
            for i in 1..=n {
                bits[i - 1] = g.get(i);
            }
            // candidate positions that stay isolated single-point alarms:
            // normal points whose neighbours are normal and unpredicted
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut placed = 0;
            let mut guard = 0;
            while placed < *count && guard < 16 * n {
                guard += 1;
                let i = rng.gen_range(1..=n);
                let left_free = i == 1 || (!g.get(i - 1) && !bits[i - 2]);
                let right_free = i == n || (!g.get(i + 1) && !bits[i]);
                if !g.get(i) && !bits[i - 1] && left_free && right_free {
                    bits[i - 1] = true;
                    placed += 1;
                }
            }
        }
        SyntheticSpec::Random { rate, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            for b in bits.iter_mut() {
                *b = rng.gen_bool(*rate);
            }
        }
    }
    BinarySeq::from_bools(bits).map_err(|e| RankError::BadSpec(e.to_string()))
}

/// The default 16-prediction battery used for ranking-disagreement probes.
pub fn default16_battery(g: &BinarySeq) -> Result<Vec<(String, BinarySeq)>, RankError> {
    let specs: Vec<(&str, SyntheticSpec)> = vec![
        ("perfect", SyntheticSpec::Perfect),
        ("empty", SyntheticSpec::Empty),
        ("inverted", SyntheticSpec::Inverted),
        ("delayed-2", SyntheticSpec::Delayed(2)),
        ("delayed-5", SyntheticSpec::Delayed(5)),
        ("truncated-50", SyntheticSpec::Truncated(0.5)),
        ("truncated-25", SyntheticSpec::Truncated(0.25)),
        ("oscillating-2", SyntheticSpec::Oscillating(2)),
        ("oscillating-3", SyntheticSpec::Oscillating(3)),
        ("shifted-2", SyntheticSpec::Shifted(2)),
        ("shifted-5", SyntheticSpec::Shifted(5)),
        ("merged", SyntheticSpec::MergedAlarms),
        ("extra-fa-1", SyntheticSpec::ExtraFalseAlarms { count: 1, seed: 11 }),
        ("extra-fa-3", SyntheticSpec::ExtraFalseAlarms { count: 3, seed: 12 }),
        ("extra-fa-6", SyntheticSpec::ExtraFalseAlarms { count: 6, seed: 13 }),
        ("random-5", SyntheticSpec::Random { rate: 0.05, seed: 14 }),
    ];
    specs
        .into_iter()
        .map(|(name, spec)| Ok((name.to_string(), generate_synthetic(&spec, g)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    #[test]
    fn reference_patterns() {
        let g = seq("0111100");
        assert_eq!(generate_synthetic(&SyntheticSpec::Perfect, &g).unwrap(), g);
        assert_eq!(
            generate_synthetic(&SyntheticSpec::Delayed(2), &g).unwrap(),
            seq("0001100")
        );
        assert_eq!(
            generate_synthetic(&SyntheticSpec::Oscillating(2), &g).unwrap(),
            seq("0101000")
        );
    }

    #[test]
    fn generation_is_deterministic() {
        let g = seq("00111001100011");
        for spec in [
            SyntheticSpec::ExtraFalseAlarms { count: 3, seed: 7 },
            SyntheticSpec::Random { rate: 0.3, seed: 7 },
        ] {
            let a = generate_synthetic(&spec, &g).unwrap();
            let b = generate_synthetic(&spec, &g).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn battery_has_16_distinct_names() {
        let g = seq("0011100011100000110000111000");
        let battery = default16_battery(&g).unwrap();
        assert_eq!(battery.len(), 16);
        let mut names: Vec<&String> = battery.iter().map(|(n, _)| n).collect();
        names.dedup();
        assert_eq!(names.len(), 16);
    }

    #[test]
    fn extra_false_alarms_stay_isolated() {
        let g = seq("0011100011100000110000111000");
        let p = generate_synthetic(&SyntheticSpec::ExtraFalseAlarms { count: 4, seed: 3 }, &g)
            .unwrap();
        let extra: Vec<_> = p
            .runs(true)
            .into_iter()
            .filter(|a| !g.runs(true).contains(a))
            .collect();
        assert_eq!(extra.len(), 4);
        assert!(extra.iter().all(|a| a.len() == 1));
    }
}
