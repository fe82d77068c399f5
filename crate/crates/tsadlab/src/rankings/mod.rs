//! Ranking a set of predictions under a metric, comparing rankings across
//! metrics with tie-corrected Kendall tau, and the deterministic synthetic
//! prediction battery.

mod kendall;
mod synthetic;

pub use kendall::kendall_tau;
pub use synthetic::{default16_battery, generate_synthetic, SyntheticSpec};

use crate::metrics::{evaluate, MetricDescriptor, MetricError};
use crate::score::ScoreValue;
use crate::seq::BinarySeq;
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RankError {
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error("ranking comparison needs at least 2 predictions")]
    TooFewPredictions,
    #[error("rankings cover different prediction sets")]
    IdSetMismatch,
    #[error("synthetic spec invalid: {0}")]
    BadSpec(String),
}

/// One ranked prediction: id, score, competition rank (ties share a rank, the
/// next rank skips accordingly).
#[derive(Clone, Debug)]
pub struct RankEntry {
    pub id: String,
    pub score: ScoreValue,
    pub rank: usize,
}

/// A ranking of predictions under one metric. Predictions with Undefined
/// scores sit in a separate bucket below every defined score.
#[derive(Clone, Debug)]
pub struct RankingTable {
    pub metric: MetricDescriptor,
    pub entries: Vec<RankEntry>,
    pub undefined: Vec<String>,
}

impl RankingTable {
    /// Competition rank of an id; Undefined-bucket ids share the rank below
    /// the last defined entry.
    pub fn rank_of(&self, id: &str) -> Option<usize> {
        if let Some(e) = self.entries.iter().find(|e| e.id == id) {
            return Some(e.rank);
        }
        self.undefined
            .iter()
            .any(|u| u == id)
            .then(|| self.entries.len() + 1)
    }

    pub fn ids(&self) -> Vec<&str> {
        self.entries
            .iter()
            .map(|e| e.id.as_str())
            .chain(self.undefined.iter().map(|s| s.as_str()))
            .collect()
    }
}

/// Scores every prediction and assembles the ranking table. The result is
/// independent of the input order: entries are sorted by score descending
/// with ties broken by id for display only (tied scores share a rank).
pub fn rank(
    metric: &MetricDescriptor,
    g: &BinarySeq,
    predictions: &[(String, BinarySeq)],
) -> Result<RankingTable, RankError> {
    let mut scored: Vec<(String, ScoreValue)> = Vec::with_capacity(predictions.len());
    let mut undefined: Vec<String> = Vec::new();
    for (id, p) in predictions {
        let v = evaluate(metric, g, p)?.value;
        if v.is_undefined() {
            undefined.push(id.clone());
        } else {
            scored.push((id.clone(), v));
        }
    }
    scored.sort_by(|a, b| {
        b.1.cmp_defined(&a.1)
            .expect("undefined scores were bucketed")
            .then_with(|| a.0.cmp(&b.0))
    });
    undefined.sort();

    let mut entries: Vec<RankEntry> = Vec::with_capacity(scored.len());
    for (idx, (id, score)) in scored.into_iter().enumerate() {
        let rank = match entries.last() {
            Some(prev)
                if prev
                    .score
                    .cmp_defined(&score)
                    .expect("defined scores")
                    == Ordering::Equal =>
            {
                prev.rank
            }
            _ => idx + 1,
        };
        entries.push(RankEntry { id, score, rank });
    }
    Ok(RankingTable {
        metric: metric.clone(),
        entries,
        undefined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::MetricId;

    fn seq(s: &str) -> BinarySeq {
        BinarySeq::parse(s).unwrap()
    }

    fn preds(list: &[(&str, &str)]) -> Vec<(String, BinarySeq)> {
        list.iter()
            .map(|(id, s)| (id.to_string(), seq(s)))
            .collect()
    }

    #[test]
    fn larm_orders_perfect_empty_falsealarm() {
        let g = seq("01100110");
        let table = rank(
            &MetricDescriptor::new(MetricId::Larm),
            &g,
            &preds(&[
                ("falsealarm", "01101110"),
                ("perfect", "01100110"),
                ("empty", "00000000"),
            ]),
        )
        .unwrap();
        let order: Vec<&str> = table.entries.iter().map(|e| e.id.as_str()).collect();
        assert_eq!(order, vec!["perfect", "empty", "falsealarm"]);
    }

    #[test]
    fn competition_ranking_skips_after_ties() {
        let g = seq("0110");
        // two identical predictions tie at rank 1, the next gets rank 3
        let table = rank(
            &MetricDescriptor::new(MetricId::PointwiseF1),
            &g,
            &preds(&[("a", "0110"), ("b", "0110"), ("c", "0100")]),
        )
        .unwrap();
        let ranks: Vec<(String, usize)> = table
            .entries
            .iter()
            .map(|e| (e.id.clone(), e.rank))
            .collect();
        assert_eq!(
            ranks,
            vec![
                ("a".to_string(), 1),
                ("b".to_string(), 1),
                ("c".to_string(), 3)
            ]
        );
    }

    #[test]
    fn input_order_does_not_matter() {
        let g = seq("010010");
        let a = rank(
            &MetricDescriptor::new(MetricId::PaF1),
            &g,
            &preds(&[("x", "010000"), ("y", "000010"), ("z", "010010")]),
        )
        .unwrap();
        let b = rank(
            &MetricDescriptor::new(MetricId::PaF1),
            &g,
            &preds(&[("z", "010010"), ("y", "000010"), ("x", "010000")]),
        )
        .unwrap();
        assert_eq!(
            a.entries.iter().map(|e| (&e.id, e.rank)).collect::<Vec<_>>(),
            b.entries.iter().map(|e| (&e.id, e.rank)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn undefined_scores_sit_below_everything() {
        let g = seq("0110");
        let table = rank(
            &MetricDescriptor::new(MetricId::PointwisePrecision),
            &g,
            &preds(&[("empty", "0000"), ("hit", "0100")]),
        )
        .unwrap();
        assert_eq!(table.undefined, vec!["empty".to_string()]);
        assert_eq!(table.rank_of("empty"), Some(2));
        assert_eq!(table.rank_of("hit"), Some(1));
    }
}
