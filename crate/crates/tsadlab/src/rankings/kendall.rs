//! Tie-corrected Kendall rank correlation (tau-b) between two ranking tables.

use super::{RankError, RankingTable};
use std::collections::BTreeSet;

/// Kendall tau-b over the rank assignments of two tables covering the same
/// prediction ids. The Undefined bucket of each table counts as one tied
/// group at the bottom. Returns NaN when one side is entirely tied.
pub fn kendall_tau(a: &RankingTable, b: &RankingTable) -> Result<f64, RankError> {
    let ids_a: BTreeSet<&str> = a.ids().into_iter().collect();
    let ids_b: BTreeSet<&str> = b.ids().into_iter().collect();
    if ids_a != ids_b {
        return Err(RankError::IdSetMismatch);
    }
    if ids_a.len() < 2 {
        return Err(RankError::TooFewPredictions);
    }

    let pairs: Vec<(usize, usize)> = ids_a
        .iter()
        .map(|id| (a.rank_of(id).unwrap(), b.rank_of(id).unwrap()))
        .collect();

    let n = pairs.len();
    let mut concordant = 0i64;
    let mut discordant = 0i64;
    let mut ties_a = 0i64;
    let mut ties_b = 0i64;
    for i in 0..n {
        for j in (i + 1)..n {
            let dx = pairs[i].0 as i64 - pairs[j].0 as i64;
            let dy = pairs[i].1 as i64 - pairs[j].1 as i64;
            match (dx.signum(), dy.signum()) {
                (0, 0) => {
                    ties_a += 1;
                    ties_b += 1;
                }
                (0, _) => ties_a += 1,
                (_, 0) => ties_b += 1,
                (sx, sy) if sx == sy => concordant += 1,
                _ => discordant += 1,
            }
        }
    }
    let n0 = (n * (n - 1) / 2) as i64;
    let denom = (((n0 - ties_a) as f64) * ((n0 - ties_b) as f64)).sqrt();
    Ok((concordant - discordant) as f64 / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{MetricDescriptor, MetricId};
    use crate::rankings::{RankEntry, RankingTable};
    use crate::score::{rat_int, ScoreValue};

    fn table(ranks: &[(&str, usize)]) -> RankingTable {
        RankingTable {
            metric: MetricDescriptor::new(MetricId::PointwiseF1),
            entries: ranks
                .iter()
                .map(|(id, r)| RankEntry {
                    id: id.to_string(),
                    score: ScoreValue::Exact(rat_int(-(*r as i64))),
                    rank: *r,
                })
                .collect(),
            undefined: Vec::new(),
        }
    }

    #[test]
    fn identical_rankings_give_one() {
        let t = table(&[("a", 1), ("b", 2), ("c", 3)]);
        assert_eq!(kendall_tau(&t, &t).unwrap(), 1.0);
    }

    #[test]
    fn reversed_rankings_give_minus_one() {
        let t = table(&[("a", 1), ("b", 2), ("c", 3)]);
        let r = table(&[("a", 3), ("b", 2), ("c", 1)]);
        assert_eq!(kendall_tau(&t, &r).unwrap(), -1.0);
    }

    #[test]
    fn one_swap_gives_one_third() {
        let t = table(&[("a", 1), ("b", 2), ("c", 3)]);
        let r = table(&[("a", 1), ("b", 3), ("c", 2)]);
        assert!((kendall_tau(&t, &r).unwrap() - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn symmetry() {
        let t = table(&[("a", 1), ("b", 1), ("c", 3), ("d", 4)]);
        let r = table(&[("a", 2), ("b", 1), ("c", 4), ("d", 3)]);
        let xy = kendall_tau(&t, &r).unwrap();
        let yx = kendall_tau(&r, &t).unwrap();
        assert_eq!(xy, yx);
    }

    #[test]
    fn mismatched_id_sets_error() {
        let t = table(&[("a", 1), ("b", 2)]);
        let r = table(&[("a", 1), ("c", 2)]);
        assert!(kendall_tau(&t, &r).is_err());
    }
}
