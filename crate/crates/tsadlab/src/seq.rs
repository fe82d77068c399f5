//! Binary sequences over {0,1} and their maximal-interval (alarm) structure.
//!
//! Sequences are 1-indexed: a sequence of length `n` is a map on `{1, ..., n}`.
//! All interval endpoints in this crate are 1-based and inclusive.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("a binary sequence must have length >= 1")]
    Empty,
    #[error("invalid character {0:?} in sequence literal (expected '0' or '1')")]
    BadChar(char),
    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("invalid interval [{lo},{hi}] for length {n}")]
    BadInterval { lo: usize, hi: usize, n: usize },
}

/// A closed integer interval `[lo, hi]`, 1-based inclusive.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(lo >= 1 && lo <= hi);
        Interval { lo, hi }
    }

    /// Number of integer points in the interval.
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false // by construction lo <= hi
    }

    pub fn contains(&self, i: usize) -> bool {
        self.lo <= i && i <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo.max(other.lo) <= self.hi.min(other.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// A finite 1-indexed sequence over {0,1}.
///
/// Immutable after construction; cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinarySeq {
    bits: Vec<bool>,
}

impl BinarySeq {
    pub fn from_bools(bits: Vec<bool>) -> Result<Self, SeqError> {
        if bits.is_empty() {
            return Err(SeqError::Empty);
        }
        Ok(BinarySeq { bits })
    }

    /// Parses a `"0110"`-style literal. Whitespace between characters is ignored.
    pub fn parse(s: &str) -> Result<Self, SeqError> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_whitespace() => {}
                c => return Err(SeqError::BadChar(c)),
            }
        }
        Self::from_bools(bits)
    }

    /// Builds a length-`n` sequence from its 1-based support mask (bit `i-1` of
    /// `mask` set means position `i` is 1). Useful for exhaustive enumeration.
    pub fn from_mask(mask: u64, n: usize) -> Result<Self, SeqError> {
        if n == 0 {
            return Err(SeqError::Empty);
        }
        Ok(BinarySeq {
            bits: (0..n).map(|b| mask >> b & 1 == 1).collect(),
        })
    }

    /// Builds an all-zero sequence of length `n`.
    pub fn zeros(n: usize) -> Result<Self, SeqError> {
        Self::from_bools(vec![false; n])
    }

    /// Builds a sequence that is 1 exactly on the given intervals.
    pub fn from_ones(n: usize, ones: &[Interval]) -> Result<Self, SeqError> {
        let mut bits = vec![false; n];
        for iv in ones {
            if iv.lo < 1 || iv.hi > n || iv.lo > iv.hi {
                return Err(SeqError::BadInterval { lo: iv.lo, hi: iv.hi, n });
            }
            for i in iv.lo..=iv.hi {
                bits[i - 1] = true;
            }
        }
        Self::from_bools(bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Value at 1-based index `i`.
    pub fn get(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    /// 1-based indices carrying a 1, ascending.
    pub fn ones(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.get(i)).collect()
    }

    pub fn as_mask(&self) -> u64 {
        debug_assert!(self.len() <= 64);
        self.bits
            .iter()
            .enumerate()
            .fold(0u64, |m, (b, &v)| if v { m | 1 << b } else { m })
    }

    /// `I_v(s)`: the maximal runs of value `v`, sorted by `lo`, pairwise
    /// disjoint and non-adjacent, covering `s^{-1}(v)` exactly.
    pub fn runs(&self, v: bool) -> Vec<Interval> {
        let mut out = Vec::new();
        let n = self.len();
        let mut i = 1;
        while i <= n {
            if self.get(i) == v {
                let lo = i;
                while i < n && self.get(i + 1) == v {
                    i += 1;
                }
                out.push(Interval::new(lo, i));
            }
            i += 1;
        }
        out
    }

    /// `I_{uv}(s)`: each element is the union of a maximal `u`-run immediately
    /// followed by a maximal `v`-run. Requires `u != v`.
    pub fn junction_runs(&self, u: bool, v: bool) -> Vec<Interval> {
        assert_ne!(u, v, "junction runs need two distinct values");
        let ru = self.runs(u);
        let rv = self.runs(v);
        let mut out = Vec::new();
        let mut j = 0;
        for a in &ru {
            while j < rv.len() && rv[j].lo < a.hi + 1 {
                j += 1;
            }
            if j < rv.len() && rv[j].lo == a.hi + 1 {
                out.push(Interval::new(a.lo, rv[j].hi));
            }
        }
        out
    }

    /// Maximal 1-runs of the restriction `s|_I`, reported in global coordinates.
    pub fn runs_within(&self, window: Interval) -> Vec<Interval> {
        let mut out = Vec::new();
        let mut i = window.lo;
        while i <= window.hi {
            if self.get(i) {
                let lo = i;
                while i < window.hi && self.get(i + 1) {
                    i += 1;
                }
                out.push(Interval::new(lo, i));
            }
            i += 1;
        }
        out
    }

    /// Count of 1s inside `window`.
    pub fn ones_within(&self, window: Interval) -> usize {
        (window.lo..=window.hi).filter(|&i| self.get(i)).count()
    }

    /// The full maximal-interval decomposition plus junction runs.
    pub fn alarm_sets(&self) -> AlarmSets {
        AlarmSets {
            ones: self.runs(true),
            zeros: self.runs(false),
            junctions01: self.junction_runs(false, true),
            junctions10: self.junction_runs(true, false),
        }
    }

    pub fn check_same_len(&self, other: &BinarySeq) -> Result<(), SeqError> {
        if self.len() != other.len() {
            return Err(SeqError::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }
}

impl fmt::Display for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{}", if *b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The maximal-run decomposition `I_0(s)`, `I_1(s)` together with the junction
/// runs `I_{01}(s)`, `I_{10}(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlarmSets {
    pub ones: Vec<Interval>,
    pub zeros: Vec<Interval>,
    pub junctions01: Vec<Interval>,
    pub junctions10: Vec<Interval>,
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
    fn runs_single_block() {
        assert_eq!(seq("000111111000").runs(true), ivs(&[(4, 9)]));
    }

    #[test]
    fn runs_isolated_ones() {
        assert_eq!(seq("010010010000").runs(true), ivs(&[(2, 2), (5, 5), (8, 8)]));
    }

    #[test]
    fn runs_empty() {
        assert!(seq("0000").runs(true).is_empty());
    }

    #[test]
    fn junctions_basic() {
        assert_eq!(seq("001100").junction_runs(false, true), ivs(&[(1, 4)]));
        assert_eq!(seq("001100").junction_runs(true, false), ivs(&[(3, 6)]));
        assert_eq!(seq("111000111").junction_runs(false, true), ivs(&[(4, 9)]));
    }

    #[test]
    fn parse_ignores_whitespace() {
        assert_eq!(seq("0 1 1 0"), seq("0110"));
        assert_eq!(BinarySeq::parse("01x"), Err(SeqError::BadChar('x')));
        assert_eq!(BinarySeq::parse(""), Err(SeqError::Empty));
    }

    #[test]
    fn runs_partition_exhaustive_n12() {
        // runs(s,0) and runs(s,1) together partition [n]; runs are maximal.
        for n in 1..=12usize {
            for mask in 0..(1u64 << n) {
                let s = BinarySeq::from_mask(mask, n).unwrap();
                let mut covered = vec![0u8; n + 1];
                for (v, rs) in [(false, s.runs(false)), (true, s.runs(true))] {
                    let mut prev_hi: Option<usize> = None;
                    for iv in &rs {
                        assert!(iv.lo >= 1 && iv.hi <= n && iv.lo <= iv.hi);
                        if let Some(ph) = prev_hi {
                            // sorted, disjoint, non-adjacent
                            assert!(iv.lo > ph + 1, "runs adjacent in {s} for v={v}");
                        }
                        prev_hi = Some(iv.hi);
                        for i in iv.lo..=iv.hi {
                            assert_eq!(s.get(i), v);
                            covered[i] += 1;
                        }
                    }
                }
                assert!(covered[1..].iter().all(|&c| c == 1), "partition fails for {s}");
            }
        }
    }

    #[test]
    fn junctions_are_adjacent_run_pairs_exhaustive_n12() {
        for n in 1..=12usize {
            for mask in 0..(1u64 << n) {
                let s = BinarySeq::from_mask(mask, n).unwrap();
                for (u, v) in [(false, true), (true, false)] {
                    let expected: Vec<Interval> = s
                        .runs(u)
                        .iter()
                        .flat_map(|a| {
                            s.runs(v)
                                .iter()
                                .filter(|b| b.lo == a.hi + 1)
                                .map(|b| Interval::new(a.lo, b.hi))
                                .collect::<Vec<_>>()
                        })
                        .collect();
                    assert_eq!(s.junction_runs(u, v), expected, "junctions differ for {s}");
                }
            }
        }
    }
}
