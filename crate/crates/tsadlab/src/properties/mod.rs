//! Executable encodings of the nine simple and nine advanced metric
//! properties, an exhaustive precondition-satisfying case enumerator, and a
//! metric-vs-property checker.

mod check;
pub mod fixtures;
pub mod matrix;
mod predicates;

pub use check::{check_property, check_property_with, enumerate_cases, for_each_case, CheckOptions};
pub use predicates::precondition;

use crate::metrics::MetricDescriptor;
use crate::seq::BinarySeq;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Maximum sequence length accepted by the enumerator (cost grows as `8^n`).
pub const MAX_ENUM_LEN: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PropertyFamily {
    Simple,
    Advanced,
}

/// Identifier of a property: family plus index 1..=9.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PropertyId {
    pub family: PropertyFamily,
    pub index: u8,
}

impl PropertyId {
    pub fn simple(index: u8) -> Self {
        assert!((1..=9).contains(&index));
        PropertyId {
            family: PropertyFamily::Simple,
            index,
        }
    }

    pub fn advanced(index: u8) -> Self {
        assert!((1..=9).contains(&index));
        PropertyId {
            family: PropertyFamily::Advanced,
            index,
        }
    }

    pub fn all_simple() -> impl Iterator<Item = PropertyId> {
        (1..=9).map(PropertyId::simple)
    }

    pub fn all_advanced() -> impl Iterator<Item = PropertyId> {
        (1..=9).map(PropertyId::advanced)
    }

    pub fn name(&self) -> String {
        match self.family {
            PropertyFamily::Simple => format!("P{}", self.index),
            PropertyFamily::Advanced => format!("A{}", self.index),
        }
    }

    pub fn from_name(s: &str) -> Option<PropertyId> {
        if s.len() < 2 {
            return None;
        }
        let (fam, idx) = s.split_at(1);
        let index: u8 = idx.parse().ok()?;
        if !(1..=9).contains(&index) {
            return None;
        }
        match fam {
            "P" | "p" => Some(PropertyId::simple(index)),
            "A" | "a" => Some(PropertyId::advanced(index)),
            _ => None,
        }
    }

    /// Short description of what the property demands.
    pub fn description(&self) -> &'static str {
        match (self.family, self.index) {
            (PropertyFamily::Simple, 1) => "detection of anomalies",
            (PropertyFamily::Simple, 2) => "no reward for redundant alarms",
            (PropertyFamily::Simple, 3) => "minimizing false positives",
            (PropertyFamily::Simple, 4) => "minimizing false alarms",
            (PropertyFamily::Simple, 5) => "invariance under permutation of false positives",
            (PropertyFamily::Simple, 6) => "false alarms outweigh true-positive gains",
            (PropertyFamily::Simple, 7) => "maximizing true positives",
            (PropertyFamily::Simple, 8) => "earlier alarms rank higher",
            (PropertyFamily::Simple, 9) => "early bias inside a window",
            (PropertyFamily::Advanced, 1) => "detection of anomalies (classified alarms)",
            (PropertyFamily::Advanced, 2) => "no reward for redundant alarms (detected windows)",
            (PropertyFamily::Advanced, 3) => "minimizing false positives (global alarm count)",
            (PropertyFamily::Advanced, 4) => "minimizing classified false alarms",
            (PropertyFamily::Advanced, 5) => "invariance under permutation of true false alarms",
            (PropertyFamily::Advanced, 6) => "early worse than true-false worse than late",
            (PropertyFamily::Advanced, 7) => "maximizing true positives (detection fixed)",
            (PropertyFamily::Advanced, 8) => "earlier alarms rank higher (detection fixed)",
            (PropertyFamily::Advanced, 9) => "early bias (detection fixed)",
            _ => unreachable!(),
        }
    }
}

impl fmt::Debug for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Expected ordering of `m(g,p)` versus `m(g,q)` for a satisfied property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Greater,
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    Enumerated,
    PaperFixture(String),
}

/// A `(g, p, q)` triple satisfying a property's precondition, with the
/// expected relation `m(g,p) REL m(g,q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCase {
    pub g: BinarySeq,
    pub p: BinarySeq,
    pub q: BinarySeq,
    pub expected: Relation,
    pub provenance: Provenance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NoCounterexampleUpToMaxLen,
    Violated,
}

/// Serializable witness rendering of a violating case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub g: String,
    pub p: String,
    pub q: String,
    pub expected: Relation,
}

/// The outcome of checking one metric against one property over the full
/// enumerated case universe up to `max_len`.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub metric: MetricDescriptor,
    pub property: PropertyId,
    pub max_len: usize,
    pub cases_checked: u64,
    /// Cases skipped because either score was Undefined.
    pub skipped: u64,
    /// Skipped cases whose ground truth contains at least one anomaly.
    pub skipped_with_anomalies: u64,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

impl PropertyReport {
    pub fn violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}
