//! Evaluation metrics for time-series anomaly detection.
//!
//! The crate provides:
//! * binary-sequence and maximal-interval (alarm) algebra ([`seq`]),
//! * the DA/TA/EA/LA alarm classification ([`classify`]),
//! * a catalog of 39 scoring metrics behind one interface, including the
//!   LARM and ALARM scores ([`metrics`]),
//! * executable encodings of the nine simple and nine advanced metric
//!   properties with an exhaustive small-instance checker ([`properties`]),
//! * ranking of prediction sets under any metric, Kendall tau-b comparison
//!   and a deterministic synthetic prediction battery ([`rankings`]).
//!
//! All types are immutable after construction and all operations are pure,
//! so values can be shared and evaluated from any number of threads.

pub mod classify;
pub mod metrics;
pub mod properties;
pub mod rankings;
pub mod score;
pub mod seq;

pub use classify::{classify_alarms, AlarmClassification};
pub use metrics::{evaluate, LarmConfig, MetricDescriptor, MetricId, MetricParams, ScoreResult};
pub use score::{Rat, ScoreValue};
pub use seq::{AlarmSets, BinarySeq, Interval, SeqError};
