//! The metric catalog: every classical detection metric analysed by the
//! property framework, plus the LARM and ALARM scores, behind one uniform
//! scoring interface.
//!
//! All exposed scores are higher-is-better; temporal distance and average
//! alert delay are exposed through the strictly decreasing wrapper `x ↦ -x`.

mod affiliation;
mod event;
mod kdelay;
mod larm;
mod nab;
mod pa_ext;
mod pointwise;
mod range;
mod ta;

pub use larm::{default_alignment, default_saturation, LarmConfig};

use crate::score::{ScoreValue};
use crate::seq::{BinarySeq, SeqError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MetricError {
    #[error(transparent)]
    Seq(#[from] SeqError),
    #[error("unknown metric id {0:?}")]
    UnknownMetric(String),
    #[error("parameter {name} = {value} out of range: {requirement}")]
    ParamOutOfRange {
        name: &'static str,
        value: String,
        requirement: &'static str,
    },
    #[error("unknown parameter {0:?} for metric {1}")]
    UnknownParam(String, MetricId),
    #[error("invalid parameter value {0:?}: {1}")]
    BadParamValue(String, String),
}

/// Identifier of a catalog metric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MetricId {
    PointwisePrecision,
    PointwiseRecall,
    PointwiseF1,
    PaPrecision,
    PaRecall,
    PaF1,
    EventPrecision,
    EventRecall,
    EventF1,
    CompositeF1,
    KDelayPrecision,
    KDelayRecall,
    KDelayF1,
    PaPercentK,
    PaPercentKIntegrated,
    PaDecay,
    ReducedLengthF1,
    BalancedPaF1,
    LsaF1,
    RangePrecision,
    RangeRecall,
    RangeF1,
    TimeseadPrecision,
    TimeseadRecall,
    TimeseadF1,
    Nab,
    TaPrecision,
    TaRecall,
    TimeTolerantPrecision,
    TimeTolerantRecall,
    AffiliationPrecision,
    AffiliationRecall,
    AffiliationF1,
    ETaPrecision,
    ETaRecall,
    TemporalDistance,
    AverageAlertDelay,
    Larm,
    Alarm,
}

pub const ALL_METRICS: [MetricId; 39] = [
    MetricId::PointwisePrecision,
    MetricId::PointwiseRecall,
    MetricId::PointwiseF1,
    MetricId::PaPrecision,
    MetricId::PaRecall,
    MetricId::PaF1,
    MetricId::EventPrecision,
    MetricId::EventRecall,
    MetricId::EventF1,
    MetricId::CompositeF1,
    MetricId::KDelayPrecision,
    MetricId::KDelayRecall,
    MetricId::KDelayF1,
    MetricId::PaPercentK,
    MetricId::PaPercentKIntegrated,
    MetricId::PaDecay,
    MetricId::ReducedLengthF1,
    MetricId::BalancedPaF1,
    MetricId::LsaF1,
    MetricId::RangePrecision,
    MetricId::RangeRecall,
    MetricId::RangeF1,
    MetricId::TimeseadPrecision,
    MetricId::TimeseadRecall,
    MetricId::TimeseadF1,
    MetricId::Nab,
    MetricId::TaPrecision,
    MetricId::TaRecall,
    MetricId::TimeTolerantPrecision,
    MetricId::TimeTolerantRecall,
    MetricId::AffiliationPrecision,
    MetricId::AffiliationRecall,
    MetricId::AffiliationF1,
    MetricId::ETaPrecision,
    MetricId::ETaRecall,
    MetricId::TemporalDistance,
    MetricId::AverageAlertDelay,
    MetricId::Larm,
    MetricId::Alarm,
];

impl MetricId {
    pub fn as_str(&self) -> &'static str {
        use MetricId::*;
        match self {
            PointwisePrecision => "pointwise-precision",
            PointwiseRecall => "pointwise-recall",
            PointwiseF1 => "pointwise-f1",
            PaPrecision => "pa-precision",
            PaRecall => "pa-recall",
            PaF1 => "pa-f1",
            EventPrecision => "event-precision",
            EventRecall => "event-recall",
            EventF1 => "event-f1",
            CompositeF1 => "composite-f1",
            KDelayPrecision => "kdelay-precision",
            KDelayRecall => "kdelay-recall",
            KDelayF1 => "kdelay-f1",
            PaPercentK => "pa-percent-k",
            PaPercentKIntegrated => "pa-percent-k-integrated",
            PaDecay => "pa-decay",
            ReducedLengthF1 => "reduced-length-f1",
            BalancedPaF1 => "balanced-pa-f1",
            LsaF1 => "lsa-f1",
            RangePrecision => "range-precision",
            RangeRecall => "range-recall",
            RangeF1 => "range-f1",
            TimeseadPrecision => "timesead-precision",
            TimeseadRecall => "timesead-recall",
            TimeseadF1 => "timesead-f1",
            Nab => "nab",
            TaPrecision => "ta-precision",
            TaRecall => "ta-recall",
            TimeTolerantPrecision => "time-tolerant-precision",
            TimeTolerantRecall => "time-tolerant-recall",
            AffiliationPrecision => "affiliation-precision",
            AffiliationRecall => "affiliation-recall",
            AffiliationF1 => "affiliation-f1",
            ETaPrecision => "etap",
            ETaRecall => "etar",
            TemporalDistance => "temporal-distance",
            AverageAlertDelay => "average-alert-delay",
            Larm => "larm",
            Alarm => "alarm",
        }
    }

    pub fn from_str_id(s: &str) -> Option<MetricId> {
        ALL_METRICS.iter().copied().find(|m| m.as_str() == s)
    }

    /// Short citation string for catalog listings.
    pub fn citation(&self) -> &'static str {
        use MetricId::*;
        match self {
            PointwisePrecision | PointwiseRecall | PointwiseF1 => "classical point-wise counting",
            PaPrecision | PaRecall | PaF1 => "point adjustment (Xu et al. 2018)",
            EventPrecision | EventRecall | EventF1 => "event-wise counting",
            CompositeF1 => "composite of point-wise precision and event-wise recall (Garg et al. 2021)",
            KDelayPrecision | KDelayRecall | KDelayF1 => "k-delay adjustment (Ren et al. 2019)",
            PaPercentK => "point adjustment at K% (Kim et al. 2022)",
            PaPercentKIntegrated => "integral of PA%K over the threshold",
            PaDecay => "point adjustment with decay (Kim et al. 2024)",
            ReducedLengthF1 => "log-reduced window length adjustment",
            BalancedPaF1 => "balanced point adjustment (Si et al. 2024)",
            LsaF1 => "latency- and sparsity-aware adjustment (Abdulaal et al. 2021)",
            RangePrecision | RangeRecall | RangeF1 => "range-based precision/recall (Tatbul et al. 2018)",
            TimeseadPrecision | TimeseadRecall | TimeseadF1 => "time-series precision/recall (Wagner et al. 2023)",
            Nab => "NAB score (Lavin & Ahmad 2015)",
            TaPrecision | TaRecall => "time-series aware precision/recall (Hwang et al. 2019)",
            TimeTolerantPrecision | TimeTolerantRecall => "time-tolerant precision/recall (Scharwächter & Müller 2020)",
            AffiliationPrecision | AffiliationRecall | AffiliationF1 => "affiliation metrics (Huet et al. 2022)",
            ETaPrecision | ETaRecall => "enhanced time-series aware precision/recall (Hwang et al. 2022)",
            TemporalDistance => "temporal distance, exposed as -TD (Kovács et al. 2019)",
            AverageAlertDelay => "average alert delay, exposed as -AAD (Xu et al. 2018)",
            Larm => "alignment & accuracy metric (this catalog)",
            Alarm => "advanced alignment & accuracy metric (this catalog)",
        }
    }
}

impl fmt::Display for MetricId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Named metric parameters with per-metric defaults. Only the fields a metric
/// reads are meaningful for it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricParams {
    /// Delay budget for the k-delay family (`k >= 0`).
    pub k: usize,
    /// Overlap threshold for PA%K, in `[0,1]`.
    pub k_percent: f64,
    /// Decay rate for PAdf, in `(0,1]`.
    pub d: f64,
    /// Balance radius for balanced PA (`B >= 0`).
    pub balance: usize,
    /// Block size for LSA (`b >= 1`).
    pub block: usize,
    /// Time tolerance (time-tolerant family) or sigmoid width (TaP/TaR).
    pub delta: usize,
    /// Overlap threshold for TaP/TaR (`> 0`).
    pub theta: f64,
    /// Precision-side threshold for eTaP/eTaR (`> 0`).
    pub theta_p: f64,
    /// Recall-side threshold for eTaP/eTaR (`> 0`).
    pub theta_r: f64,
    /// Existence weight for range-based recall and TaP/TaR, in `[0,1]`.
    pub alpha_weight: f64,
    /// NAB application-profile weights.
    pub a_tp: f64,
    pub a_fp: f64,
    pub a_fn: f64,
    /// Alarm tolerance for ALARM (`t >= 1`).
    pub t: u32,
}

impl Default for MetricParams {
    fn default() -> Self {
        MetricParams {
            k: 1,
            k_percent: 0.2,
            d: 0.9,
            balance: 1,
            block: 3,
            delta: 1,
            theta: 0.5,
            theta_p: 0.5,
            theta_r: 0.5,
            alpha_weight: 0.0,
            a_tp: 1.0,
            a_fp: 0.11,
            a_fn: -1.0,
            t: 2,
        }
    }
}

impl MetricParams {
    pub fn with_k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }
    pub fn with_k_percent(mut self, v: f64) -> Self {
        self.k_percent = v;
        self
    }
    pub fn with_d(mut self, v: f64) -> Self {
        self.d = v;
        self
    }
    pub fn with_delta(mut self, v: usize) -> Self {
        self.delta = v;
        self
    }
    pub fn with_block(mut self, v: usize) -> Self {
        self.block = v;
        self
    }
    pub fn with_balance(mut self, v: usize) -> Self {
        self.balance = v;
        self
    }
    pub fn with_alpha_weight(mut self, v: f64) -> Self {
        self.alpha_weight = v;
        self
    }
    pub fn with_theta(mut self, v: f64) -> Self {
        self.theta = v;
        self
    }
    pub fn with_nab_weights(mut self, a_tp: f64, a_fp: f64, a_fn: f64) -> Self {
        self.a_tp = a_tp;
        self.a_fp = a_fp;
        self.a_fn = a_fn;
        self
    }
    pub fn with_t(mut self, t: u32) -> Self {
        self.t = t;
        self
    }
}

/// A metric identifier together with its parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricDescriptor {
    pub id: MetricId,
    pub params: MetricParams,
}

impl MetricDescriptor {
    pub fn new(id: MetricId) -> Self {
        let mut params = MetricParams::default();
        if id == MetricId::TaPrecision || id == MetricId::TaRecall {
            params.alpha_weight = 0.5;
        }
        MetricDescriptor { id, params }
    }

    pub fn with_params(id: MetricId, params: MetricParams) -> Self {
        MetricDescriptor { id, params }
    }

    /// The parameter names this metric actually reads, with default values,
    /// rendered for catalog listings.
    pub fn relevant_params(&self) -> BTreeMap<&'static str, String> {
        use MetricId::*;
        let p = &self.params;
        let mut out = BTreeMap::new();
        match self.id {
            KDelayPrecision | KDelayRecall | KDelayF1 => {
                out.insert("k", p.k.to_string());
            }
            PaPercentK => {
                out.insert("kPercent", p.k_percent.to_string());
            }
            PaDecay => {
                out.insert("d", p.d.to_string());
            }
            BalancedPaF1 => {
                out.insert("B", p.balance.to_string());
            }
            LsaF1 => {
                out.insert("b", p.block.to_string());
            }
            RangeRecall | RangeF1 => {
                out.insert("alphaWeight", p.alpha_weight.to_string());
            }
            TaPrecision | TaRecall => {
                out.insert("alphaWeight", p.alpha_weight.to_string());
                out.insert("delta", p.delta.to_string());
                out.insert("theta", p.theta.to_string());
            }
            TimeTolerantPrecision | TimeTolerantRecall => {
                out.insert("delta", p.delta.to_string());
            }
            ETaPrecision | ETaRecall => {
                out.insert("thetaP", p.theta_p.to_string());
                out.insert("thetaR", p.theta_r.to_string());
            }
            Nab => {
                out.insert("aTP", p.a_tp.to_string());
                out.insert("aFP", p.a_fp.to_string());
                out.insert("aFN", p.a_fn.to_string());
            }
            Alarm => {
                out.insert("t", p.t.to_string());
            }
            _ => {}
        }
        out
    }

    /// Sets a parameter by its external (CLI) name.
    pub fn set_param(&mut self, name: &str, value: &str) -> Result<(), MetricError> {
        fn parse<T: std::str::FromStr>(name: &str, v: &str) -> Result<T, MetricError>
        where
            T::Err: fmt::Display,
        {
            v.parse().map_err(|e: T::Err| {
                MetricError::BadParamValue(format!("{name}={v}"), e.to_string())
            })
        }
        match name {
            "k" => self.params.k = parse(name, value)?,
            "kPercent" => self.params.k_percent = parse(name, value)?,
            "d" => self.params.d = parse(name, value)?,
            "B" => self.params.balance = parse(name, value)?,
            "b" => self.params.block = parse(name, value)?,
            "delta" => self.params.delta = parse(name, value)?,
            "theta" => self.params.theta = parse(name, value)?,
            "thetaP" => self.params.theta_p = parse(name, value)?,
            "thetaR" => self.params.theta_r = parse(name, value)?,
            "alphaWeight" => self.params.alpha_weight = parse(name, value)?,
            "aTP" => self.params.a_tp = parse(name, value)?,
            "aFP" => self.params.a_fp = parse(name, value)?,
            "aFN" => self.params.a_fn = parse(name, value)?,
            "t" => self.params.t = parse(name, value)?,
            _ => return Err(MetricError::UnknownParam(name.to_string(), self.id)),
        }
        self.validate()
    }

    pub fn validate(&self) -> Result<(), MetricError> {
        let p = &self.params;
        fn bad(name: &'static str, value: impl fmt::Display, req: &'static str) -> MetricError {
            MetricError::ParamOutOfRange {
                name,
                value: value.to_string(),
                requirement: req,
            }
        }
        if !(0.0..=1.0).contains(&p.k_percent) {
            return Err(bad("kPercent", p.k_percent, "must lie in [0,1]"));
        }
        if !(p.d > 0.0 && p.d <= 1.0) {
            return Err(bad("d", p.d, "must lie in (0,1]"));
        }
        if p.block < 1 {
            return Err(bad("b", p.block, "must be >= 1"));
        }
        if !(p.theta > 0.0) {
            return Err(bad("theta", p.theta, "must be > 0"));
        }
        if !(p.theta_p > 0.0) {
            return Err(bad("thetaP", p.theta_p, "must be > 0"));
        }
        if !(p.theta_r > 0.0) {
            return Err(bad("thetaR", p.theta_r, "must be > 0"));
        }
        if !(0.0..=1.0).contains(&p.alpha_weight) {
            return Err(bad("alphaWeight", p.alpha_weight, "must lie in [0,1]"));
        }
        if p.a_tp < 0.0 {
            return Err(bad("aTP", p.a_tp, "must be >= 0"));
        }
        if p.a_fp < 0.0 {
            return Err(bad("aFP", p.a_fp, "must be >= 0"));
        }
        if p.a_fn > 0.0 {
            return Err(bad("aFN", p.a_fn, "must be <= 0"));
        }
        if p.t < 1 {
            return Err(bad("t", p.t, "must be >= 1"));
        }
        Ok(())
    }
}

/// A computed score with optional diagnostic notes.
#[derive(Clone, Debug, PartialEq)]
pub struct ScoreResult {
    pub value: ScoreValue,
    pub metric: MetricDescriptor,
    pub notes: Option<String>,
}

/// Scores `p` against `g` under the given metric descriptor.
pub fn evaluate(
    desc: &MetricDescriptor,
    g: &BinarySeq,
    p: &BinarySeq,
) -> Result<ScoreResult, MetricError> {
    g.check_same_len(p)?;
    desc.validate()?;
    let pr = &desc.params;
    use MetricId::*;
    let value = match desc.id {
        PointwisePrecision => pointwise::precision(g, p),
        PointwiseRecall => pointwise::recall(g, p),
        PointwiseF1 => pointwise::f1(g, p),
        PaPrecision => pointwise::pa_precision(g, p),
        PaRecall => pointwise::pa_recall(g, p),
        PaF1 => pointwise::pa_f1(g, p),
        EventPrecision => event::precision(g, p),
        EventRecall => event::recall(g, p),
        EventF1 => event::f1(g, p),
        CompositeF1 => event::composite_f1(g, p),
        KDelayPrecision => kdelay::precision(g, p, pr.k),
        KDelayRecall => kdelay::recall(g, p, pr.k),
        KDelayF1 => kdelay::f1(g, p, pr.k),
        PaPercentK => pa_ext::pa_percent_k(g, p, pr.k_percent),
        PaPercentKIntegrated => pa_ext::pa_percent_k_integrated(g, p),
        PaDecay => pa_ext::pa_decay(g, p, pr.d),
        ReducedLengthF1 => pa_ext::reduced_length_f1(g, p),
        BalancedPaF1 => pa_ext::balanced_pa_f1(g, p, pr.balance),
        LsaF1 => pa_ext::lsa_f1(g, p, pr.block),
        RangePrecision => range::precision(g, p),
        RangeRecall => range::recall(g, p, pr.alpha_weight),
        RangeF1 => range::f1(g, p),
        TimeseadPrecision => range::timesead_precision(g, p),
        TimeseadRecall => range::timesead_recall(g, p),
        TimeseadF1 => range::timesead_f1(g, p),
        Nab => nab::normalized(g, p, pr.a_tp, pr.a_fp, pr.a_fn),
        TaPrecision => ta::precision(g, p, pr.alpha_weight, pr.delta, pr.theta),
        TaRecall => ta::recall(g, p, pr.alpha_weight, pr.delta, pr.theta),
        TimeTolerantPrecision => ta::time_tolerant_precision(g, p, pr.delta),
        TimeTolerantRecall => ta::time_tolerant_recall(g, p, pr.delta),
        AffiliationPrecision => affiliation::precision(g, p),
        AffiliationRecall => affiliation::recall(g, p),
        AffiliationF1 => affiliation::f1(g, p),
        ETaPrecision => ta::enhanced_precision(g, p, pr.theta_p, pr.theta_r),
        ETaRecall => ta::enhanced_recall(g, p, pr.theta_p, pr.theta_r),
        TemporalDistance => kdelay::neg_temporal_distance(g, p),
        AverageAlertDelay => kdelay::neg_average_alert_delay(g, p),
        Larm => larm::larm(&LarmConfig::default(), g, p),
        Alarm => larm::alarm(&LarmConfig::default().with_tolerance(pr.t), g, p),
    };
    Ok(ScoreResult {
        value,
        metric: desc.clone(),
        notes: None,
    })
}

/// Raw NAB score (unnormalized); exposed for fixtures and diagnostics.
pub fn nab_raw(g: &BinarySeq, p: &BinarySeq, a_tp: f64, a_fp: f64, a_fn: f64) -> ScoreValue {
    nab::raw(g, p, a_tp, a_fp, a_fn)
}

/// Scores LARM with an explicit configuration (custom alignment/saturation).
pub fn score_larm(cfg: &LarmConfig, g: &BinarySeq, p: &BinarySeq) -> Result<ScoreValue, SeqError> {
    g.check_same_len(p)?;
    Ok(larm::larm(cfg, g, p))
}

/// Scores ALARM with an explicit configuration.
pub fn score_alarm(cfg: &LarmConfig, g: &BinarySeq, p: &BinarySeq) -> Result<ScoreValue, SeqError> {
    g.check_same_len(p)?;
    Ok(larm::alarm(cfg, g, p))
}
