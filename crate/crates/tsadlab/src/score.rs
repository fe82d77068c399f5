//! Score values with explicit definedness and exact-rational support.
//!
//! Metrics whose formulas are rational in the inputs are computed in exact
//! rational arithmetic so that property checking can compare scores without
//! rounding; sigmoid/log/sqrt-based metrics use 64-bit floats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Exact rational score type.
pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat_usize(v: usize) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `1 / 2^k`.
pub fn dyadic(k: usize) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << k)
}

/// A metric value. `NegInf` is a defined, orderable value below every finite
/// score; `Undefined` marks an empty-denominator case.
#[derive(Clone, Debug, PartialEq)]
pub enum ScoreValue {
    Exact(Rat),
    Real(f64),
    NegInf,
    Undefined,
}

impl ScoreValue {
    pub fn is_undefined(&self) -> bool {
        matches!(self, ScoreValue::Undefined)
    }

    pub fn exact(r: Rat) -> Self {
        ScoreValue::Exact(r)
    }

    /// Lossy view as f64 (`NegInf` maps to `-inf`, `Undefined` to NaN).
    pub fn as_f64(&self) -> f64 {
        match self {
            ScoreValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            ScoreValue::Real(x) => *x,
            ScoreValue::NegInf => f64::NEG_INFINITY,
            ScoreValue::Undefined => f64::NAN,
        }
    }

    /// The exact num/den rendering, when the value is exact.
    pub fn exact_string(&self) -> Option<String> {
        match self {
            ScoreValue::Exact(r) => Some(format!("{}/{}", r.numer(), r.denom())),
            _ => None,
        }
    }

    /// Total order over *defined* values, used for ranking. Returns `None`
    /// when either side is `Undefined`.
    pub fn cmp_defined(&self, other: &ScoreValue) -> Option<Ordering> {
        use ScoreValue::*;
        match (self, other) {
            (Undefined, _) | (_, Undefined) => None,
            (NegInf, NegInf) => Some(Ordering::Equal),
            (NegInf, _) => Some(Ordering::Less),
            (_, NegInf) => Some(Ordering::Greater),
            (Exact(a), Exact(b)) => Some(a.cmp(b)),
            (a, b) => a.as_f64().partial_cmp(&b.as_f64()),
        }
    }

    /// Strict comparison for `greater`-type properties: exact where possible,
    /// zero-tolerance strict float comparison otherwise.
    pub fn strictly_greater(&self, other: &ScoreValue) -> Option<bool> {
        Some(self.cmp_defined(other)? == Ordering::Greater)
    }

    /// Equality for `equal`-type properties: exact comparison for rationals,
    /// absolute tolerance `tol` for floats.
    pub fn equals_with_tol(&self, other: &ScoreValue, tol: f64) -> Option<bool> {
        use ScoreValue::*;
        match (self, other) {
            (Undefined, _) | (_, Undefined) => None,
            (NegInf, NegInf) => Some(true),
            (NegInf, _) | (_, NegInf) => Some(false),
            (Exact(a), Exact(b)) => Some(a == b),
            (a, b) => Some((a.as_f64() - b.as_f64()).abs() <= tol),
        }
    }
}

impl fmt::Display for ScoreValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScoreValue::Exact(r) => write!(f, "{}", r.to_f64().unwrap_or(f64::NAN)),
            ScoreValue::Real(x) => write!(f, "{x}"),
            ScoreValue::NegInf => write!(f, "-inf"),
            ScoreValue::Undefined => write!(f, "undefined"),
        }
    }
}

/// Harmonic mean `2ab/(a+b)` over exact operands; `0` when both are defined
/// and sum to zero, `Undefined` propagated from either side.
pub fn harmonic_exact(a: &ScoreValue, b: &ScoreValue) -> ScoreValue {
    use ScoreValue::*;
    match (a, b) {
        (Undefined, _) | (_, Undefined) => Undefined,
        (NegInf, _) | (_, NegInf) => NegInf,
        (Exact(x), Exact(y)) => {
            let sum = x + y;
            if sum.is_zero() {
                Exact(Rat::zero())
            } else {
                Exact(rat_int(2) * x * y / sum)
            }
        }
        (x, y) => {
            let (x, y) = (x.as_f64(), y.as_f64());
            if x + y == 0.0 {
                Real(0.0)
            } else {
                Real(2.0 * x * y / (x + y))
            }
        }
    }
}

/// Rounds to 12 significant digits, the fixed JSON rendering precision.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let mag = x.abs().log10().floor();
    let scale = 10f64.powf(11.0 - mag);
    (x * scale).round() / scale
}

pub fn is_negative(v: &ScoreValue) -> bool {
    match v {
        ScoreValue::Exact(r) => r.is_negative(),
        ScoreValue::Real(x) => *x < 0.0,
        ScoreValue::NegInf => true,
        ScoreValue::Undefined => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_places_neg_inf_below_everything_defined() {
        let a = ScoreValue::NegInf;
        let b = ScoreValue::Exact(rat(-1000, 1));
        assert_eq!(a.cmp_defined(&b), Some(Ordering::Less));
        assert_eq!(ScoreValue::Undefined.cmp_defined(&b), None);
    }

    #[test]
    fn harmonic_zero_convention() {
        let z = ScoreValue::Exact(Rat::zero());
        assert_eq!(harmonic_exact(&z, &z), ScoreValue::Exact(Rat::zero()));
        let u = harmonic_exact(&ScoreValue::Undefined, &z);
        assert!(u.is_undefined());
    }

    #[test]
    fn sig12_rounding() {
        assert_eq!(round_sig12(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_sig12(0.0), 0.0);
        assert_eq!(round_sig12(123456789012345.0), 123456789012000.0);
    }
}
