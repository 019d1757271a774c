//! Arithmetic on the extended half-line `[0, ∞]`.
//!
//! The rules here are the ones forced by the quantale structure rather than
//! IEEE semantics: multiplication absorbs into `∞` even against `0`, and
//! division is the residual of multiplication (`α/β` is the least `γ` with
//! `α ≤ β·γ`).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExtRealError {
    #[error("value {0} is negative")]
    Negative(f64),
    #[error("value is NaN")]
    NotANumber,
    #[error("cannot parse `{0}` as an extended real")]
    Parse(String),
}

/// A value in `[0, ∞]`, ordered numerically.
///
/// Quantale order is a separate concern: both Lawvere quantales order this
/// carrier by `≥`, see [`crate::quantale::LawverePlus`].
#[derive(Clone, Copy, PartialEq, Default)]
pub struct ExtReal(f64);

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal(0.0);
    pub const ONE: ExtReal = ExtReal(1.0);
    pub const INFINITY: ExtReal = ExtReal(f64::INFINITY);

    pub fn new(value: f64) -> Result<Self, ExtRealError> {
        if value.is_nan() {
            Err(ExtRealError::NotANumber)
        } else if value < 0.0 {
            Err(ExtRealError::Negative(value))
        } else {
            // normalise -0.0
            Ok(ExtReal(value + 0.0))
        }
    }

    /// Panicking constructor for literals known to be in range.
    pub fn of(value: f64) -> Self {
        Self::new(value).expect("extended real out of range")
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0 == f64::INFINITY
    }

    /// Equal, or finite and within a relative `1e-12`.
    pub fn close_to(self, other: Self) -> bool {
        if self.is_infinite() || other.is_infinite() {
            return self == other;
        }
        (self.0 - other.0).abs() <= 1e-12 * self.0.abs().max(other.0.abs()).max(1.0)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn add(self, other: Self) -> Self {
        ExtReal(self.0 + other.0)
    }

    /// Multiplication with `0·∞ = ∞`.
    pub fn mul(self, other: Self) -> Self {
        if self.is_infinite() || other.is_infinite() {
            ExtReal::INFINITY
        } else {
            ExtReal(self.0 * other.0)
        }
    }

    /// The residual `α/β = inf{γ | α ≤ β·γ}` of [`ExtReal::mul`].
    pub fn frac(self, denominator: Self) -> Self {
        let (a, b) = (self, denominator);
        if a.is_zero() || b.is_infinite() {
            ExtReal::ZERO
        } else if b.is_zero() || a.is_infinite() {
            ExtReal::INFINITY
        } else {
            ExtReal(a.0 / b.0)
        }
    }

    /// Truncated difference `max{0, self − subtrahend}` with `∞ − ∞ = 0`
    /// and `α − ∞ = 0`; the residual of addition.
    pub fn monus(self, subtrahend: Self) -> Self {
        if subtrahend.is_infinite() {
            ExtReal::ZERO
        } else if self.is_infinite() {
            ExtReal::INFINITY
        } else if self.0 <= subtrahend.0 {
            ExtReal::ZERO
        } else {
            ExtReal(self.0 - subtrahend.0)
        }
    }

    /// `log°`, the left adjoint of [`ExtReal::exp_ext`].
    pub fn log_circ(self) -> Self {
        if self.is_infinite() {
            ExtReal::INFINITY
        } else if self.0 <= 1.0 {
            ExtReal::ZERO
        } else {
            ExtReal(self.0.ln())
        }
    }

    pub fn exp_ext(self) -> Self {
        ExtReal(self.0.exp())
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl std::hash::Hash for ExtReal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.to_bits().hash(state)
    }
}

impl fmt::Debug for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for ExtReal {
    type Err = ExtRealError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "∞" | "infinity" | "Infinity" => Ok(ExtReal::INFINITY),
            other => other
                .parse::<f64>()
                .map_err(|_| ExtRealError::Parse(s.to_string()))
                .and_then(ExtReal::new),
        }
    }
}

impl TryFrom<f64> for ExtReal {
    type Error = ExtRealError;

    fn try_from(value: f64) -> Result<Self, Self::Error> {
        ExtReal::new(value)
    }
}

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.is_infinite() {
            serializer.serialize_str("inf")
        } else {
            serializer.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(v) => ExtReal::new(v).map_err(serde::de::Error::custom),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: ExtReal = ExtReal::INFINITY;

    fn x(v: f64) -> ExtReal {
        ExtReal::of(v)
    }

    #[test]
    fn zero_times_infinity_is_infinity() {
        assert_eq!(x(0.0).mul(INF), INF);
        assert_eq!(INF.mul(x(0.0)), INF);
        assert_eq!(x(2.5).mul(INF), INF);
        assert_eq!(x(1.0).mul(x(7.0)), x(7.0));
    }

    #[test]
    fn fractions_follow_adjunction() {
        assert_eq!(x(3.0).frac(x(0.0)), INF);
        assert_eq!(x(0.0).frac(x(0.0)), x(0.0));
        assert_eq!(x(7.0).frac(INF), x(0.0));
        assert_eq!(INF.frac(INF), x(0.0));
        assert_eq!(INF.frac(x(2.0)), INF);
        assert_eq!(x(6.0).frac(x(3.0)), x(2.0));
    }

    #[test]
    fn fraction_is_least_solution() {
        let grid = [0.0, 0.25, 0.5, 1.0, 2.0, 4.0, f64::INFINITY];
        for &a in &grid {
            for &b in &grid {
                let q = x(a).frac(x(b));
                assert!(x(a) <= x(b).mul(q), "{a}/{b}");
                for &g in &grid {
                    if x(a) <= x(b).mul(x(g)) {
                        assert!(q <= x(g), "{a}/{b} vs {g}");
                    }
                }
            }
        }
    }

    #[test]
    fn log_circ_values() {
        assert_eq!(x(0.0).log_circ(), x(0.0));
        assert_eq!(x(0.5).log_circ(), x(0.0));
        assert_eq!(x(1.0).log_circ(), x(0.0));
        assert_eq!(INF.log_circ(), INF);
        assert_eq!(x(2.0).log_circ(), x(2f64.ln()));
        assert_eq!(INF.exp_ext(), INF);
    }

    #[test]
    fn log_circ_left_adjoint_to_exp() {
        let grid = [0.0, 0.3, 1.0, 1.7, 2.0, 9.5, 40.0, f64::INFINITY];
        for &a in &grid {
            for &b in &grid {
                assert_eq!(x(a).log_circ() <= x(b), x(a) <= x(b).exp_ext(), "{a} {b}");
            }
        }
    }

    #[test]
    fn monus_rules() {
        assert_eq!(x(5.0).monus(x(3.0)), x(2.0));
        assert_eq!(x(3.0).monus(x(5.0)), x(0.0));
        assert_eq!(INF.monus(x(5.0)), INF);
        assert_eq!(x(4.0).monus(INF), x(0.0));
        assert_eq!(INF.monus(INF), x(0.0));
    }

    #[test]
    fn rejects_negative_and_nan() {
        assert!(ExtReal::new(-1.0).is_err());
        assert!(ExtReal::new(f64::NAN).is_err());
        assert!("-2".parse::<ExtReal>().is_err());
        assert_eq!("inf".parse::<ExtReal>().unwrap(), INF);
    }

    #[test]
    fn serde_uses_inf_token() {
        let s = serde_json::to_string(&vec![x(1.5), INF]).unwrap();
        assert_eq!(s, r#"[1.5,"inf"]"#);
        let back: Vec<ExtReal> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, vec![x(1.5), INF]);
    }
}
