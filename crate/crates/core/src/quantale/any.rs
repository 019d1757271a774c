//! Runtime choice of quantale, for file formats and the command line.

use std::fmt;

use serde::{Serialize, Serializer};

use super::{
    free_quantale, BuiltinConditions, Boolean2, ExtReal, FiniteMonoid, FiniteQuantale,
    LawverePlus, LawvereTimes, Quantale, QuantaleError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnyValue {
    Bool(bool),
    Real(ExtReal),
    Index(usize),
}

impl AnyValue {
    pub fn as_real(self) -> Option<ExtReal> {
        match self {
            AnyValue::Real(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for AnyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyValue::Bool(b) => write!(f, "{}", if *b { "top" } else { "bot" }),
            AnyValue::Real(r) => write!(f, "{r}"),
            AnyValue::Index(i) => write!(f, "#{i}"),
        }
    }
}

impl Serialize for AnyValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            AnyValue::Bool(b) => serializer.serialize_bool(*b),
            AnyValue::Real(r) => r.serialize(serializer),
            AnyValue::Index(i) => serializer.serialize_u64(*i as u64),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyQuantale {
    Boolean(Boolean2),
    Plus(LawverePlus),
    Times(LawvereTimes),
    Finite(FiniteQuantale),
}

impl AnyQuantale {
    /// Resolves `boolean`, `lawvere` (or `R+`), `lawvere-times` (or `R*`),
    /// `m3bar`, and `free:Zn` for `n ≤ 5`.
    pub fn by_name(name: &str) -> Result<Self, QuantaleError> {
        match name {
            "boolean" | "2" | "bool" => Ok(AnyQuantale::Boolean(Boolean2)),
            "lawvere" | "R+" | "lawvere-plus" => Ok(AnyQuantale::Plus(LawverePlus)),
            "lawvere-times" | "R*" | "R×" => Ok(AnyQuantale::Times(LawvereTimes)),
            "m3bar" => Ok(AnyQuantale::Finite(FiniteQuantale::m3bar())),
            other => {
                let n = other
                    .strip_prefix("free:Z")
                    .and_then(|n| n.parse::<usize>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| {
                        QuantaleError::MalformedTable(format!("unknown quantale `{other}`"))
                    })?;
                free_quantale(&FiniteMonoid::cyclic(n), other).map(AnyQuantale::Finite)
            }
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteQuantale> {
        match self {
            AnyQuantale::Finite(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_lawvere_plus(&self) -> bool {
        matches!(self, AnyQuantale::Plus(_))
    }
}

fn mismatch(a: &AnyValue) -> ! {
    panic!("value {a} does not belong to this quantale")
}

macro_rules! dispatch_binary {
    ($self:ident, $a:ident, $b:ident, $method:ident, $wrap:ident) => {
        match ($self, $a, $b) {
            (AnyQuantale::Boolean(q), AnyValue::Bool(x), AnyValue::Bool(y)) => {
                $wrap!(Bool, q.$method(x, y))
            }
            (AnyQuantale::Plus(q), AnyValue::Real(x), AnyValue::Real(y)) => {
                $wrap!(Real, q.$method(x, y))
            }
            (AnyQuantale::Times(q), AnyValue::Real(x), AnyValue::Real(y)) => {
                $wrap!(Real, q.$method(x, y))
            }
            (AnyQuantale::Finite(q), AnyValue::Index(x), AnyValue::Index(y)) => {
                $wrap!(Index, q.$method(x, y))
            }
            (_, a, _) => mismatch(a),
        }
    };
}

macro_rules! value {
    ($variant:ident, $e:expr) => {
        AnyValue::$variant($e)
    };
}

macro_rules! plain {
    ($variant:ident, $e:expr) => {
        $e
    };
}

macro_rules! dispatch_const {
    ($self:ident, $method:ident) => {
        match $self {
            AnyQuantale::Boolean(q) => AnyValue::Bool(q.$method()),
            AnyQuantale::Plus(q) => AnyValue::Real(q.$method()),
            AnyQuantale::Times(q) => AnyValue::Real(q.$method()),
            AnyQuantale::Finite(q) => AnyValue::Index(q.$method()),
        }
    };
}

impl Quantale for AnyQuantale {
    type Value = AnyValue;

    fn name(&self) -> String {
        match self {
            AnyQuantale::Boolean(q) => q.name(),
            AnyQuantale::Plus(q) => q.name(),
            AnyQuantale::Times(q) => q.name(),
            AnyQuantale::Finite(q) => q.name(),
        }
    }
    fn leq(&self, a: &AnyValue, b: &AnyValue) -> bool {
        dispatch_binary!(self, a, b, leq, plain)
    }
    fn join(&self, a: &AnyValue, b: &AnyValue) -> AnyValue {
        dispatch_binary!(self, a, b, join, value)
    }
    fn meet(&self, a: &AnyValue, b: &AnyValue) -> AnyValue {
        dispatch_binary!(self, a, b, meet, value)
    }
    fn bottom(&self) -> AnyValue {
        dispatch_const!(self, bottom)
    }
    fn top(&self) -> AnyValue {
        dispatch_const!(self, top)
    }
    fn unit(&self) -> AnyValue {
        dispatch_const!(self, unit)
    }
    fn tensor(&self, a: &AnyValue, b: &AnyValue) -> AnyValue {
        dispatch_binary!(self, a, b, tensor, value)
    }
    fn hom(&self, v: &AnyValue, w: &AnyValue) -> AnyValue {
        dispatch_binary!(self, v, w, hom, value)
    }
    fn totally_below(&self, u: &AnyValue, v: &AnyValue) -> bool {
        dispatch_binary!(self, u, v, totally_below, plain)
    }
    fn elements(&self) -> Option<Vec<AnyValue>> {
        match self {
            AnyQuantale::Boolean(q) => q
                .elements()
                .map(|es| es.into_iter().map(AnyValue::Bool).collect()),
            AnyQuantale::Finite(q) => q
                .elements()
                .map(|es| es.into_iter().map(AnyValue::Index).collect()),
            _ => None,
        }
    }
    fn builtin_conditions(&self) -> Option<BuiltinConditions> {
        match self {
            AnyQuantale::Boolean(q) => q.builtin_conditions(),
            AnyQuantale::Plus(q) => q.builtin_conditions(),
            AnyQuantale::Times(q) => q.builtin_conditions(),
            AnyQuantale::Finite(q) => q.builtin_conditions(),
        }
    }
    fn approx_equiv(&self, a: &AnyValue, b: &AnyValue) -> bool {
        match (a.as_real(), b.as_real()) {
            (Some(x), Some(y)) => x.close_to(y),
            _ => self.equiv(a, b),
        }
    }
    fn format_value(&self, v: &AnyValue) -> String {
        match (self, v) {
            (AnyQuantale::Boolean(q), AnyValue::Bool(x)) => q.format_value(x),
            (AnyQuantale::Plus(q), AnyValue::Real(x)) => q.format_value(x),
            (AnyQuantale::Times(q), AnyValue::Real(x)) => q.format_value(x),
            (AnyQuantale::Finite(q), AnyValue::Index(x)) => q.format_value(x),
            (_, other) => other.to_string(),
        }
    }
    fn parse_value(&self, raw: &serde_json::Value) -> Option<AnyValue> {
        match self {
            AnyQuantale::Boolean(q) => q.parse_value(raw).map(AnyValue::Bool),
            AnyQuantale::Plus(q) => q.parse_value(raw).map(AnyValue::Real),
            AnyQuantale::Times(q) => q.parse_value(raw).map(AnyValue::Real),
            AnyQuantale::Finite(q) => q.parse_value(raw).map(AnyValue::Index),
        }
    }
}
