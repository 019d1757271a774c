//! Commutative unital quantales.
//!
//! Generic code in this crate speaks only quantale order (`leq`, `join`,
//! `meet`). The two Lawvere quantales order `[0, ∞]` by `≥`, so their join
//! is the numeric infimum; that translation lives in exactly one place, the
//! `numeric_leq` adapter below.

mod any;
mod conditions;
mod ext;
mod finite;
mod lattice;
mod lax;

use std::fmt;

pub use any::{AnyQuantale, AnyValue};
pub use conditions::{
    check_conditions, BuiltinConditions, ConditionReport, ConditionVerdict, Provenance,
};
pub use ext::{ExtReal, ExtRealError};
pub use finite::{
    check_quantale_axioms, free_quantale, FiniteMonoid, FiniteQuantale, QuantaleError,
    QuantaleFile, QuantaleTable, FREE_QUANTALE_MAX_MONOID,
};
pub use lattice::{FiniteLattice, LatticeDefect};
pub use lax::{
    change_of_base_norms, check_lax_hom, exp_hom, log_circ_hom, LaxHom, LaxHomReport,
};

/// A complete lattice with a commutative monoid operation that distributes
/// over joins.
pub trait Quantale {
    type Value: Clone + PartialEq + fmt::Debug;

    fn name(&self) -> String;
    fn leq(&self, a: &Self::Value, b: &Self::Value) -> bool;
    fn join(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn meet(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn bottom(&self) -> Self::Value;
    fn top(&self) -> Self::Value;
    /// The tensor-neutral element `k`.
    fn unit(&self) -> Self::Value;
    fn tensor(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    /// Internal hom `[v, w]`: the largest `u` with `u ⊗ v ≤ w`.
    fn hom(&self, v: &Self::Value, w: &Self::Value) -> Self::Value;
    fn totally_below(&self, u: &Self::Value, v: &Self::Value) -> bool;

    /// The whole carrier, when it is finite.
    fn elements(&self) -> Option<Vec<Self::Value>> {
        None
    }

    /// Known values of conditions (A), (B) and complete distributivity for
    /// quantales with infinite carriers.
    fn builtin_conditions(&self) -> Option<BuiltinConditions> {
        None
    }

    fn format_value(&self, v: &Self::Value) -> String {
        format!("{v:?}")
    }

    fn parse_value(&self, raw: &serde_json::Value) -> Option<Self::Value>;

    fn join_all<I: IntoIterator<Item = Self::Value>>(&self, items: I) -> Self::Value {
        items
            .into_iter()
            .fold(self.bottom(), |acc, v| self.join(&acc, &v))
    }

    fn meet_all<I: IntoIterator<Item = Self::Value>>(&self, items: I) -> Self::Value {
        items.into_iter().fold(self.top(), |acc, v| self.meet(&acc, &v))
    }

    /// `k ≤ v`.
    fn is_k(&self, v: &Self::Value) -> bool {
        self.leq(&self.unit(), v)
    }

    fn equiv(&self, a: &Self::Value, b: &Self::Value) -> bool {
        self.leq(a, b) && self.leq(b, a)
    }

    /// [`Quantale::equiv`] up to floating-point rounding.
    fn approx_equiv(&self, a: &Self::Value, b: &Self::Value) -> bool {
        self.equiv(a, b)
    }

    fn tensor_all<I: IntoIterator<Item = Self::Value>>(&self, items: I) -> Self::Value {
        items
            .into_iter()
            .fold(self.unit(), |acc, v| self.tensor(&acc, &v))
    }
}

/// The Boolean quantale `2 = {⊥, ⊤}` with `⊗ = ∧`, `k = ⊤`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Boolean2;

impl Quantale for Boolean2 {
    type Value = bool;

    fn name(&self) -> String {
        "boolean".into()
    }
    fn leq(&self, a: &bool, b: &bool) -> bool {
        !*a || *b
    }
    fn join(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }
    fn meet(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn bottom(&self) -> bool {
        false
    }
    fn top(&self) -> bool {
        true
    }
    fn unit(&self) -> bool {
        true
    }
    fn tensor(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn hom(&self, v: &bool, w: &bool) -> bool {
        !*v || *w
    }
    fn totally_below(&self, u: &bool, v: &bool) -> bool {
        let _ = u;
        *v
    }
    fn elements(&self) -> Option<Vec<bool>> {
        Some(vec![false, true])
    }
    fn builtin_conditions(&self) -> Option<BuiltinConditions> {
        Some(BuiltinConditions {
            condition_a: true,
            condition_b: true,
            completely_distributive: true,
            note: "two-element chain: integral and completely distributive",
        })
    }
    fn format_value(&self, v: &bool) -> String {
        if *v { "top" } else { "bot" }.into()
    }
    fn parse_value(&self, raw: &serde_json::Value) -> Option<bool> {
        match raw {
            serde_json::Value::Bool(b) => Some(*b),
            serde_json::Value::String(s) => match s.as_str() {
                "top" | "true" | "1" | "⊤" => Some(true),
                "bot" | "false" | "0" | "⊥" => Some(false),
                _ => None,
            },
            serde_json::Value::Number(n) => match n.as_u64() {
                Some(1) => Some(true),
                Some(0) => Some(false),
                _ => None,
            },
            _ => None,
        }
    }
}

/// Quantale order on `[0, ∞]` for both Lawvere quantales: `a ≤ b` iff `a ≥ b`
/// numerically.
#[inline]
fn numeric_leq(a: ExtReal, b: ExtReal) -> bool {
    a >= b
}

fn parse_ext(raw: &serde_json::Value) -> Option<ExtReal> {
    match raw {
        serde_json::Value::Number(n) => n.as_f64().and_then(|v| ExtReal::new(v).ok()),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// `R+ = ([0, ∞], ≥, +, 0)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LawverePlus;

impl Quantale for LawverePlus {
    type Value = ExtReal;

    fn name(&self) -> String {
        "lawvere".into()
    }
    fn leq(&self, a: &ExtReal, b: &ExtReal) -> bool {
        numeric_leq(*a, *b)
    }
    fn join(&self, a: &ExtReal, b: &ExtReal) -> ExtReal {
        (*a).min(*b)
    }
    fn meet(&self, a: &ExtReal, b: &ExtReal) -> ExtReal {
        (*a).max(*b)
    }
    fn bottom(&self) -> ExtReal {
        ExtReal::INFINITY
    }
    fn top(&self) -> ExtReal {
        ExtReal::ZERO
    }
    fn unit(&self) -> ExtReal {
        ExtReal::ZERO
    }
    fn tensor(&self, a: &ExtReal, b: &ExtReal) -> ExtReal {
        a.add(*b)
    }
    fn hom(&self, v: &ExtReal, w: &ExtReal) -> ExtReal {
        w.monus(*v)
    }
    fn totally_below(&self, u: &ExtReal, v: &ExtReal) -> bool {
        v < u
    }
    fn builtin_conditions(&self) -> Option<BuiltinConditions> {
        Some(BuiltinConditions {
            condition_a: true,
            condition_b: true,
            completely_distributive: true,
            note: "integral (k = 0 = top) and a complete chain",
        })
    }
    fn approx_equiv(&self, a: &ExtReal, b: &ExtReal) -> bool {
        a.close_to(*b)
    }
    fn format_value(&self, v: &ExtReal) -> String {
        v.to_string()
    }
    fn parse_value(&self, raw: &serde_json::Value) -> Option<ExtReal> {
        parse_ext(raw)
    }
}

/// `R× = ([0, ∞], ≥, ·, 1)` with `0·∞ = ∞`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LawvereTimes;

impl Quantale for LawvereTimes {
    type Value = ExtReal;

    fn name(&self) -> String {
        "lawvere-times".into()
    }
    fn leq(&self, a: &ExtReal, b: &ExtReal) -> bool {
        numeric_leq(*a, *b)
    }
    fn join(&self, a: &ExtReal, b: &ExtReal) -> ExtReal {
        (*a).min(*b)
    }
    fn meet(&self, a: &ExtReal, b: &ExtReal) -> ExtReal {
        (*a).max(*b)
    }
    fn bottom(&self) -> ExtReal {
        ExtReal::INFINITY
    }
    fn top(&self) -> ExtReal {
        ExtReal::ZERO
    }
    fn unit(&self) -> ExtReal {
        ExtReal::ONE
    }
    fn tensor(&self, a: &ExtReal, b: &ExtReal) -> ExtReal {
        a.mul(*b)
    }
    fn hom(&self, v: &ExtReal, w: &ExtReal) -> ExtReal {
        w.frac(*v)
    }
    fn totally_below(&self, u: &ExtReal, v: &ExtReal) -> bool {
        v < u
    }
    fn builtin_conditions(&self) -> Option<BuiltinConditions> {
        Some(BuiltinConditions {
            condition_a: true,
            condition_b: true,
            completely_distributive: true,
            note: "complete chain; k = 1 is the join of all α > 1",
        })
    }
    fn approx_equiv(&self, a: &ExtReal, b: &ExtReal) -> bool {
        a.close_to(*b)
    }
    fn format_value(&self, v: &ExtReal) -> String {
        v.to_string()
    }
    fn parse_value(&self, raw: &serde_json::Value) -> Option<ExtReal> {
        parse_ext(raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(v: f64) -> ExtReal {
        ExtReal::of(v)
    }

    #[test]
    fn lawvere_plus_join_is_numeric_inf() {
        let q = LawverePlus;
        assert_eq!(q.join(&x(3.0), &x(5.0)), x(3.0));
        assert_eq!(q.meet(&x(3.0), &x(5.0)), x(5.0));
        assert_eq!(q.join_all([x(3.0), x(5.0)]), x(3.0));
        assert_eq!(q.join_all([]), ExtReal::INFINITY);
        assert_eq!(q.meet_all([]), x(0.0));
        assert!(q.leq(&x(5.0), &x(3.0)));
    }

    #[test]
    fn lawvere_plus_hom() {
        let q = LawverePlus;
        assert_eq!(q.hom(&x(3.0), &x(5.0)), x(2.0));
        assert_eq!(q.hom(&x(5.0), &x(3.0)), x(0.0));
        assert_eq!(q.hom(&x(4.0), &ExtReal::INFINITY), ExtReal::INFINITY);
        assert_eq!(q.hom(&ExtReal::INFINITY, &x(4.0)), x(0.0));
        assert_eq!(q.hom(&ExtReal::INFINITY, &ExtReal::INFINITY), x(0.0));
        assert_eq!(q.hom(&x(5.0), &x(5.0)), q.unit());
    }

    #[test]
    fn lawvere_totally_below_numeric_rule() {
        let q = LawverePlus;
        assert!(q.totally_below(&x(0.5), &x(0.0)));
        assert!(!q.totally_below(&x(0.0), &x(0.0)));
        assert!(q.totally_below(&ExtReal::INFINITY, &x(7.0)));
        assert!(!q.totally_below(&ExtReal::INFINITY, &ExtReal::INFINITY));
    }

    #[test]
    fn lawvere_times_hom_is_fraction() {
        let q = LawvereTimes;
        assert_eq!(q.hom(&x(2.0), &x(6.0)), x(3.0));
        assert_eq!(q.hom(&x(0.0), &x(3.0)), ExtReal::INFINITY);
        assert_eq!(q.tensor(&x(0.0), &ExtReal::INFINITY), ExtReal::INFINITY);
        assert_eq!(q.tensor(&x(1.0), &x(4.5)), x(4.5));
    }

    #[test]
    fn boolean_hom_is_implication() {
        let q = Boolean2;
        for v in [false, true] {
            for w in [false, true] {
                assert_eq!(q.hom(&v, &w), !v || w);
                for u in [false, true] {
                    assert_eq!(q.leq(&u, &q.hom(&v, &w)), q.leq(&q.tensor(&u, &v), &w));
                }
            }
        }
        assert!(q.totally_below(&true, &true));
        assert!(q.totally_below(&false, &true));
        assert!(!q.totally_below(&false, &false));
    }
}
