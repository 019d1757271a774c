//! Conditions (A), (B) and constructive complete distributivity.

use serde::Serialize;

use super::{Quantale, QuantaleError};
use crate::report::{Status, ValidationReport};

/// Known answers for a quantale whose carrier cannot be enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuiltinConditions {
    pub condition_a: bool,
    pub condition_b: bool,
    pub completely_distributive: bool,
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "note", rename_all = "lowercase")]
pub enum Provenance {
    Enumerated,
    BuiltIn(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub quantale: String,
    /// `k = ⋁⇓k`.
    pub condition_a: ConditionVerdict,
    /// `k ∧ −` preserves joins.
    pub condition_b: ConditionVerdict,
    /// Every `v = ⋁⇓v`.
    pub completely_distributive: ConditionVerdict,
    pub provenance: Provenance,
}

impl ConditionReport {
    /// A failing (B) is advisory unless `strict_b` is set.
    pub fn to_validation_report(&self, strict_b: bool) -> ValidationReport {
        let detail = match &self.provenance {
            Provenance::Enumerated => "enumerated".to_string(),
            Provenance::BuiltIn(note) => format!("built in: {note}"),
        };
        let witness = |v: &ConditionVerdict| v.witness.as_ref().map(|w| format!("{{{}}}", w.join(",")));
        let mut r = ValidationReport::new();
        r.record("condition A", (!self.condition_a.holds).then(|| witness(&self.condition_a).unwrap_or_default()));
        r = r.with_detail(detail.clone());
        let b_status = match (self.condition_b.holds, strict_b) {
            (true, _) => Status::Pass,
            (false, true) => Status::Fail,
            (false, false) => Status::Advisory,
        };
        r.push("condition B", b_status, witness(&self.condition_b));
        r = r.with_detail(detail.clone());
        r.push(
            "completely distributive",
            if self.completely_distributive.holds { Status::Pass } else { Status::Advisory },
            witness(&self.completely_distributive),
        );
        r.with_detail(detail)
    }
}

/// Decides (A), (B) and complete distributivity.
///
/// Quantales with built-in answers report those unless `force_enumeration`
/// is set; forcing enumeration on an infinite carrier is an error.
pub fn check_conditions<Q: Quantale>(
    q: &Q,
    force_enumeration: bool,
) -> Result<ConditionReport, QuantaleError> {
    match (q.elements(), q.builtin_conditions()) {
        (_, Some(b)) if !force_enumeration => Ok(ConditionReport {
            quantale: q.name(),
            condition_a: ConditionVerdict { holds: b.condition_a, witness: None },
            condition_b: ConditionVerdict { holds: b.condition_b, witness: None },
            completely_distributive: ConditionVerdict {
                holds: b.completely_distributive,
                witness: None,
            },
            provenance: Provenance::BuiltIn(b.note.to_string()),
        }),
        (Some(elements), _) => Ok(enumerate(q, &elements)),
        (None, _) => Err(QuantaleError::AnalyticNotEnumerable(q.name())),
    }
}

fn way_below<Q: Quantale>(q: &Q, elements: &[Q::Value], v: &Q::Value) -> Vec<Q::Value> {
    elements
        .iter()
        .filter(|u| q.totally_below(u, v))
        .cloned()
        .collect()
}

fn enumerate<Q: Quantale>(q: &Q, elements: &[Q::Value]) -> ConditionReport {
    let k = q.unit();
    let approximated = |v: &Q::Value| q.join_all(way_below(q, elements, v)) == *v;

    let condition_a = ConditionVerdict {
        holds: approximated(&k),
        witness: None,
    };

    let mut b_witness = None;
    'outer: for (i, a) in elements.iter().enumerate() {
        for b in &elements[i + 1..] {
            let lhs = q.meet(&k, &q.join(a, b));
            let rhs = q.join(&q.meet(&k, a), &q.meet(&k, b));
            if lhs != rhs {
                b_witness = Some(vec![q.format_value(a), q.format_value(b)]);
                break 'outer;
            }
        }
    }
    // k ∧ ⊥ = ⊥ always holds in a lattice, so pairs suffice on finite carriers
    let condition_b = ConditionVerdict {
        holds: b_witness.is_none(),
        witness: b_witness,
    };

    let ccd_fail = elements.iter().find(|v| !approximated(v));
    let completely_distributive = ConditionVerdict {
        holds: ccd_fail.is_none(),
        witness: ccd_fail.map(|v| vec![q.format_value(v)]),
    };

    ConditionReport {
        quantale: q.name(),
        condition_a,
        condition_b,
        completely_distributive,
        provenance: Provenance::Enumerated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::{
        free_quantale, Boolean2, FiniteMonoid, FiniteQuantale, LawverePlus, LawvereTimes,
    };

    #[test]
    fn m3bar_has_a_not_b() {
        let q = FiniteQuantale::m3bar();
        let r = check_conditions(&q, false).unwrap();
        assert!(r.condition_a.holds);
        assert!(!r.condition_b.holds);
        assert_eq!(r.condition_b.witness, Some(vec!["1".to_string(), "2".to_string()]));
        assert!(!r.completely_distributive.holds);
        assert!(q.totally_below(&q.el("k"), &q.el("k")));
        assert_eq!(r.provenance, Provenance::Enumerated);
    }

    #[test]
    fn analytic_quantales_use_builtins() {
        let r = check_conditions(&LawverePlus, false).unwrap();
        assert!(r.condition_a.holds && r.condition_b.holds);
        assert!(matches!(r.provenance, Provenance::BuiltIn(_)));
        assert!(check_conditions(&LawvereTimes, false).unwrap().condition_b.holds);
        assert!(matches!(
            check_conditions(&LawverePlus, true),
            Err(QuantaleError::AnalyticNotEnumerable(_))
        ));
    }

    #[test]
    fn boolean_enumeration_agrees_with_builtin() {
        let built = check_conditions(&Boolean2, false).unwrap();
        let counted = check_conditions(&Boolean2, true).unwrap();
        assert_eq!(built.condition_a, counted.condition_a);
        assert_eq!(built.condition_b, counted.condition_b);
        assert_eq!(counted.provenance, Provenance::Enumerated);
    }

    #[test]
    fn free_z2_is_a_frame() {
        let q = free_quantale(&FiniteMonoid::cyclic(2), "free:Z2").unwrap();
        let r = check_conditions(&q, false).unwrap();
        assert!(r.condition_a.holds && r.condition_b.holds && r.completely_distributive.holds);
    }

    #[test]
    fn strict_b_controls_status() {
        let r = check_conditions(&FiniteQuantale::m3bar(), false).unwrap();
        assert!(r.to_validation_report(false).all_passed());
        let strict = r.to_validation_report(true);
        assert!(!strict.all_passed());
        assert_eq!(strict.get("condition B").unwrap().witness.as_deref(), Some("{1,2}"));
    }
}
