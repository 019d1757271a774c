//! Lax homomorphisms of quantales and change of base.

use super::{ExtReal, FiniteQuantale, LawverePlus, LawvereTimes, Quantale, QuantaleError};
use crate::report::ValidationReport;

/// A map `h: V → W` to be checked for `w-unit ≤ h(k)` and
/// `h(u) ⊠ h(v) ≤ h(u ⊗ v)`.
pub struct LaxHom<'a, S: Quantale, T: Quantale> {
    pub name: String,
    pub source: &'a S,
    pub target: &'a T,
    map: Box<dyn Fn(&S::Value) -> T::Value + 'a>,
}

impl<'a, S: Quantale, T: Quantale> LaxHom<'a, S, T> {
    pub fn new(
        name: impl Into<String>,
        source: &'a S,
        target: &'a T,
        map: impl Fn(&S::Value) -> T::Value + 'a,
    ) -> Self {
        LaxHom {
            name: name.into(),
            source,
            target,
            map: Box::new(map),
        }
    }

    pub fn apply(&self, v: &S::Value) -> T::Value {
        (self.map)(v)
    }
}

impl<'a> LaxHom<'a, FiniteQuantale, FiniteQuantale> {
    /// A tabulated map between finite quantales, `table[i]` being the image of element `i`.
    pub fn from_table(
        name: impl Into<String>,
        source: &'a FiniteQuantale,
        target: &'a FiniteQuantale,
        table: Vec<usize>,
    ) -> Result<Self, QuantaleError> {
        if table.len() != source.len() {
            return Err(QuantaleError::CarrierMismatch(format!(
                "table has {} entries for {} source elements",
                table.len(),
                source.len()
            )));
        }
        if let Some(bad) = table.iter().find(|&&t| t >= target.len()) {
            return Err(QuantaleError::CarrierMismatch(format!(
                "image index {bad} outside target carrier"
            )));
        }
        Ok(LaxHom::new(name, source, target, move |v: &usize| table[*v]))
    }
}

pub struct LaxHomReport {
    pub report: ValidationReport,
    pub strict: bool,
    pub strict_witness: Option<String>,
}

/// Checks monotonicity, the unit law and lax multiplicativity on `samples`
/// (the whole carrier, for finite sources), then strictness separately.
/// Products of extended reals are compared up to rounding.
pub fn check_lax_hom<S: Quantale, T: Quantale>(
    h: &LaxHom<'_, S, T>,
    samples: &[S::Value],
) -> LaxHomReport {
    let (s, t) = (h.source, h.target);
    let f = |v: &S::Value| s.format_value(v);
    let pairs = || samples.iter().flat_map(|a| samples.iter().map(move |b| (a, b)));
    let mut report = ValidationReport::new();

    report.record(
        "monotone",
        pairs()
            .find(|(a, b)| s.leq(a, b) && !t.leq(&h.apply(a), &h.apply(b)))
            .map(|(a, b)| format!("{} ≤ {} but images are not ordered", f(a), f(b))),
    );
    let hk = h.apply(&s.unit());
    report.record(
        "unit",
        (!t.leq(&t.unit(), &hk)).then(|| format!("h(k) = {}", t.format_value(&hk))),
    );
    report.record(
        "lax multiplicative",
        pairs()
            .find(|(a, b)| {
                let (lhs, rhs) = (t.tensor(&h.apply(a), &h.apply(b)), h.apply(&s.tensor(a, b)));
                !t.leq(&lhs, &rhs) && !t.approx_equiv(&lhs, &rhs)
            })
            .map(|(a, b)| format!("({}, {})", f(a), f(b))),
    );

    let strict_witness = if !t.approx_equiv(&t.unit(), &hk) {
        Some(format!("h(k) = {}", t.format_value(&hk)))
    } else {
        pairs()
            .find(|(a, b)| {
                !t.approx_equiv(&t.tensor(&h.apply(a), &h.apply(b)), &h.apply(&s.tensor(a, b)))
            })
            .map(|(a, b)| {
                format!(
                    "h({a}⊗{b}) = {} but h({a})⊠h({b}) = {}",
                    t.format_value(&h.apply(&s.tensor(a, b))),
                    t.format_value(&t.tensor(&h.apply(a), &h.apply(b))),
                    a = f(a),
                    b = f(b)
                )
            })
    };
    LaxHomReport {
        report,
        strict: strict_witness.is_none(),
        strict_witness,
    }
}

/// `e: R+ → R×`, `v ↦ exp v`.
pub fn exp_hom<'a>() -> LaxHom<'a, LawverePlus, LawvereTimes> {
    LaxHom::new("exp", &LawverePlus, &LawvereTimes, |v: &ExtReal| v.exp_ext())
}

/// `log°: R× → R+`, right adjoint to [`exp_hom`].
pub fn log_circ_hom<'a>() -> LaxHom<'a, LawvereTimes, LawverePlus> {
    LaxHom::new("log°", &LawvereTimes, &LawverePlus, |v: &ExtReal| v.log_circ())
}

/// Applies `h` to every value of a norm assignment.
pub fn change_of_base_norms<S: Quantale, T: Quantale>(
    h: &LaxHom<'_, S, T>,
    norms: &[S::Value],
) -> Vec<T::Value> {
    norms.iter().map(|v| h.apply(v)).collect()
}
