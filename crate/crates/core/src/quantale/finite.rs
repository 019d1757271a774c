//! Table-defined quantales.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::lattice::FiniteLattice;
use super::Quantale;
use crate::report::{Status, ValidationReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuantaleError {
    #[error("malformed quantale table: {0}")]
    MalformedTable(String),
    #[error("quantale axioms fail:\n{0}")]
    AxiomsFailed(ValidationReport),
    #[error("{0} has an infinite carrier; its conditions are built in, not enumerable")]
    AnalyticNotEnumerable(String),
    #[error("monoid has {0} elements; the free quantale is capped at {1}")]
    MonoidTooLarge(usize, usize),
    #[error("malformed monoid: {0}")]
    MalformedMonoid(String),
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
}

/// On-disk form: `{"elements":[..], "leq":[[a,b],..], "tensor":[[..]], "unit":"k"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuantaleFile {
    pub elements: Vec<String>,
    pub leq: Vec<(String, String)>,
    pub tensor: Vec<Vec<String>>,
    pub unit: String,
}

/// A loaded table whose shape is sound but whose axioms are not yet checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantaleTable {
    pub names: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub tensor: Vec<Vec<usize>>,
    pub unit: usize,
}

impl QuantaleTable {
    pub fn from_file(file: &QuantaleFile) -> Result<Self, QuantaleError> {
        let n = file.elements.len();
        if n == 0 {
            return Err(QuantaleError::MalformedTable("no elements".into()));
        }
        let mut index = HashMap::new();
        for (i, name) in file.elements.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(QuantaleError::MalformedTable(format!(
                    "duplicate element `{name}`"
                )));
            }
        }
        let lookup = |name: &str, key: &str| {
            index.get(name).copied().ok_or_else(|| {
                QuantaleError::MalformedTable(format!("unknown element `{name}` in `{key}`"))
            })
        };
        let mut leq = vec![vec![false; n]; n];
        for (a, b) in &file.leq {
            leq[lookup(a, "leq")?][lookup(b, "leq")?] = true;
        }
        if file.tensor.len() != n || file.tensor.iter().any(|row| row.len() != n) {
            return Err(QuantaleError::MalformedTable(format!(
                "tensor must be {n}×{n}"
            )));
        }
        let tensor = file
            .tensor
            .iter()
            .map(|row| row.iter().map(|e| lookup(e, "tensor")).collect())
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        let unit = lookup(&file.unit, "unit")?;
        Ok(QuantaleTable {
            names: file.elements.clone(),
            leq,
            tensor,
            unit,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, QuantaleError> {
        let file: QuantaleFile = serde_json::from_str(text)
            .map_err(|e| QuantaleError::MalformedTable(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> QuantaleFile {
        let n = self.len();
        let name = |i: usize| self.names[i].clone();
        let mut leq = vec![];
        for a in 0..n {
            for b in 0..n {
                if self.leq[a][b] {
                    leq.push((name(a), name(b)));
                }
            }
        }
        QuantaleFile {
            elements: self.names.clone(),
            leq,
            tensor: self
                .tensor
                .iter()
                .map(|row| row.iter().map(|&e| name(e)).collect())
                .collect(),
            unit: name(self.unit),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn first<T>(mut it: impl Iterator<Item = T>) -> Option<T> {
    it.next()
}

/// Checks every quantale axiom separately. Each failed check carries the
/// first witness in index order.
pub fn check_quantale_axioms(t: &QuantaleTable) -> ValidationReport {
    let n = t.len();
    let nm = |i: usize| t.names[i].as_str();
    let le = |a: usize, b: usize| t.leq[a][b];
    let ten = |a: usize, b: usize| t.tensor[a][b];
    let mut r = ValidationReport::new();
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    let triples =
        || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));

    r.record(
        "order reflexive",
        first((0..n).filter(|&a| !le(a, a))).map(|a| format!("{} ≰ {}", nm(a), nm(a))),
    );
    r.record(
        "order antisymmetric",
        first(pairs().filter(|&(a, b)| a != b && le(a, b) && le(b, a)))
            .map(|(a, b)| format!("{} ≤ {} ≤ {}", nm(a), nm(b), nm(a))),
    );
    r.record(
        "order transitive",
        first(triples().filter(|&(a, b, c)| le(a, b) && le(b, c) && !le(a, c)))
            .map(|(a, b, c)| format!("{} ≤ {} ≤ {} but {} ≰ {}", nm(a), nm(b), nm(c), nm(a), nm(c))),
    );
    r.record(
        "commutative",
        first(pairs().filter(|&(a, b)| ten(a, b) != ten(b, a))).map(|(a, b)| {
            format!(
                "{a}⊗{b} = {} but {b}⊗{a} = {}",
                nm(ten(a, b)),
                nm(ten(b, a)),
                a = nm(a),
                b = nm(b)
            )
        }),
    );
    r.record(
        "associative",
        first(triples().filter(|&(a, b, c)| ten(ten(a, b), c) != ten(a, ten(b, c)))).map(
            |(a, b, c)| {
                format!(
                    "({a}⊗{b})⊗{c} = {} but {a}⊗({b}⊗{c}) = {}",
                    nm(ten(ten(a, b), c)),
                    nm(ten(a, ten(b, c))),
                    a = nm(a),
                    b = nm(b),
                    c = nm(c)
                )
            },
        ),
    );
    r.record(
        "unit",
        first((0..n).filter(|&a| ten(t.unit, a) != a || ten(a, t.unit) != a))
            .map(|a| format!("k⊗{} = {}", nm(a), nm(ten(t.unit, a)))),
    );

    match FiniteLattice::from_order(t.leq.clone()) {
        Ok(lat) => {
            r.record("complete lattice", None);
            let bot = lat.bottom();
            r.record(
                "bottom absorbing",
                first((0..n).filter(|&a| ten(a, bot) != bot))
                    .map(|a| format!("{}⊗{} = {}", nm(a), nm(bot), nm(ten(a, bot)))),
            );
            r.record(
                "distributes over joins",
                first(triples().filter(|&(u, a, b)| {
                    ten(u, lat.join(a, b)) != lat.join(ten(u, a), ten(u, b))
                }))
                .map(|(u, a, b)| {
                    format!(
                        "{u}⊗({a}∨{b}) = {} but ({u}⊗{a})∨({u}⊗{b}) = {}",
                        nm(ten(u, lat.join(a, b))),
                        nm(lat.join(ten(u, a), ten(u, b))),
                        u = nm(u),
                        a = nm(a),
                        b = nm(b)
                    )
                }),
            );
        }
        Err(defect) => {
            r.record("complete lattice", Some(format!("{defect:?}")));
            for name in ["bottom absorbing", "distributes over joins"] {
                r.push(name, Status::Advisory, None);
                r = r.with_detail("skipped: order is not a lattice");
            }
        }
    }
    r
}

/// A validated finite commutative unital quantale with tabulated internal hom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuantale {
    table: QuantaleTable,
    lattice: FiniteLattice,
    hom: Vec<Vec<usize>>,
    label: String,
}

const M3BAR_JSON: &str = include_str!("../../fixtures/m3bar.json");

impl FiniteQuantale {
    pub fn new(table: QuantaleTable) -> Result<Self, QuantaleError> {
        Self::with_label(table, "finite")
    }

    pub fn with_label(table: QuantaleTable, label: &str) -> Result<Self, QuantaleError> {
        let report = check_quantale_axioms(&table);
        if !report.all_passed() {
            return Err(QuantaleError::AxiomsFailed(report));
        }
        let lattice = FiniteLattice::from_order(table.leq.clone())
            .expect("lattice already validated");
        let n = table.len();
        let hom = (0..n)
            .map(|v| {
                (0..n)
                    .map(|w| {
                        lattice.join_all((0..n).filter(|&u| lattice.leq(table.tensor[u][v], w)))
                    })
                    .collect()
            })
            .collect();
        Ok(FiniteQuantale {
            table,
            lattice,
            hom,
            label: label.to_string(),
        })
    }

    pub fn from_json(text: &str) -> Result<Self, QuantaleError> {
        Self::new(QuantaleTable::from_json(text)?)
    }

    /// The seven-element quantale satisfying condition (A) but not (B).
    pub fn m3bar() -> Self {
        let table = QuantaleTable::from_json(M3BAR_JSON).expect("bundled table parses");
        Self::with_label(table, "m3bar").expect("bundled table is a quantale")
    }

    pub fn table(&self) -> &QuantaleTable {
        &self.table
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Element index by name; panics on unknown names.
    pub fn el(&self, name: &str) -> usize {
        self.table
            .index_of(name)
            .unwrap_or_else(|| panic!("no element `{name}`"))
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.table.names[i]
    }
}

impl Quantale for FiniteQuantale {
    type Value = usize;

    fn name(&self) -> String {
        self.label.clone()
    }
    fn leq(&self, a: &usize, b: &usize) -> bool {
        self.lattice.leq(*a, *b)
    }
    fn join(&self, a: &usize, b: &usize) -> usize {
        self.lattice.join(*a, *b)
    }
    fn meet(&self, a: &usize, b: &usize) -> usize {
        self.lattice.meet(*a, *b)
    }
    fn bottom(&self) -> usize {
        self.lattice.bottom()
    }
    fn top(&self) -> usize {
        self.lattice.top()
    }
    fn unit(&self) -> usize {
        self.table.unit
    }
    fn tensor(&self, a: &usize, b: &usize) -> usize {
        self.table.tensor[*a][*b]
    }
    fn hom(&self, v: &usize, w: &usize) -> usize {
        self.hom[*v][*w]
    }
    fn totally_below(&self, u: &usize, v: &usize) -> bool {
        self.lattice.totally_below(*u, *v)
    }
    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.len()).collect())
    }
    fn format_value(&self, v: &usize) -> String {
        self.table.names[*v].clone()
    }
    fn parse_value(&self, raw: &serde_json::Value) -> Option<usize> {
        match raw {
            serde_json::Value::String(s) => self.table.index_of(s),
            serde_json::Value::Number(n) => self.table.index_of(&n.to_string()),
            _ => None,
        }
    }
}

/// A finite monoid given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteMonoid {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl FiniteMonoid {
    pub fn new(
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
    ) -> Result<Self, QuantaleError> {
        let n = elements.len();
        let bad = |msg: String| Err(QuantaleError::MalformedMonoid(msg));
        if n == 0 || identity >= n {
            return bad("empty monoid or identity out of range".into());
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&e| e >= n)) {
            return bad(format!("table must be {n}×{n} with entries below {n}"));
        }
        for a in 0..n {
            if table[identity][a] != a || table[a][identity] != a {
                return bad(format!("identity fails at {}", elements[a]));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!(
                            "not associative at ({}, {}, {})",
                            elements[a], elements[b], elements[c]
                        ));
                    }
                }
            }
        }
        Ok(FiniteMonoid {
            elements,
            table,
            identity,
        })
    }

    /// `Z_n` under addition.
    pub fn cyclic(n: usize) -> Self {
        let elements = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteMonoid::new(elements, table, 0).expect("cyclic group is a monoid")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&b| self.op(a, b) == self.identity && self.op(b, a) == self.identity)
    }

    pub fn is_group(&self) -> bool {
        (0..self.len()).all(|a| self.inverse(a).is_some())
    }
}

/// Largest monoid accepted by [`free_quantale`]; the carrier has `2^|M|` elements.
pub const FREE_QUANTALE_MAX_MONOID: usize = 5;

/// The powerset of a commutative monoid with `A ⊗ B = {a + b}` and `k = {0}`.
/// Subsets are encoded as bitmasks, which are also the element indices.
pub fn free_quantale(m: &FiniteMonoid, label: &str) -> Result<FiniteQuantale, QuantaleError> {
    let n = m.len();
    if n > FREE_QUANTALE_MAX_MONOID {
        return Err(QuantaleError::MonoidTooLarge(n, FREE_QUANTALE_MAX_MONOID));
    }
    if !m.is_commutative() {
        return Err(QuantaleError::MalformedMonoid("not commutative".into()));
    }
    let size = 1usize << n;
    let name = |mask: usize| {
        let parts: Vec<&str> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| m.elements[i].as_str())
            .collect();
        format!("{{{}}}", parts.join(","))
    };
    let leq = (0..size)
        .map(|a| (0..size).map(|b| a & !b == 0).collect())
        .collect();
    let tensor = (0..size)
        .map(|a| {
            (0..size)
                .map(|b| {
                    let mut out = 0;
                    for i in (0..n).filter(|i| a & (1 << i) != 0) {
                        for j in (0..n).filter(|j| b & (1 << j) != 0) {
                            out |= 1 << m.op(i, j);
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    let table = QuantaleTable {
        names: (0..size).map(name).collect(),
        leq,
        tensor,
        unit: 1 << m.identity,
    };
    FiniteQuantale::with_label(table, label)
}
