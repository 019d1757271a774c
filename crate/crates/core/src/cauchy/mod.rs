//! Cauchy sequences and normed colimits in finite normed categories.
//!
//! A sequence is an explicit prefix `x_0 → … → x_K` followed by a tail that
//! repeats either `1_{x_K}` or an idempotent `e` on `x_K`. Every
//! `⋁_N ⋀_{n≥N}` therefore stabilises by `N = K + 1` and is computed by a
//! finite scan.

mod forward;
mod presheaf;

use thiserror::Error;

use crate::enumerate::CarrierTooLarge;
use crate::normed_cat::{CategoryError, NormedCategory};
use crate::normed_sets::NormedSetError;
use crate::quantale::Quantale;
use crate::report::{Status, ValidationReport};

pub use forward::{forward_limit_finite, forward_limit_lazy, LazyForwardOptions, PointSequence};
pub use presheaf::{
    check_natural, check_presheaf, compose_natural, natural_norm, natural_transformations,
    normed_presheaf_witness, presheaf_cauchy_colimit, small_test_functors, Natural, Presheaf,
    PresheafColimit, PresheafOptions, PresheafSequence, PresheafTail,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CauchyError {
    #[error("malformed sequence: {0}")]
    MalformedSequence(String),
    #[error("{0} is not idempotent")]
    NotIdempotent(String),
    #[error("not a cocone: {0}")]
    NotACocone(String),
    #[error("not a functor: {0}")]
    NotAFunctor(String),
    #[error("not natural: {0}")]
    NotNatural(String),
    #[error("tail estimate for probe {probe} moved by {spread:e} between windows; increase the depth beyond {depth}")]
    DepthTooSmall { probe: String, spread: f64, depth: u64 },
    #[error(transparent)]
    CarrierTooLarge(#[from] CarrierTooLarge),
    #[error(transparent)]
    NormedSet(#[from] NormedSetError),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphTail {
    /// `x_K = x_{K+1} = …` along identities.
    Identity,
    /// `x_K = x_{K+1} = …` along an idempotent endomorphism.
    Idempotent(usize),
}

/// A sequence `x_0 → x_1 → …` in a finite category.
#[derive(Debug, Clone)]
pub struct MorphSequence<'a, V> {
    pub host: &'a NormedCategory<V>,
    pub start: usize,
    /// `prefix[n]: x_n → x_{n+1}` for `n < K`.
    pub prefix: Vec<usize>,
    pub tail: MorphTail,
}

impl<'a, V: Clone> MorphSequence<'a, V> {
    pub fn new(
        host: &'a NormedCategory<V>,
        start: usize,
        prefix: Vec<usize>,
        tail: MorphTail,
    ) -> Result<Self, CauchyError> {
        if start >= host.object_count() {
            return Err(CauchyError::MalformedSequence(format!("no object {start}")));
        }
        let mut x = start;
        for (n, &f) in prefix.iter().enumerate() {
            if f >= host.morphism_count() || host.dom(f) != x {
                return Err(CauchyError::MalformedSequence(format!(
                    "step {n} does not start at {}",
                    host.objects[x]
                )));
            }
            x = host.cod(f);
        }
        if let MorphTail::Idempotent(e) = tail {
            if e >= host.morphism_count() || host.dom(e) != x || host.cod(e) != x {
                return Err(CauchyError::MalformedSequence(format!(
                    "tail must be an endomorphism of {}",
                    host.objects[x]
                )));
            }
            if host.comp(e, e) != e {
                return Err(CauchyError::NotIdempotent(host.name(e).to_string()));
            }
        }
        Ok(MorphSequence {
            host,
            start,
            prefix,
            tail,
        })
    }

    /// The constant sequence at an idempotent `e`.
    pub fn constant(host: &'a NormedCategory<V>, e: usize) -> Result<Self, CauchyError> {
        Self::new(host, host.dom(e), vec![], MorphTail::Idempotent(e))
    }

    /// Index `K` where the tail starts.
    pub fn tail_start(&self) -> usize {
        self.prefix.len()
    }

    /// `x_n` for any `n`.
    pub fn object(&self, n: usize) -> usize {
        match n.min(self.tail_start()) {
            0 => self.start,
            n => self.host.cod(self.prefix[n - 1]),
        }
    }

    /// `x_n → x_{n+1}` for any `n`.
    pub fn connecting(&self, n: usize) -> usize {
        if n < self.tail_start() {
            return self.prefix[n];
        }
        match self.tail {
            MorphTail::Identity => self.host.id(self.object(n)),
            MorphTail::Idempotent(e) => e,
        }
    }

    /// `s_{m,n}: x_m → x_n` for `m ≤ n`.
    pub fn composite(&self, m: usize, n: usize) -> usize {
        assert!(m <= n, "s_{{m,n}} needs m ≤ n");
        let k = self.tail_start();
        // past K the tail repeats, so at most one tail step matters
        let n = n.min(k.max(m) + 1);
        (m..n).fold(self.host.id(self.object(m)), |acc, i| {
            self.host.comp(self.connecting(i), acc)
        })
    }

    /// The same sequence with `extra` tail steps written into the prefix.
    pub fn unrolled(&self, extra: usize) -> Self {
        let k = self.tail_start();
        let mut prefix = self.prefix.clone();
        prefix.extend((k..k + extra).map(|n| self.connecting(n)));
        MorphSequence {
            host: self.host,
            start: self.start,
            prefix,
            tail: self.tail,
        }
    }

    /// The value `⋁_N ⋀_{n≥m≥N} |s_{m,n}|` and whether `k` lies below it.
    pub fn cauchy_value<Q: Quantale<Value = V>>(&self, q: &Q) -> CauchyVerdict<V> {
        let k = self.tail_start();
        let horizon = k + 2;
        let value = q.join_all((0..=k + 1).map(|n0| {
            q.meet_all((n0..=horizon).flat_map(|m| {
                (m..=horizon).map(move |n| self.host.norm[self.composite(m, n)].clone())
            }))
        }));
        CauchyVerdict {
            cauchy: q.is_k(&value),
            value,
        }
    }

    pub fn is_cauchy<Q: Quantale<Value = V>>(&self, q: &Q) -> bool {
        self.cauchy_value(q).cauchy
    }

    /// Morphisms `γ: x_K → y` that satisfy the tail condition `γ·e = γ`.
    fn tail_legs(&self, y: usize) -> Vec<usize> {
        let xk = self.object(self.tail_start());
        self.host
            .hom(xk, y)
            .into_iter()
            .filter(|&g| match self.tail {
                MorphTail::Identity => true,
                MorphTail::Idempotent(e) => self.host.comp(g, e) == g,
            })
            .collect()
    }

    /// Every cocone over the sequence.
    pub fn cocones(&self) -> Vec<Cocone> {
        (0..self.host.object_count())
            .flat_map(|y| {
                self.tail_legs(y)
                    .into_iter()
                    .map(move |g| Cocone::from_last(self, y, g))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CauchyVerdict<V> {
    pub value: V,
    pub cauchy: bool,
}

/// Legs `γ_n: x_n → y` for `n ≤ K`; later legs all equal `γ_K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cocone {
    pub vertex: usize,
    pub legs: Vec<usize>,
}

impl Cocone {
    /// The cocone determined by its last leg, `γ_n = γ_K·s_{n,K}`.
    pub fn from_last<V: Clone>(seq: &MorphSequence<'_, V>, vertex: usize, last: usize) -> Self {
        let k = seq.tail_start();
        let legs = (0..=k)
            .map(|n| seq.host.comp(last, seq.composite(n, k)))
            .collect();
        Cocone { vertex, legs }
    }

    pub fn last(&self) -> usize {
        *self.legs.last().expect("a cocone has at least one leg")
    }

    /// `γ_n` for any `n`.
    pub fn leg(&self, n: usize) -> usize {
        self.legs[n.min(self.legs.len() - 1)]
    }
}

pub fn check_cocone<V: Clone>(seq: &MorphSequence<'_, V>, c: &Cocone) -> Result<(), CauchyError> {
    let host = seq.host;
    let k = seq.tail_start();
    let bad = |msg: String| Err(CauchyError::NotACocone(msg));
    if c.legs.len() != k + 1 {
        return bad(format!("expected {} legs, got {}", k + 1, c.legs.len()));
    }
    for (n, &g) in c.legs.iter().enumerate() {
        if g >= host.morphism_count() || host.dom(g) != seq.object(n) || host.cod(g) != c.vertex {
            return bad(format!("leg {n} is not a morphism {} → {}", host.objects[seq.object(n)], host.objects.get(c.vertex).map_or("?", |s| s)));
        }
    }
    for n in 0..k {
        if host.comp(c.legs[n + 1], seq.prefix[n]) != c.legs[n] {
            return bad(format!("γ_{}·s_{} ≠ γ_{}", n + 1, n, n));
        }
    }
    if let MorphTail::Idempotent(e) = seq.tail {
        if host.comp(c.last(), e) != c.last() {
            return bad(format!("γ_K·{} ≠ γ_K", host.name(e)));
        }
    }
    Ok(())
}

/// `⋁_N ⋀_{n≥N} |f·γ_n|`, with `f = 1` giving the k-cocone value.
pub fn eventual_norm<Q: Quantale>(
    q: &Q,
    seq: &MorphSequence<'_, Q::Value>,
    c: &Cocone,
    f: usize,
) -> Q::Value {
    let host = seq.host;
    let norms: Vec<Q::Value> = c
        .legs
        .iter()
        .map(|&g| host.norm[host.comp(f, g)].clone())
        .collect();
    q.join_all((0..norms.len()).map(|n0| q.meet_all(norms[n0..].iter().cloned())))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColimitVerdict<V> {
    pub c1: bool,
    pub c2a: bool,
    pub c2b: bool,
    /// `⋁_N ⋀_{n≥N} |γ_n|`.
    pub cocone_value: V,
    /// A morphism `f` out of the vertex with `|f| ≱ ⋁_N ⋀_{n≥N} |f·γ_n|`.
    pub c2b_witness: Option<usize>,
    pub report: ValidationReport,
}

impl<V> ColimitVerdict<V> {
    pub fn is_normed_colimit(&self) -> bool {
        self.c1 && self.c2a && self.c2b
    }
}

/// The first cocone that does not factor uniquely through `c`.
fn universality_witness<V: Clone>(seq: &MorphSequence<'_, V>, c: &Cocone) -> Option<String> {
    let host = seq.host;
    for z in 0..host.object_count() {
        let factors = host.hom(c.vertex, z);
        for alpha in seq.tail_legs(z) {
            let count = factors
                .iter()
                .filter(|&&u| host.comp(u, c.last()) == alpha)
                .count();
            if count != 1 {
                return Some(format!(
                    "cocone at {} with last leg {} has {} factorizations",
                    host.objects[z],
                    host.name(alpha),
                    count
                ));
            }
        }
    }
    None
}

/// Checks (C1) the ordinary universal property, (C2a) `k ≤ ⋁_N ⋀_{n≥N} |γ_n|`
/// and (C2b) `⋁_N ⋀_{n≥N} |f·γ_n| ≤ |f|` for every `f` out of the vertex.
pub fn verify_normed_colimit<Q: Quantale>(
    q: &Q,
    seq: &MorphSequence<'_, Q::Value>,
    c: &Cocone,
) -> Result<ColimitVerdict<Q::Value>, CauchyError> {
    check_cocone(seq, c)?;
    let host = seq.host;
    let mut report = ValidationReport::new();

    let c1_witness = universality_witness(seq, c);
    let c1 = c1_witness.is_none();
    report.record("C1 colimit", c1_witness);

    let cocone_value = eventual_norm(q, seq, c, host.id(c.vertex));
    let c2a = q.leq(&q.unit(), &cocone_value);
    report.record(
        "C2a k-cocone",
        (!c2a).then(|| format!("eventual leg norm {}", q.format_value(&cocone_value))),
    );

    let c2b_witness = host
        .out_of(c.vertex)
        .into_iter()
        .find(|&f| !q.leq(&eventual_norm(q, seq, c, f), &host.norm[f]));
    let c2b = c2b_witness.is_none();
    report.record(
        "C2b norm reflection",
        c2b_witness.map(|f| format!("f = {}", host.name(f))),
    );

    Ok(ColimitVerdict {
        c1,
        c2a,
        c2b,
        cocone_value,
        c2b_witness,
        report,
    })
}

/// `|f| = ⋁_N ⋀_{n≥N} |f·γ_n|` for every `f` out of the vertex.
pub fn combined_c2<Q: Quantale>(q: &Q, seq: &MorphSequence<'_, Q::Value>, c: &Cocone) -> bool {
    seq.host
        .out_of(c.vertex)
        .into_iter()
        .all(|f| q.equiv(&eventual_norm(q, seq, c, f), &seq.host.norm[f]))
}

/// Cocones with the ordinary universal property.
pub fn ordinary_colimits<V: Clone>(seq: &MorphSequence<'_, V>) -> Vec<Cocone> {
    seq.cocones()
        .into_iter()
        .filter(|c| universality_witness(seq, c).is_none())
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormedColimits {
    pub colimits: Vec<Cocone>,
    /// Pairwise k-isomorphism of the vertices found.
    pub uniqueness: ValidationReport,
}

/// Every cocone that is a normed colimit, and a check that their vertices
/// are pairwise k-isomorphic.
pub fn find_normed_colimits<Q: Quantale>(
    q: &Q,
    seq: &MorphSequence<'_, Q::Value>,
) -> NormedColimits {
    let colimits: Vec<Cocone> = seq
        .cocones()
        .into_iter()
        .filter(|c| {
            verify_normed_colimit(q, seq, c)
                .map(|v| v.is_normed_colimit())
                .unwrap_or(false)
        })
        .collect();
    let host = seq.host;
    let mut uniqueness = ValidationReport::new();
    let clash = colimits.iter().enumerate().find_map(|(i, a)| {
        colimits[i + 1..]
            .iter()
            .find(|b| host.k_iso_between(q, a.vertex, b.vertex).is_none())
            .map(|b| format!("{} and {}", host.objects[a.vertex], host.objects[b.vertex]))
    });
    uniqueness.record("vertices pairwise k-isomorphic", clash);
    if colimits.len() < 2 {
        uniqueness = uniqueness.with_detail(format!("{} candidate(s)", colimits.len()));
    }
    NormedColimits {
        colimits,
        uniqueness,
    }
}

/// A splitting `t·r = e`, `r·t = 1_y` of an idempotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Splitting {
    pub object: usize,
    pub r: usize,
    pub t: usize,
}

/// All splittings of `e: x → x`.
pub fn splittings<V: Clone>(host: &NormedCategory<V>, e: usize) -> Vec<Splitting> {
    let x = host.dom(e);
    let mut out = vec![];
    for y in 0..host.object_count() {
        for r in host.hom(x, y) {
            for t in host.hom(y, x) {
                if host.comp(t, r) == e && host.comp(r, t) == host.id(y) {
                    out.push(Splitting { object: y, r, t });
                }
            }
        }
    }
    out
}

/// Idempotent endomorphisms of the host.
pub fn idempotents<V: Clone>(host: &NormedCategory<V>) -> Vec<usize> {
    (0..host.morphism_count())
        .filter(|&f| host.dom(f) == host.cod(f) && host.comp(f, f) == f)
        .collect()
}

/// For a constant sequence at `e`, compares the existence of an ordinary
/// colimit with `e` splitting, and for each splitting compares the normed
/// colimit verdict of the cocone `r` with `r` and `t` both being k-morphisms.
pub fn splitting_report<Q: Quantale>(q: &Q, host: &NormedCategory<Q::Value>, e: usize) -> ValidationReport {
    let seq = MorphSequence::constant(host, e).expect("e is idempotent");
    let split = splittings(host, e);
    let has_colimit = !ordinary_colimits(&seq).is_empty();
    let mut r = ValidationReport::new();
    r.record(
        "colimit exists iff e splits",
        (has_colimit != !split.is_empty()).then(|| {
            format!(
                "{}: colimit {} but {} splittings",
                host.name(e),
                if has_colimit { "exists" } else { "missing" },
                split.len()
            )
        }),
    );
    let cauchy = seq.is_cauchy(q);
    for s in &split {
        let cocone = Cocone::from_last(&seq, s.object, s.r);
        let verdict = verify_normed_colimit(q, &seq, &cocone).expect("r is a cocone");
        let ks = host.is_k_morphism(q, s.r) && host.is_k_morphism(q, s.t);
        let name = format!("normed colimit iff r, t are k-morphisms ({} via {}, {})", host.name(e), host.name(s.r), host.name(s.t));
        if !cauchy {
            r.push(name, Status::Advisory, None);
            r = r.with_detail("sequence is not Cauchy");
            continue;
        }
        r.record(
            name,
            (verdict.is_normed_colimit() != ks).then(|| {
                format!(
                    "normed colimit: {}, k-morphisms: {}",
                    verdict.is_normed_colimit(),
                    ks
                )
            }),
        );
    }
    r
}
