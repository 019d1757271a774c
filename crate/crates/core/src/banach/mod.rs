//! Contractive endofunctors over `R+`: analytic iteration with a-priori
//! certificates, and exact fixed-point search in finite normed categories.

mod expr;

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cauchy::{
    find_normed_colimits, ordinary_colimits, verify_normed_colimit, CauchyError, Cocone,
    MorphSequence, MorphTail,
};
use crate::normed_cat::{check_functor, check_s, check_sop, CategoryError, Functor, NormedCategory};
use crate::quantale::{ExtReal, LawverePlus, Quantale};
use crate::report::{Status, ValidationReport};
use crate::vcat::LazyMetricSpace;

pub use expr::{Expr, ExprError};

/// Default number of sampled pairs in the analytic contraction check.
pub const DEFAULT_CONTRACTION_SAMPLES: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BanachError {
    #[error("Lipschitz factor {0} is outside [0, 1)")]
    LipschitzOutOfRange(f64),
    #[error("sampled pair ({x}, {y}) has ratio {ratio}, above L")]
    NonContractiveSample { x: f64, y: f64, ratio: f64 },
    #[error("the seed moves an infinite distance")]
    InfiniteSeedNorm,
    #[error("no identity or idempotent tail: {0}")]
    NoTailStructure(String),
    #[error("seed {0} is not a morphism x → Fx")]
    BadSeed(String),
    #[error("iteration did not reach the tolerance within {0} steps")]
    IterationLimit(usize),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Cauchy(#[from] CauchyError),
}

/// A map on a lazily given metric space with a claimed Lipschitz factor.
pub struct AnalyticMap<P> {
    pub name: String,
    pub phi: Box<dyn Fn(&P) -> P>,
    pub space: LazyMetricSpace<P>,
    pub lipschitz: f64,
}

impl AnalyticMap<f64> {
    /// `phi` given as an expression in `x`, on the real line.
    pub fn from_expr(src: &str, lipschitz: f64) -> Result<Self, BanachError> {
        check_lipschitz(lipschitz)?;
        let e = Expr::parse(src)?;
        Ok(AnalyticMap {
            name: src.to_string(),
            phi: Box::new(move |x| e.eval(*x)),
            space: LazyMetricSpace::euclidean(),
            lipschitz,
        })
    }

    /// Samples pairs uniformly in `[lo, hi]` and checks
    /// `d(φx, φy) ≤ L·d(x, y)` up to rounding.
    pub fn check_contraction(
        &self,
        samples: usize,
        range: (f64, f64),
        seed: u64,
    ) -> Result<ValidationReport, BanachError> {
        check_lipschitz(self.lipschitz)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let x = rng.gen_range(range.0..=range.1);
            let y = rng.gen_range(range.0..=range.1);
            let d = self.space.d(&x, &y).value();
            let dphi = self.space.d(&(self.phi)(&x), &(self.phi)(&y)).value();
            if dphi > self.lipschitz * d * (1.0 + 1e-12) + 1e-12 {
                return Err(BanachError::NonContractiveSample {
                    x,
                    y,
                    ratio: dphi / d,
                });
            }
        }
        let mut r = ValidationReport::new();
        r.push("contraction", Status::Approx, None);
        Ok(r.with_detail(format!(
            "consistent with L = {} on {samples} sampled pairs in [{}, {}]",
            self.lipschitz, range.0, range.1
        )))
    }
}

fn check_lipschitz(l: f64) -> Result<(), BanachError> {
    if (0.0..1.0).contains(&l) {
        Ok(())
    } else {
        Err(BanachError::LipschitzOutOfRange(l))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateStep {
    pub m: usize,
    pub point: f64,
    /// `L^m·|f|/(1−L)`.
    pub bound: f64,
    /// `d(x_m, x_{m+1})/(1−L)`.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixedPointCertificate {
    pub point: f64,
    pub iterations: usize,
    /// `|f| = d(x_0, φx_0)`.
    pub seed_norm: f64,
    pub bound: f64,
    pub residual: f64,
    pub steps: Vec<CertificateStep>,
}

/// Iterates until `L^m·d(x_0, φx_0)/(1−L) ≤ tolerance`.
pub fn iterate_to_fixed_point(
    map: &AnalyticMap<f64>,
    seed: f64,
    tolerance: f64,
    max_iterations: usize,
) -> Result<FixedPointCertificate, BanachError> {
    check_lipschitz(map.lipschitz)?;
    let l = map.lipschitz;
    let step = |x: f64| (map.phi)(&x);
    let seed_norm = map.space.d(&seed, &step(seed));
    if seed_norm.is_infinite() || seed_norm.value().is_nan() {
        return Err(BanachError::InfiniteSeedNorm);
    }
    let seed_norm = seed_norm.value();
    let mut x = seed;
    let mut steps = vec![];
    for m in 0..=max_iterations {
        let next = step(x);
        let bound = l.powi(m as i32) * seed_norm / (1.0 - l);
        let residual = map.space.d(&x, &next).value() / (1.0 - l);
        steps.push(CertificateStep {
            m,
            point: x,
            bound,
            residual,
        });
        if bound <= tolerance {
            return Ok(FixedPointCertificate {
                point: x,
                iterations: m,
                seed_norm,
                bound,
                residual,
                steps,
            });
        }
        x = next;
    }
    Err(BanachError::IterationLimit(max_iterations))
}

/// One geometric bound `|s_{m,n}| ≤ (L^m + … + L^{n−1})·|f|`; `n = None`
/// stands for the limit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeometricBound {
    pub m: usize,
    pub n: Option<usize>,
    pub bound: f64,
    pub measured: f64,
}

impl GeometricBound {
    pub fn holds(&self) -> bool {
        self.measured <= self.bound * (1.0 + 1e-12) + 1e-15
    }
}

/// Bounds for all `m < n ≤ horizon`, and for `n → ∞` when the limit point
/// is supplied.
pub fn geometric_cauchy_certificate(
    map: &AnalyticMap<f64>,
    seed: f64,
    horizon: usize,
    limit: Option<f64>,
) -> Vec<GeometricBound> {
    let l = map.lipschitz;
    let mut points = vec![seed];
    for _ in 0..horizon {
        let next = (map.phi)(points.last().expect("nonempty"));
        points.push(next);
    }
    let f = map.space.d(&points[0], &points[1.min(horizon)]).value();
    let mut out = vec![];
    for m in 0..horizon {
        for n in m + 1..=horizon {
            let bound = (m..n).map(|i| l.powi(i as i32)).sum::<f64>() * f;
            out.push(GeometricBound {
                m,
                n: Some(n),
                bound,
                measured: map.space.d(&points[m], &points[n]).value(),
            });
        }
        if let Some(z) = limit {
            out.push(GeometricBound {
                m,
                n: None,
                bound: l.powi(m as i32) * f / (1.0 - l),
                measured: map.space.d(&points[m], &z).value(),
            });
        }
    }
    out
}

/// `|Ff| ≤ L·|f|` numerically for every morphism, plus functoriality.
pub fn check_finite_contraction(
    host: &NormedCategory<ExtReal>,
    f: &Functor,
    lipschitz: f64,
) -> Result<ValidationReport, BanachError> {
    check_lipschitz(lipschitz)?;
    check_functor(host, host, f)?;
    let l = ExtReal::of(lipschitz);
    let mut r = ValidationReport::new();
    r.record(
        "contraction",
        (0..host.morphism_count())
            .find(|&m| host.norm[f.morphisms[m]].value() > l.mul(host.norm[m]).value())
            .map(|m| {
                format!(
                    "|F{}| = {} > L·{}",
                    host.name(m),
                    host.norm[f.morphisms[m]],
                    host.norm[m]
                )
            }),
    );
    Ok(r.with_detail(format!("L = {lipschitz}")))
}

/// Isomorphisms witnessing the three kinds of fixed point at one object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FixedPointClass {
    /// An isomorphism `x → Fx` that is a k-morphism.
    pub forward: Option<usize>,
    /// An isomorphism `Fx → x` that is a k-morphism.
    pub backward: Option<usize>,
    /// A k-isomorphism `x → Fx`.
    pub fixed: Option<usize>,
}

impl FixedPointClass {
    pub fn label(&self) -> &'static str {
        match (self.fixed, self.forward, self.backward) {
            (Some(_), _, _) => "fixed",
            (None, Some(_), Some(_)) => "forward and backward",
            (None, Some(_), None) => "forward",
            (None, None, Some(_)) => "backward",
            (None, None, None) => "none",
        }
    }
}

/// Searches the host for the isomorphisms defining forward, backward and
/// plain fixed points. Isomorphisms are those of the underlying category.
pub fn classify_fixed_point<Q: Quantale>(
    q: &Q,
    host: &NormedCategory<Q::Value>,
    f: &Functor,
    x: usize,
) -> FixedPointClass {
    let fx = f.objects[x];
    let iso_k = |a: usize, b: usize| {
        host.hom(a, b)
            .into_iter()
            .find(|&g| host.inverse(g).is_some() && host.is_k_morphism(q, g))
    };
    FixedPointClass {
        forward: iso_k(x, fx),
        backward: iso_k(fx, x),
        fixed: host.k_iso_between(q, x, fx),
    }
}

/// The iteration sequence `f, Ff, F²f, …` cut into a prefix and a tail.
fn iteration_sequence<'a>(
    host: &'a NormedCategory<ExtReal>,
    f: &Functor,
    seed: usize,
) -> Result<MorphSequence<'a, ExtReal>, BanachError> {
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut orbit = vec![];
    let mut s = seed;
    while !seen.contains_key(&s) {
        seen.insert(s, orbit.len());
        orbit.push(s);
        s = f.morphisms[s];
    }
    let first = seen[&s];
    let period = orbit.len() - first;
    if period != 1 {
        let cycle: Vec<&str> = orbit[first..].iter().map(|&m| host.name(m)).collect();
        return Err(BanachError::NoTailStructure(format!(
            "F^n f cycles through {}",
            cycle.join(", ")
        )));
    }
    let e = orbit[first];
    let tail = if host.is_identity(e) {
        MorphTail::Identity
    } else if host.dom(e) == host.cod(e) && host.comp(e, e) == e {
        MorphTail::Idempotent(e)
    } else {
        return Err(BanachError::NoTailStructure(format!(
            "F^n f settles at {}, which is not idempotent",
            host.name(e)
        )));
    };
    Ok(MorphSequence::new(
        host,
        host.dom(seed),
        orbit[..first].to_vec(),
        tail,
    )?)
}

#[derive(Debug, Clone)]
pub struct BanachRun {
    pub prefix: Vec<usize>,
    pub tail: MorphTail,
    pub cauchy_value: ExtReal,
    pub colimits: Vec<Cocone>,
    /// Ordinary colimits that fail to be normed, for diagnostics.
    pub ordinary_only: Vec<Cocone>,
    /// `f̄: y → Fy` with `f̄·γ_n = Fγ_n`, for the first normed colimit.
    pub comparison: Option<usize>,
    pub vertex: Option<usize>,
    pub class: Option<FixedPointClass>,
    pub report: ValidationReport,
}

/// Iterates `f: x → Fx` under `F`, checks the sequence is Cauchy, searches
/// for normed colimits and classifies the vertex.
pub fn banach_run(
    host: &NormedCategory<ExtReal>,
    f: &Functor,
    lipschitz: f64,
    seed: usize,
) -> Result<BanachRun, BanachError> {
    let q = LawverePlus;
    let mut report = check_finite_contraction(host, f, lipschitz)?;
    if host.cod(seed) != f.objects[host.dom(seed)] {
        return Err(BanachError::BadSeed(host.name(seed).to_string()));
    }
    if host.norm[seed].is_infinite() {
        return Err(BanachError::InfiniteSeedNorm);
    }
    let seq = iteration_sequence(host, f, seed)?;
    let cauchy = seq.cauchy_value(&q);
    report.record(
        "sequence is Cauchy",
        (!cauchy.cauchy).then(|| format!("value {}", cauchy.value)),
    );

    let found = find_normed_colimits(&q, &seq);
    let ordinary_only: Vec<Cocone> = ordinary_colimits(&seq)
        .into_iter()
        .filter(|c| !found.colimits.contains(c))
        .collect();
    let missing = found.colimits.is_empty().then(|| match ordinary_only.first() {
        Some(c) => {
            let v = verify_normed_colimit(&q, &seq, c).expect("enumerated cocone");
            let failed: Vec<String> = v
                .report
                .failures()
                .map(|c| format!("{} ({})", c.name, c.witness.clone().unwrap_or_default()))
                .collect();
            format!(
                "ordinary colimit at {} is not normed: {}",
                host.objects[c.vertex],
                failed.join("; ")
            )
        }
        None => "no ordinary colimit".to_string(),
    });
    report.record("normed colimit exists", missing);
    report.extend(found.uniqueness.clone());

    let mut run = BanachRun {
        prefix: seq.prefix.clone(),
        tail: seq.tail,
        cauchy_value: cauchy.value,
        colimits: found.colimits.clone(),
        ordinary_only,
        comparison: None,
        vertex: None,
        class: None,
        report,
    };
    let Some(gamma) = found.colimits.first() else {
        return Ok(run);
    };
    let y = gamma.vertex;
    let fy = f.objects[y];
    let f_gamma = f.morphisms[gamma.last()];
    let comparison = host
        .hom(y, fy)
        .into_iter()
        .find(|&u| host.comp(u, gamma.last()) == f_gamma);
    let preserved = comparison.and_then(|u| host.inverse(u));
    let mut report = std::mem::take(&mut run.report);
    report.push(
        "F preserves the colimit",
        if preserved.is_some() { Status::Pass } else { Status::Advisory },
        None,
    );
    if preserved.is_none() {
        report = report.with_detail("comparison y → Fy is not invertible; the fixed-point argument does not apply");
    }
    let class = classify_fixed_point(&q, host, f, y);
    let guaranteed = |found: bool, claimed: bool| match (found, claimed) {
        (true, _) => Status::Pass,
        (false, true) => Status::Fail,
        (false, false) => Status::Advisory,
    };
    let symmetric = check_s(&q, host).is_none() || check_sop(&q, host).is_none();
    report.push(
        "forward fixed point",
        guaranteed(class.forward.is_some(), preserved.is_some()),
        None,
    );
    report.push(
        "fixed point",
        guaranteed(class.fixed.is_some(), preserved.is_some() && symmetric),
        None,
    );
    report = report.with_detail(format!("{} is a {} point", host.objects[y], class.label()));
    run.comparison = comparison;
    run.vertex = Some(y);
    run.class = Some(class);
    run.report = report;
    Ok(run)
}

/// The functor of `iX` induced by a map of points.
pub fn functor_from_point_map(points: usize, phi: &[usize]) -> Functor {
    Functor {
        objects: phi.to_vec(),
        morphisms: (0..points)
            .flat_map(|a| (0..points).map(move |b| phi[a] * points + phi[b]))
            .collect(),
    }
}
