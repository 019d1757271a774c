//! V-categories (generalized metric spaces) and Lipschitz norms of maps.

use thiserror::Error;

use crate::enumerate::{all_maps, check_cap, count_maps, CarrierTooLarge};
use crate::normed_sets::{check_map, NormedSetError};
use crate::quantale::{ExtReal, Quantale};
use crate::report::{Status, ValidationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VCatError {
    #[error("distance matrix must be {0}×{0}")]
    NotSquare(usize),
    #[error(transparent)]
    PartialMap(#[from] NormedSetError),
    #[error(transparent)]
    CarrierTooLarge(#[from] CarrierTooLarge),
}

/// A finite set with a V-valued distance `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct VCategory<V> {
    pub points: Vec<String>,
    pub d: Vec<Vec<V>>,
}

impl<V: Clone> VCategory<V> {
    pub fn new(points: Vec<String>, d: Vec<Vec<V>>) -> Result<Self, VCatError> {
        let n = points.len();
        if d.len() != n || d.iter().any(|r| r.len() != n) {
            return Err(VCatError::NotSquare(n));
        }
        Ok(VCategory { points, d })
    }

    /// Points named `0, 1, …`.
    pub fn numbered(d: Vec<Vec<V>>) -> Result<Self, VCatError> {
        Self::new((0..d.len()).map(|i| i.to_string()).collect(), d)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dist(&self, x: usize, y: usize) -> &V {
        &self.d[x][y]
    }
}

/// The one-point V-category with self-distance `k`.
pub fn unit_vcat<Q: Quantale>(q: &Q) -> VCategory<Q::Value> {
    VCategory {
        points: vec!["*".into()],
        d: vec![vec![q.unit()]],
    }
}

/// `k ≤ d(x,x)` and `d(x,y) ⊗ d(y,z) ≤ d(x,z)`.
pub fn check_vcategory<Q: Quantale>(q: &Q, x: &VCategory<Q::Value>) -> ValidationReport {
    let n = x.len();
    let p = |i: usize| x.points[i].as_str();
    let mut r = ValidationReport::new();
    r.record(
        "reflexive",
        (0..n)
            .find(|&a| !q.is_k(x.dist(a, a)))
            .map(|a| format!("d({0},{0}) = {1}", p(a), q.format_value(x.dist(a, a)))),
    );
    let mut witness = None;
    'scan: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !q.leq(&q.tensor(x.dist(a, b), x.dist(b, c)), x.dist(a, c)) {
                    witness = Some(format!("({}, {}, {})", p(a), p(b), p(c)));
                    break 'scan;
                }
            }
        }
    }
    r.record("transitive", witness);
    r
}

/// First pair with `d(x,y) ≠ d(y,x)`.
pub fn symmetry_witness<V: PartialEq + Clone>(x: &VCategory<V>) -> Option<(usize, usize)> {
    let n = x.len();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| x.d[a][b] != x.d[b][a])
}

pub fn is_symmetric<V: PartialEq + Clone>(x: &VCategory<V>) -> bool {
    symmetry_witness(x).is_none()
}

pub fn symmetry_report<V: PartialEq + Clone>(x: &VCategory<V>) -> ValidationReport {
    let mut r = ValidationReport::new();
    r.push(
        "symmetric",
        if is_symmetric(x) { Status::Pass } else { Status::Fail },
        symmetry_witness(x).map(|(a, b)| format!("({}, {})", x.points[a], x.points[b])),
    );
    r
}

/// `⋀_{x,x'} [X(x,x'), Y(φx,φx')]`; `k` lies below it exactly when `φ` is a V-functor.
pub fn lipschitz_norm<Q: Quantale>(
    q: &Q,
    phi: &[usize],
    x: &VCategory<Q::Value>,
    y: &VCategory<Q::Value>,
) -> Result<Q::Value, VCatError> {
    check_map(phi, x.len(), y.len())?;
    let n = x.len();
    Ok(q.meet_all(
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| q.hom(x.dist(a, b), y.dist(phi[a], phi[b]))),
    ))
}

/// `X(x,x') ≤ Y(φx,φx')` for every pair.
pub fn is_vfunctor<Q: Quantale>(
    q: &Q,
    phi: &[usize],
    x: &VCategory<Q::Value>,
    y: &VCategory<Q::Value>,
) -> bool {
    let n = x.len();
    (0..n).all(|a| (0..n).all(|b| q.leq(x.dist(a, b), y.dist(phi[a], phi[b]))))
}

/// The `Met_∞` norm `sup log°(Y(φx,φx') / X(x,x'))` of a map between
/// Lawvere metric spaces.
pub fn met_infty_norm(
    phi: &[usize],
    x: &VCategory<ExtReal>,
    y: &VCategory<ExtReal>,
) -> Result<ExtReal, VCatError> {
    check_map(phi, x.len(), y.len())?;
    let n = x.len();
    Ok((0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| y.d[phi[a]][phi[b]].frac(x.d[a][b]).log_circ())
        .fold(ExtReal::ZERO, ExtReal::max))
}

/// `(X ⊗ Y)((x,y),(x',y')) = X(x,x') ⊗ Y(y,y')`; points are ordered row-major.
pub fn tensor_vcat<Q: Quantale>(
    q: &Q,
    x: &VCategory<Q::Value>,
    y: &VCategory<Q::Value>,
) -> VCategory<Q::Value> {
    let pairs: Vec<(usize, usize)> = (0..x.len())
        .flat_map(|a| (0..y.len()).map(move |b| (a, b)))
        .collect();
    VCategory {
        points: pairs
            .iter()
            .map(|&(a, b)| format!("({},{})", x.points[a], y.points[b]))
            .collect(),
        d: pairs
            .iter()
            .map(|&(a, b)| {
                pairs
                    .iter()
                    .map(|&(a2, b2)| q.tensor(x.dist(a, a2), y.dist(b, b2)))
                    .collect()
            })
            .collect(),
    }
}

/// `[X, Y]`: all V-functors `X → Y` with `[X,Y](f,g) = ⋀_x Y(fx, gx)`.
/// Returns the functors alongside, in the order of the points.
pub fn hom_vcat<Q: Quantale>(
    q: &Q,
    x: &VCategory<Q::Value>,
    y: &VCategory<Q::Value>,
    cap: u64,
) -> Result<(VCategory<Q::Value>, Vec<Vec<usize>>), VCatError> {
    check_cap(count_maps(x.len(), y.len()), cap)?;
    let functors: Vec<Vec<usize>> = all_maps(x.len(), y.len())
        .filter(|f| is_vfunctor(q, f, x, y))
        .collect();
    let d = functors
        .iter()
        .map(|f| {
            functors
                .iter()
                .map(|g| q.meet_all((0..x.len()).map(|a| y.dist(f[a], g[a]).clone())))
                .collect()
        })
        .collect();
    let points = functors
        .iter()
        .map(|f| {
            let images: Vec<&str> = f.iter().map(|&b| y.points[b].as_str()).collect();
            format!("[{}]", images.join(","))
        })
        .collect();
    Ok((VCategory { points, d }, functors))
}

/// An R+-valued distance given by a function, for spaces too large to tabulate.
pub struct LazyMetricSpace<P> {
    pub name: String,
    pub symmetric: bool,
    distance: Box<dyn Fn(&P, &P) -> ExtReal>,
}

impl<P> LazyMetricSpace<P> {
    pub fn new(
        name: impl Into<String>,
        symmetric: bool,
        distance: impl Fn(&P, &P) -> ExtReal + 'static,
    ) -> Self {
        LazyMetricSpace {
            name: name.into(),
            symmetric,
            distance: Box::new(distance),
        }
    }

    pub fn d(&self, a: &P, b: &P) -> ExtReal {
        (self.distance)(a, b)
    }

    /// `d(x,x) = 0`, the triangle law, and symmetry when declared, on the sample points.
    pub fn check_on(&self, samples: &[P]) -> ValidationReport
    where
        P: std::fmt::Debug,
    {
        let mut r = ValidationReport::new();
        r.record(
            "zero self-distance",
            samples
                .iter()
                .find(|p| !self.d(p, p).is_zero())
                .map(|p| format!("{p:?}")),
        );
        let triangle = samples.iter().find_map(|a| {
            samples.iter().find_map(|b| {
                samples
                    .iter()
                    .find(|c| self.d(a, b).add(self.d(b, c)) < self.d(a, c))
                    .map(|c| format!("({a:?}, {b:?}, {c:?})"))
            })
        });
        r.record("triangle", triangle);
        if self.symmetric {
            let asym = samples.iter().find_map(|a| {
                samples
                    .iter()
                    .find(|b| self.d(a, b) != self.d(b, a))
                    .map(|b| format!("({a:?}, {b:?})"))
            });
            r.record("symmetric", asym);
        }
        r
    }
}

impl LazyMetricSpace<f64> {
    /// The real line with `d(x,y) = |x − y|`.
    pub fn euclidean() -> Self {
        LazyMetricSpace::new("euclidean", true, |a: &f64, b: &f64| {
            ExtReal::of((a - b).abs())
        })
    }
}
