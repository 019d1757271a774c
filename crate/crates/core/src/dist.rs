//! V-distributors between finite V-categories, Hausdorff norms and the
//! powerset lift.
//!
//! A distributor `ρ: X ⇸ Y` is a `|X|×|Y|` matrix. Composition is written
//! diagrammatically backwards, as usual: `σ·ρ` first runs `ρ`, then `σ`.

use thiserror::Error;

use crate::enumerate::{
    all_maps, check_cap, count_maps, members, CarrierTooLarge, DEFAULT_POWERSET_CAP,
};
use crate::quantale::Quantale;
use crate::report::{Status, ValidationReport};
use crate::vcat::{is_vfunctor, VCategory};

pub type Matrix<V> = Vec<Vec<V>>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("map is not a V-functor")]
    NotAVFunctor,
    #[error(transparent)]
    CarrierTooLarge(#[from] CarrierTooLarge),
}

fn shape<V>(m: &Matrix<V>) -> (usize, usize) {
    (m.len(), m.first().map_or(0, Vec::len))
}

/// `X(x',x) ⊗ ρ(x,y) ⊗ Y(y,y') ≤ ρ(x',y')`.
pub fn check_distributor<Q: Quantale>(
    q: &Q,
    x: &VCategory<Q::Value>,
    y: &VCategory<Q::Value>,
    rho: &Matrix<Q::Value>,
) -> ValidationReport {
    let mut r = ValidationReport::new();
    if rho.len() != x.len() || rho.iter().any(|row| row.len() != y.len()) {
        r.record("shape", Some(format!("expected {}×{}", x.len(), y.len())));
        return r;
    }
    let (n, m) = (x.len(), y.len());
    let mut witness = None;
    'scan: for a2 in 0..n {
        for a in 0..n {
            for b in 0..m {
                let left = q.tensor(x.dist(a2, a), &rho[a][b]);
                for b2 in 0..m {
                    if !q.leq(&q.tensor(&left, y.dist(b, b2)), &rho[a2][b2]) {
                        witness = Some(format!(
                            "x'={}, x={}, y={}, y'={}",
                            x.points[a2], x.points[a], y.points[b], y.points[b2]
                        ));
                        break 'scan;
                    }
                }
            }
        }
    }
    r.record("distributor", witness);
    r
}

/// `(σ·ρ)(x,z) = ⋁_y ρ(x,y) ⊗ σ(y,z)`.
pub fn compose<Q: Quantale>(
    q: &Q,
    sigma: &Matrix<Q::Value>,
    rho: &Matrix<Q::Value>,
) -> Result<Matrix<Q::Value>, DistError> {
    let (_, mid) = shape(rho);
    let (mid2, cols) = shape(sigma);
    if mid != mid2 || rho.iter().any(|r| r.len() != mid) || sigma.iter().any(|r| r.len() != cols) {
        return Err(DistError::ShapeMismatch(format!(
            "ρ has {mid} columns, σ has {mid2} rows"
        )));
    }
    Ok(rho
        .iter()
        .map(|row| {
            (0..cols)
                .map(|z| q.join_all((0..mid).map(|y| q.tensor(&row[y], &sigma[y][z]))))
                .collect()
        })
        .collect())
}

/// `ρ ≤ σ` entrywise; the first offending entry otherwise.
pub fn leq_witness<Q: Quantale>(
    q: &Q,
    rho: &Matrix<Q::Value>,
    sigma: &Matrix<Q::Value>,
) -> Option<(usize, usize)> {
    rho.iter().enumerate().find_map(|(i, row)| {
        row.iter()
            .enumerate()
            .find(|(j, v)| !q.leq(v, &sigma[i][*j]))
            .map(|(j, _)| (i, j))
    })
}

pub struct Graphs<V> {
    /// `f_*(x,y) = Y(fx, y)`, a distributor `X ⇸ Y`.
    pub lower: Matrix<V>,
    /// `f^*(y,x) = Y(y, fx)`, a distributor `Y ⇸ X`.
    pub upper: Matrix<V>,
    /// Unit `1_X ≤ f^*·f_*` and counit `f_*·f^* ≤ 1_Y`, each with its equality case.
    pub report: ValidationReport,
}

/// Both graphs of a V-functor and the adjunction `f_* ⊣ f^*`.
pub fn graphs<Q: Quantale>(
    q: &Q,
    f: &[usize],
    x: &VCategory<Q::Value>,
    y: &VCategory<Q::Value>,
) -> Result<Graphs<Q::Value>, DistError> {
    if f.len() != x.len() || f.iter().any(|&b| b >= y.len()) || !is_vfunctor(q, f, x, y) {
        return Err(DistError::NotAVFunctor);
    }
    let lower: Matrix<Q::Value> = f.iter().map(|&fa| y.d[fa].clone()).collect();
    let upper: Matrix<Q::Value> = (0..y.len())
        .map(|b| f.iter().map(|&fa| y.d[b][fa].clone()).collect())
        .collect();
    let unit = compose(q, &upper, &lower)?;
    let counit = compose(q, &lower, &upper)?;
    let mut report = ValidationReport::new();
    let fmt = |w: Option<(usize, usize)>, p: &[String], s: &[String]| {
        w.map(|(i, j)| format!("({}, {})", p[i], s[j]))
    };
    report.record(
        "unit 1_X ≤ f^*·f_*",
        fmt(leq_witness(q, &x.d, &unit), &x.points, &x.points),
    );
    report.record(
        "counit f_*·f^* ≤ 1_Y",
        fmt(leq_witness(q, &counit, &y.d), &y.points, &y.points),
    );
    let status = |eq: bool| if eq { Status::Pass } else { Status::Advisory };
    report.push(
        "unit is equality",
        status(leq_witness(q, &unit, &x.d).is_none()),
        fmt(leq_witness(q, &unit, &x.d), &x.points, &x.points),
    );
    report.push(
        "counit is equality",
        status(leq_witness(q, &y.d, &counit).is_none()),
        fmt(leq_witness(q, &y.d, &counit), &y.points, &y.points),
    );
    Ok(Graphs {
        lower,
        upper,
        report,
    })
}

/// `|ρ| = ⋀_x ⋁_y ρ(x,y)`.
pub fn hausdorff_norm<Q: Quantale>(q: &Q, rho: &Matrix<Q::Value>) -> Q::Value {
    q.meet_all(rho.iter().map(|row| q.join_all(row.iter().cloned())))
}

/// `‖ρ‖ = ⋁_φ ⋀_x ρ(x, φx)` over all maps `φ: X → Y`.
pub fn choice_norm<Q: Quantale>(
    q: &Q,
    rho: &Matrix<Q::Value>,
    cols: usize,
    cap: u64,
) -> Result<Q::Value, DistError> {
    check_cap(count_maps(rho.len(), cols), cap)?;
    Ok(q.join_all(
        all_maps(rho.len(), cols)
            .map(|phi| q.meet_all(phi.iter().enumerate().map(|(a, &b)| rho[a][b].clone()))),
    ))
}

fn subset_name(mask: usize, points: &[String]) -> String {
    let parts: Vec<&str> = members(mask, points.len())
        .map(|i| points[i].as_str())
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// `(Hρ)(A,B) = ⋀_{x∈A} ⋁_{y∈B} ρ(x,y)` on all subsets, encoded as bitmasks.
/// `(Hρ)(∅,B) = ⊤` and `(Hρ)(A,∅) = ⊥` for nonempty `A`.
pub fn hausdorff_lift_dist<Q: Quantale>(
    q: &Q,
    rho: &Matrix<Q::Value>,
    cols: usize,
    cap: usize,
) -> Result<Matrix<Q::Value>, DistError> {
    let rows = rho.len();
    for n in [rows, cols] {
        if n > cap {
            return Err(CarrierTooLarge {
                size: 1u128 << n.min(127),
                cap: 1u128 << cap.min(127),
            }
            .into());
        }
    }
    Ok((0..1usize << rows)
        .map(|a| {
            (0..1usize << cols)
                .map(|b| {
                    q.meet_all(
                        members(a, rows)
                            .map(|x| q.join_all(members(b, cols).map(|y| rho[x][y].clone()))),
                    )
                })
                .collect()
        })
        .collect())
}

/// The powerset V-category `HX`.
pub fn hausdorff_lift<Q: Quantale>(
    q: &Q,
    x: &VCategory<Q::Value>,
    cap: usize,
) -> Result<VCategory<Q::Value>, DistError> {
    let d = hausdorff_lift_dist(q, &x.d, x.len(), cap)?;
    Ok(VCategory {
        points: (0..d.len()).map(|m| subset_name(m, &x.points)).collect(),
        d,
    })
}

pub fn hausdorff_lift_default<Q: Quantale>(
    q: &Q,
    x: &VCategory<Q::Value>,
) -> Result<VCategory<Q::Value>, DistError> {
    hausdorff_lift(q, x, DEFAULT_POWERSET_CAP)
}

/// Direct image `Hf(A) = f(A)` on bitmask-encoded subsets.
pub fn lift_map(f: &[usize]) -> Vec<usize> {
    (0..1usize << f.len())
        .map(|a| members(a, f.len()).fold(0, |acc, x| acc | (1 << f[x])))
        .collect()
}
