//! Forward limits of point sequences, `X(x, y) = ⋁_N ⋀_{n≥N} X(x_n, y)`.
//!
//! Over `R+` the formula reads `inf_N sup_{n≥N} X(x_n, y)`.

use crate::quantale::Quantale;
use crate::report::{Status, ValidationReport};
use crate::vcat::{LazyMetricSpace, VCategory};

use super::CauchyError;

/// A point sequence in a finite V-category that is eventually constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSequence {
    pub prefix: Vec<usize>,
    pub tail: usize,
}

impl PointSequence {
    pub fn point(&self, n: usize) -> usize {
        self.prefix.get(n).copied().unwrap_or(self.tail)
    }
}

/// Exact check that `candidate` is a forward limit of `seq`.
pub fn forward_limit_finite<Q: Quantale>(
    q: &Q,
    x: &VCategory<Q::Value>,
    seq: &PointSequence,
    candidate: usize,
) -> ValidationReport {
    let k = seq.prefix.len();
    let formula = |y: usize| {
        q.join_all((0..=k).map(|n0| q.meet_all((n0..=k).map(|n| x.d[seq.point(n)][y].clone()))))
    };
    let mut r = ValidationReport::new();
    r.record(
        "forward limit",
        (0..x.len())
            .find(|&y| !q.equiv(&x.d[candidate][y], &formula(y)))
            .map(|y| {
                format!(
                    "y = {}: X(x, y) = {}, limit formula = {}",
                    x.points[y],
                    q.format_value(&x.d[candidate][y]),
                    q.format_value(&formula(y))
                )
            }),
    );
    r
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LazyForwardOptions {
    pub tolerance: f64,
    /// Indices up to `depth` are inspected.
    pub depth: u64,
}

/// Approximate forward-limit check against a distance oracle.
///
/// `inf_N sup_{n≥N}` is estimated by `sup` over `[depth/2, depth)`; the same
/// supremum over `[depth/4, depth)` must agree within the tolerance, or the
/// depth is reported as too small.
pub fn forward_limit_lazy<P: std::fmt::Debug>(
    space: &LazyMetricSpace<P>,
    seq: impl Fn(u64) -> P,
    candidate: &P,
    probes: &[P],
    opts: LazyForwardOptions,
) -> Result<ValidationReport, CauchyError> {
    let lo = (opts.depth / 4).max(1);
    let mid = (opts.depth / 2).max(lo + 1);
    let mut r = ValidationReport::new();
    let mut worst: Option<(String, f64)> = None;
    for y in probes {
        let (mut early, mut late) = (0.0f64, 0.0f64);
        for n in lo..opts.depth {
            let d = space.d(&seq(n), y).value();
            early = early.max(d);
            if n >= mid {
                late = late.max(d);
            }
        }
        let spread = early - late;
        if !(spread <= opts.tolerance) {
            return Err(CauchyError::DepthTooSmall {
                probe: format!("{y:?}"),
                spread,
                depth: opts.depth,
            });
        }
        let gap = (space.d(candidate, y).value() - late).abs();
        let gap = if gap.is_nan() { f64::INFINITY } else { gap };
        if gap > opts.tolerance && worst.as_ref().is_none_or(|(_, g)| gap > *g) {
            worst = Some((format!("y = {y:?}: |X(x, y) − estimate| = {gap:e}"), gap));
        }
    }
    match worst {
        Some((w, _)) => r.record("forward limit", Some(w)),
        None => r.push("forward limit", Status::Approx, None),
    }
    Ok(r.with_detail(format!(
        "approximate: depth {}, tolerance {:e}, {} probes",
        opts.depth,
        opts.tolerance,
        probes.len()
    )))
}
