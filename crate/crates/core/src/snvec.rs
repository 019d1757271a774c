//! Weighted-ℓ1 semi-normed spaces and monomial maps.
//!
//! `‖x‖ = Σ_i contrib(w_i, |x_i|)` with `contrib(w, 0) = 0` even for
//! `w = ∞`, so that `‖0‖ = 0`. Norm values themselves use the quantale rule
//! `0·∞ = ∞`. For a monomial map the supremum `sup_x log°(‖fx‖/‖x‖)` is
//! attained on basis vectors, which gives the closed form of [`log_norm`].

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quantale::ExtReal;
use crate::report::ValidationReport;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SnVecError {
    #[error("map has {perm} coordinates but {scalars} scalars")]
    LengthMismatch { perm: usize, scalars: usize },
    #[error("coordinate {0} is out of range or used twice")]
    NotInjective(usize),
    #[error("source has dimension {expected}, map expects {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coordinate {0} has no declared limit")]
    UndeclaredTail(usize),
    #[error("coordinates {0} and {1} both oscillate; the colimit norm is not weighted-ℓ1")]
    NotCoordinatewise(usize, usize),
    #[error("scalar {0} is not finite")]
    NonFiniteScalar(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedSpace {
    pub weights: Vec<ExtReal>,
}

fn contrib(w: ExtReal, t: f64) -> ExtReal {
    if t == 0.0 {
        ExtReal::ZERO
    } else {
        w.mul(ExtReal::of(t.abs()))
    }
}

impl WeightedSpace {
    pub fn new(weights: Vec<ExtReal>) -> Self {
        WeightedSpace { weights }
    }

    /// `R_c`: the line with weight `c`.
    pub fn line(c: f64) -> Self {
        WeightedSpace::new(vec![ExtReal::of(c)])
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn seminorm(&self, x: &[f64]) -> ExtReal {
        self.weights
            .iter()
            .zip(x)
            .fold(ExtReal::ZERO, |acc, (&w, &t)| acc.add(contrib(w, t)))
    }
}

/// `x ↦ (d_i·x_{π(i)})_i` with `π` injective.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonomialMap {
    pub perm: Vec<usize>,
    pub scalars: Vec<f64>,
}

impl MonomialMap {
    pub fn new(perm: Vec<usize>, scalars: Vec<f64>) -> Result<Self, SnVecError> {
        if perm.len() != scalars.len() {
            return Err(SnVecError::LengthMismatch {
                perm: perm.len(),
                scalars: scalars.len(),
            });
        }
        if let Some(&d) = scalars.iter().find(|d| !d.is_finite()) {
            return Err(SnVecError::NonFiniteScalar(d));
        }
        let mut seen = vec![];
        for &j in &perm {
            if seen.contains(&j) {
                return Err(SnVecError::NotInjective(j));
            }
            seen.push(j);
        }
        Ok(MonomialMap { perm, scalars })
    }

    pub fn identity(n: usize) -> Self {
        MonomialMap {
            perm: (0..n).collect(),
            scalars: vec![1.0; n],
        }
    }

    /// Checks the map fits between the two spaces.
    pub fn check(&self, source: &WeightedSpace, target: &WeightedSpace) -> Result<(), SnVecError> {
        if self.perm.len() != target.dim() {
            return Err(SnVecError::DimensionMismatch {
                expected: target.dim(),
                found: self.perm.len(),
            });
        }
        match self.perm.iter().find(|&&j| j >= source.dim()) {
            Some(&j) => Err(SnVecError::NotInjective(j)),
            None => Ok(()),
        }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.perm
            .iter()
            .zip(&self.scalars)
            .map(|(&j, &d)| d * x[j])
            .collect()
    }

    /// `self ∘ f`: first `f`, then `self`.
    pub fn after(&self, f: &MonomialMap) -> MonomialMap {
        MonomialMap {
            perm: self.perm.iter().map(|&i| f.perm[i]).collect(),
            scalars: self
                .perm
                .iter()
                .zip(&self.scalars)
                .map(|(&i, &e)| e * f.scalars[i])
                .collect(),
        }
    }

    /// Contribution of source coordinate `j` to `‖f e_j‖`.
    fn image_weight(&self, target: &WeightedSpace, j: usize) -> ExtReal {
        self.perm
            .iter()
            .position(|&p| p == j)
            .map_or(ExtReal::ZERO, |i| contrib(target.weights[i], self.scalars[i]))
    }
}

/// `|f| = max_j log°(c_j / w_j)` with `c_j = contrib(w'_i, |d_i|)` for
/// `π(i) = j`.
pub fn log_norm(
    f: &MonomialMap,
    source: &WeightedSpace,
    target: &WeightedSpace,
) -> Result<ExtReal, SnVecError> {
    f.check(source, target)?;
    Ok((0..source.dim())
        .map(|j| f.image_weight(target, j).frac(source.weights[j]).log_circ())
        .fold(ExtReal::ZERO, ExtReal::max))
}

/// `log°(‖fx‖/‖x‖)` for one vector.
pub fn log_ratio(f: &MonomialMap, source: &WeightedSpace, target: &WeightedSpace, x: &[f64]) -> ExtReal {
    target.seminorm(&f.apply(x)).frac(source.seminorm(x)).log_circ()
}

/// A random vector with a random support; a quarter of the draws are
/// multiples of a single basis vector.
pub fn sample_vector<R: Rng>(rng: &mut R, dim: usize) -> Vec<f64> {
    let single = rng.gen_bool(0.25).then(|| rng.gen_range(0..dim.max(1)));
    (0..dim)
        .map(|j| {
            let keep = match single {
                Some(s) => j == s,
                None => rng.gen_bool(0.5),
            };
            if keep {
                rng.gen_range(-10.0..10.0)
            } else {
                0.0
            }
        })
        .collect()
}

/// Largest sampled `log°(‖fx‖/‖x‖)`; never above [`log_norm`].
pub fn sampled_log_norm<R: Rng>(
    rng: &mut R,
    f: &MonomialMap,
    source: &WeightedSpace,
    target: &WeightedSpace,
    samples: usize,
) -> ExtReal {
    (0..samples)
        .map(|_| log_ratio(f, source, target, &sample_vector(rng, source.dim())))
        .fold(ExtReal::ZERO, ExtReal::max)
}

/// How the weight of one coordinate behaves along a chain of identities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WeightTail {
    /// `w_n = c`.
    Constant { c: ExtReal },
    /// `w_n = c/n`.
    Reciprocal { c: f64 },
    /// `w_n = c·n`.
    Linear { c: f64 },
    /// `w_n = cycle[n mod len]`.
    Periodic { cycle: Vec<ExtReal> },
    /// Leading values and a declared limit.
    Table {
        values: Vec<ExtReal>,
        limit: Option<ExtReal>,
    },
}

impl WeightTail {
    /// `sup_N inf_{n≥N} w_n` and whether the weights converge.
    fn liminf(&self, coordinate: usize) -> Result<(ExtReal, bool), SnVecError> {
        Ok(match self {
            WeightTail::Constant { c } => (*c, true),
            WeightTail::Reciprocal { .. } => (ExtReal::ZERO, true),
            WeightTail::Linear { c } => (
                if *c == 0.0 { ExtReal::ZERO } else { ExtReal::INFINITY },
                true,
            ),
            WeightTail::Periodic { cycle } => {
                let low = cycle.iter().copied().fold(ExtReal::INFINITY, ExtReal::min);
                (low, cycle.iter().all(|&w| w == low))
            }
            WeightTail::Table { limit, .. } => (limit.ok_or(SnVecError::UndeclaredTail(coordinate))?, true),
        })
    }
}

/// Colimit weights of a chain of identity maps, coordinatewise liminf.
///
/// The liminf of a sum is the sum of liminfs only when at most one
/// coordinate oscillates; otherwise the colimit seminorm is not weighted-ℓ1
/// and an error is returned.
pub fn colimit_weights(tails: &[WeightTail]) -> Result<WeightedSpace, SnVecError> {
    let mut weights = vec![];
    let mut oscillating: Option<usize> = None;
    for (j, t) in tails.iter().enumerate() {
        let (w, converges) = t.liminf(j)?;
        if !converges {
            if let Some(prev) = oscillating {
                return Err(SnVecError::NotCoordinatewise(prev, j));
            }
            oscillating = Some(j);
        }
        weights.push(w);
    }
    Ok(WeightedSpace::new(weights))
}

/// Report that the identity cocone from the chain `R_{1/n}` into `R_c`
/// is a k-cocone exactly when `c = 0`.
///
/// `|γ_n| = log°(n·c)` is non-decreasing in `n` and unbounded when `c > 0`,
/// so `inf_N sup_{n≥N} |γ_n| = ∞`.
pub fn verify_no_separated_colimit(c: f64) -> ValidationReport {
    let leg = |n: u64| log_norm(&MonomialMap::identity(1), &WeightedSpace::line(1.0 / n as f64), &WeightedSpace::line(c))
        .expect("one-dimensional identity");
    let samples: Vec<String> = [1u64, 10, 1_000, 1_000_000]
        .iter()
        .map(|&n| format!("|γ_{n}| = {}", leg(n)))
        .collect();
    let mut r = ValidationReport::new();
    if c > 0.0 {
        // first n with n·c > 1; from there on |γ_n| grows like log n
        let onset = ((1.0 / c).floor() as u64).saturating_add(1);
        r.record(
            "C2a k-cocone",
            Some(format!("|γ_n| = log°({c}·n) > 0 for n ≥ {onset} and diverges")),
        );
    } else {
        r.record("C2a k-cocone", None);
    }
    r.with_detail(samples.join(", "))
}

/// Every zero-weight source coordinate lands with zero contribution.
pub fn zero_to_zero(f: &MonomialMap, source: &WeightedSpace, target: &WeightedSpace) -> Result<bool, SnVecError> {
    f.check(source, target)?;
    Ok((0..source.dim())
        .filter(|&j| source.weights[j].is_zero())
        .all(|j| f.image_weight(target, j).is_zero()))
}

/// `X/X₀`: drops the zero-weight coordinates. The projection preserves the
/// seminorm.
pub fn quotient_separation(x: &WeightedSpace) -> (WeightedSpace, MonomialMap) {
    let kept: Vec<usize> = (0..x.dim()).filter(|&j| !x.weights[j].is_zero()).collect();
    let quotient = WeightedSpace::new(kept.iter().map(|&j| x.weights[j]).collect());
    let n = kept.len();
    (quotient, MonomialMap { perm: kept, scalars: vec![1.0; n] })
}
