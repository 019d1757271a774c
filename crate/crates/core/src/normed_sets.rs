//! Normed sets: a set with a function into a quantale.
//!
//! Maps between finite sets are index vectors, `phi[i]` being the image of
//! element `i`. Maps need not respect norms; [`hom_norm`] measures how far
//! they are from doing so.

use thiserror::Error;

use crate::quantale::Quantale;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NormedSetError {
    #[error("map is not total: expected {expected} images into a set of {codomain}, got {got:?}")]
    PartialMap {
        expected: usize,
        codomain: usize,
        got: Vec<usize>,
    },
    #[error("connecting map {stage} is not a normed map (k ≰ its hom-norm)")]
    NotNormedMap { stage: usize },
    #[error("malformed sequence: {0}")]
    MalformedSequence(String),
    #[error("tail map is not idempotent")]
    NotIdempotent,
    #[error("norm has {norms} values for {elements} elements")]
    LengthMismatch { elements: usize, norms: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormedSet<V> {
    pub elements: Vec<String>,
    pub norm: Vec<V>,
}

impl<V: Clone> NormedSet<V> {
    pub fn new(elements: Vec<String>, norm: Vec<V>) -> Result<Self, NormedSetError> {
        if elements.len() != norm.len() {
            return Err(NormedSetError::LengthMismatch {
                elements: elements.len(),
                norms: norm.len(),
            });
        }
        Ok(NormedSet { elements, norm })
    }

    /// Elements named `0, 1, …` carrying the given norms.
    pub fn numbered(norm: Vec<V>) -> Self {
        let elements = (0..norm.len()).map(|i| i.to_string()).collect();
        NormedSet { elements, norm }
    }

    /// `E_v`: one point of norm `v`.
    pub fn singleton(v: V) -> Self {
        NormedSet {
            elements: vec!["*".into()],
            norm: vec![v],
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Checks that `phi` is a total map from a set of `domain` elements into one of `codomain`.
pub fn check_map(phi: &[usize], domain: usize, codomain: usize) -> Result<(), NormedSetError> {
    if phi.len() != domain || phi.iter().any(|&b| b >= codomain) {
        return Err(NormedSetError::PartialMap {
            expected: domain,
            codomain,
            got: phi.to_vec(),
        });
    }
    Ok(())
}

/// `psi ∘ phi`.
pub fn compose(phi: &[usize], psi: &[usize]) -> Vec<usize> {
    phi.iter().map(|&b| psi[b]).collect()
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// `⋀_a [|a|, |φa|]`; `k` lies below it exactly when `φ` does not increase norms.
pub fn hom_norm<Q: Quantale>(
    q: &Q,
    phi: &[usize],
    a: &NormedSet<Q::Value>,
    b: &NormedSet<Q::Value>,
) -> Result<Q::Value, NormedSetError> {
    check_map(phi, a.len(), b.len())?;
    Ok(q.meet_all(
        phi.iter()
            .enumerate()
            .map(|(i, &j)| q.hom(&a.norm[i], &b.norm[j])),
    ))
}

/// Norm on `elements` making every `f_i` a normed map, largest such:
/// `|a| = ⋀_i |f_i a|`. With no maps every norm is `⊤`.
pub fn initial_norm<Q: Quantale>(
    q: &Q,
    elements: Vec<String>,
    maps: &[(Vec<usize>, &NormedSet<Q::Value>)],
) -> Result<NormedSet<Q::Value>, NormedSetError> {
    for (f, b) in maps {
        check_map(f, elements.len(), b.len())?;
    }
    let norm = (0..elements.len())
        .map(|x| q.meet_all(maps.iter().map(|(f, b)| b.norm[f[x]].clone())))
        .collect();
    Ok(NormedSet { elements, norm })
}

/// Least norm on `elements` making every `g_i` a normed map:
/// `|b| = ⋁_i ⋁_{a ∈ g_i⁻¹b} |a|`. Points outside every image get `⊥`.
pub fn final_norm<Q: Quantale>(
    q: &Q,
    elements: Vec<String>,
    maps: &[(&NormedSet<Q::Value>, Vec<usize>)],
) -> Result<NormedSet<Q::Value>, NormedSetError> {
    let mut norm = vec![q.bottom(); elements.len()];
    for (a, g) in maps {
        check_map(g, a.len(), elements.len())?;
        for (i, &j) in g.iter().enumerate() {
            norm[j] = q.join(&norm[j], &a.norm[i]);
        }
    }
    Ok(NormedSet { elements, norm })
}

/// How a sequence continues after its last explicit stage `A_K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tail {
    /// `A_K = A_{K+1} = …` along identities.
    Identity,
    /// `A_K = A_{K+1} = …` along an idempotent `e`.
    Idempotent(Vec<usize>),
}

/// A sequence `A_0 → A_1 → … → A_K` followed by a [`Tail`].
#[derive(Debug, Clone, PartialEq)]
pub struct NormedSetSequence<V> {
    pub stages: Vec<NormedSet<V>>,
    /// `maps[n]: A_n → A_{n+1}` for `n < K`.
    pub maps: Vec<Vec<usize>>,
    pub tail: Tail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormMode {
    /// Join of all stage norms; needs normed connecting maps.
    Final,
    /// `⋀_N ⋁_{n≥N}` of stage norms; accepts any maps.
    Cauchy,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SequenceColimit<V> {
    pub set: NormedSet<V>,
    /// `legs[n]: A_n → colimit` for `n ≤ K`; later legs equal `legs[K]`.
    pub legs: Vec<Vec<usize>>,
}

impl<V: Clone> NormedSetSequence<V> {
    pub fn new(
        stages: Vec<NormedSet<V>>,
        maps: Vec<Vec<usize>>,
        tail: Tail,
    ) -> Result<Self, NormedSetError> {
        if stages.is_empty() || maps.len() + 1 != stages.len() {
            return Err(NormedSetError::MalformedSequence(format!(
                "{} stages need {} maps, got {}",
                stages.len(),
                stages.len().saturating_sub(1),
                maps.len()
            )));
        }
        for (n, f) in maps.iter().enumerate() {
            check_map(f, stages[n].len(), stages[n + 1].len())?;
        }
        if let Tail::Idempotent(e) = &tail {
            let last = stages.last().expect("nonempty").len();
            check_map(e, last, last)?;
            if compose(e, e) != *e {
                return Err(NormedSetError::NotIdempotent);
            }
        }
        Ok(NormedSetSequence { stages, maps, tail })
    }

    /// Index `K` of the last explicit stage.
    pub fn tail_start(&self) -> usize {
        self.stages.len() - 1
    }

    /// Connecting map `A_n → A_{n+1}` for any `n`.
    pub fn connecting(&self, n: usize) -> Vec<usize> {
        if n < self.maps.len() {
            return self.maps[n].clone();
        }
        match &self.tail {
            Tail::Identity => identity(self.stages[self.tail_start()].len()),
            Tail::Idempotent(e) => e.clone(),
        }
    }

    pub fn stage(&self, n: usize) -> &NormedSet<V> {
        &self.stages[n.min(self.tail_start())]
    }

    /// The same sequence with `extra` tail stages written out explicitly.
    pub fn unrolled(&self, extra: usize) -> Self {
        let k = self.tail_start();
        let mut stages = self.stages.clone();
        let mut maps = self.maps.clone();
        for n in k..k + extra {
            stages.push(self.stage(n).clone());
            maps.push(self.connecting(n));
        }
        NormedSetSequence {
            stages,
            maps,
            tail: self.tail.clone(),
        }
    }

    /// Carrier of the set-level colimit and the legs `κ_n`, `n ≤ K`.
    ///
    /// Identity tail: the carrier is `A_K` itself. Idempotent tail: the
    /// fixed points of `e`, with `κ_n = e ∘ (A_n → A_K)`.
    pub fn set_colimit(&self) -> (Vec<String>, Vec<Vec<usize>>) {
        let k = self.tail_start();
        let last = &self.stages[k];
        let mut to_last = vec![identity(last.len())];
        for n in (0..k).rev() {
            let next = compose(&self.maps[n], &to_last[0]);
            to_last.insert(0, next);
        }
        match &self.tail {
            Tail::Identity => (last.elements.clone(), to_last),
            Tail::Idempotent(e) => {
                let fixed: Vec<usize> = (0..last.len()).filter(|&i| e[i] == i).collect();
                let position = |i: usize| fixed.iter().position(|&f| f == i).expect("fixed point");
                let names = fixed.iter().map(|&i| last.elements[i].clone()).collect();
                let legs = to_last
                    .iter()
                    .map(|f| f.iter().map(|&i| position(e[i])).collect())
                    .collect();
                (names, legs)
            }
        }
    }
}

/// Colimit of a normed-set sequence under either norm formula.
pub fn seq_colimit<Q: Quantale>(
    q: &Q,
    seq: &NormedSetSequence<Q::Value>,
    mode: NormMode,
) -> Result<SequenceColimit<Q::Value>, NormedSetError> {
    let k = seq.tail_start();
    if mode == NormMode::Final {
        for n in 0..=k {
            let f = seq.connecting(n);
            let target = seq.stage(n + 1);
            if !q.is_k(&hom_norm(q, &f, seq.stage(n), target)?) {
                return Err(NormedSetError::NotNormedMap { stage: n });
            }
        }
    }
    let (names, legs) = seq.set_colimit();
    // hit[n][c] = ⋁ { |a| : a ∈ A_n, κ_n a = c }
    let hit: Vec<Vec<Q::Value>> = legs
        .iter()
        .enumerate()
        .map(|(n, leg)| {
            let mut row = vec![q.bottom(); names.len()];
            for (i, &c) in leg.iter().enumerate() {
                row[c] = q.join(&row[c], &seq.stages[n].norm[i]);
            }
            row
        })
        .collect();
    let norm = (0..names.len())
        .map(|c| match mode {
            NormMode::Final => q.join_all(hit.iter().map(|row| row[c].clone())),
            // stages past K repeat stage K, so N ranges over 0..=K
            NormMode::Cauchy => {
                q.meet_all((0..=k).map(|n0| q.join_all(hit[n0..].iter().map(|row| row[c].clone()))))
            }
        })
        .collect();
    Ok(SequenceColimit {
        set: NormedSet {
            elements: names,
            norm,
        },
        legs,
    })
}

/// `⋁_N ⋀_{n≥N} |f ∘ κ_n|` for a map `f` out of a sequence colimit; the
/// Cauchy norm makes this a lower bound for `|f|`.
pub fn eventual_leg_norm<Q: Quantale>(
    q: &Q,
    seq: &NormedSetSequence<Q::Value>,
    colimit: &SequenceColimit<Q::Value>,
    f: &[usize],
    target: &NormedSet<Q::Value>,
) -> Result<Q::Value, NormedSetError> {
    let k = seq.tail_start();
    let norms = (0..=k)
        .map(|n| hom_norm(q, &compose(&colimit.legs[n], f), seq.stage(n), target))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(q.join_all((0..=k).map(|n0| q.meet_all(norms[n0..].iter().cloned()))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::{Boolean2, ExtReal, LawverePlus};

    fn x(v: f64) -> ExtReal {
        ExtReal::of(v)
    }

    fn chain3() -> NormedSet<ExtReal> {
        NormedSet::numbered(vec![x(0.0), x(1.0), x(2.0)])
    }

    #[test]
    fn clamp_shift_has_norm_one() {
        let a = chain3();
        assert_eq!(hom_norm(&LawverePlus, &[0, 2, 2], &a, &a).unwrap(), x(1.0));
        assert_eq!(hom_norm(&LawverePlus, &[0, 1, 2], &a, &a).unwrap(), x(0.0));
        assert!(matches!(
            hom_norm(&LawverePlus, &[0, 3, 2], &a, &a),
            Err(NormedSetError::PartialMap { .. })
        ));
    }

    #[test]
    fn boolean_hom_norm_is_norm_monotonicity() {
        let q = Boolean2;
        for na in [false, true] {
            for nb in [false, true] {
                let (a, b) = (NormedSet::singleton(na), NormedSet::singleton(nb));
                assert_eq!(hom_norm(&q, &[0], &a, &b).unwrap(), !na || nb);
            }
        }
    }

    #[test]
    fn initial_and_final_norms() {
        let q = LawverePlus;
        let (e2, e5) = (NormedSet::singleton(x(2.0)), NormedSet::singleton(x(5.0)));
        let two = vec!["a".to_string(), "b".to_string()];
        let init = initial_norm(&q, two.clone(), &[(vec![0, 0], &e2), (vec![0, 0], &e5)]).unwrap();
        assert_eq!(init.norm, vec![x(5.0), x(5.0)]);
        let empty = initial_norm(&q, two.clone(), &[]).unwrap();
        assert_eq!(empty.norm, vec![q.top(); 2]);
        let fin = final_norm(&q, two, &[(&e2, vec![0])]).unwrap();
        assert_eq!(fin.norm, vec![x(2.0), ExtReal::INFINITY]);
    }

    fn singleton_seq(first: f64, rest: f64) -> NormedSetSequence<ExtReal> {
        NormedSetSequence::new(
            vec![NormedSet::singleton(x(first)), NormedSet::singleton(x(rest))],
            vec![vec![0]],
            Tail::Identity,
        )
        .unwrap()
    }

    #[test]
    fn decreasing_singleton_sequence() {
        let seq = singleton_seq(3.0, 1.0);
        let fin = seq_colimit(&LawverePlus, &seq, NormMode::Final).unwrap();
        let cau = seq_colimit(&LawverePlus, &seq, NormMode::Cauchy).unwrap();
        assert_eq!(fin.set.norm, vec![x(1.0)]);
        assert_eq!(cau.set.norm, vec![x(1.0)]);
    }

    #[test]
    fn increasing_singleton_sequence() {
        let seq = singleton_seq(1.0, 3.0);
        assert_eq!(
            seq_colimit(&LawverePlus, &seq, NormMode::Final),
            Err(NormedSetError::NotNormedMap { stage: 0 })
        );
        let cau = seq_colimit(&LawverePlus, &seq, NormMode::Cauchy).unwrap();
        assert_eq!(cau.set.norm, vec![x(3.0)]);
    }

    #[test]
    fn idempotent_tail_quotients_to_fixed_points() {
        let a = chain3();
        let seq = NormedSetSequence::new(vec![a], vec![], Tail::Idempotent(vec![0, 0, 2])).unwrap();
        let c = seq_colimit(&LawverePlus, &seq, NormMode::Cauchy).unwrap();
        assert_eq!(c.set.elements, vec!["0".to_string(), "2".to_string()]);
        assert_eq!(c.legs[0], vec![0, 0, 1]);
        // class of 0 collects norms 0 and 1; the join is 0
        assert_eq!(c.set.norm, vec![x(0.0), x(2.0)]);
        assert!(NormedSetSequence::new(vec![chain3()], vec![], Tail::Idempotent(vec![1, 2, 0]))
            .is_err());
    }

    #[test]
    fn unrolling_keeps_cauchy_norm() {
        let seq = NormedSetSequence::new(
            vec![chain3(), NormedSet::numbered(vec![x(4.0), x(0.5)])],
            vec![vec![1, 0, 1]],
            Tail::Idempotent(vec![1, 1]),
        )
        .unwrap();
        let base = seq_colimit(&LawverePlus, &seq, NormMode::Cauchy).unwrap();
        for extra in 1..4 {
            let long = seq_colimit(&LawverePlus, &seq.unrolled(extra), NormMode::Cauchy).unwrap();
            assert_eq!(base.set, long.set);
        }
    }

    #[test]
    fn eventual_leg_norm_bounds_hom_norm() {
        let q = LawverePlus;
        let seq = singleton_seq(1.0, 3.0);
        let c = seq_colimit(&q, &seq, NormMode::Cauchy).unwrap();
        let target = NormedSet::singleton(x(2.0));
        let lower = eventual_leg_norm(&q, &seq, &c, &[0], &target).unwrap();
        let actual = hom_norm(&q, &[0], &c.set, &target).unwrap();
        assert!(q.leq(&lower, &actual));
    }
}
