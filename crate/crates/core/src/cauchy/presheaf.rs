//! Sequences of normed functors `X → Set//V` and their Cauchy colimits.
//!
//! The colimit is formed objectwise in `Set` and each `Px` carries the norm
//! `|c| = ⋀_N ⋁_{n≥N} ⋁_{a ∈ γ_n⁻¹c} |a|`. Norm reflection (C2b) is a
//! statement about every target functor; here it is checked against an
//! enumerated family of small targets, and the report says so.

use itertools::Itertools;

use crate::enumerate::{all_maps, check_cap, count_maps, CarrierTooLarge};
use crate::normed_cat::NormedCategory;
use crate::normed_sets::{
    check_map, compose, hom_norm, identity, seq_colimit, NormMode, NormedSet, NormedSetSequence,
    Tail,
};
use crate::quantale::{check_conditions, Quantale};
use crate::report::{Status, ValidationReport};

use super::CauchyError;

/// A functor `X → Set` with normed sets as values: `actions[f]: P(dom f) → P(cod f)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Presheaf<V> {
    pub sets: Vec<NormedSet<V>>,
    pub actions: Vec<Vec<usize>>,
}

/// Components `α_x: Px → Qx`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Natural {
    pub components: Vec<Vec<usize>>,
}

impl Natural {
    pub fn identity<V: Clone>(p: &Presheaf<V>) -> Self {
        Natural {
            components: p.sets.iter().map(|s| identity(s.len())).collect(),
        }
    }
}

/// Functoriality of `p` over the index category.
pub fn check_presheaf<W: Clone, V: Clone>(
    index: &NormedCategory<W>,
    p: &Presheaf<V>,
) -> Result<(), CauchyError> {
    let bad = |msg: String| Err(CauchyError::NotAFunctor(msg));
    if p.sets.len() != index.object_count() || p.actions.len() != index.morphism_count() {
        return bad("one set per object and one map per morphism are needed".into());
    }
    for f in 0..index.morphism_count() {
        let (d, c) = (index.dom(f), index.cod(f));
        check_map(&p.actions[f], p.sets[d].len(), p.sets[c].len())
            .map_err(|e| CauchyError::NotAFunctor(format!("{}: {e}", index.name(f))))?;
    }
    for x in 0..index.object_count() {
        if p.actions[index.id(x)] != identity(p.sets[x].len()) {
            return bad(format!("identity of {} is not sent to an identity", index.objects[x]));
        }
    }
    for f in 0..index.morphism_count() {
        for g in index.out_of(index.cod(f)) {
            if p.actions[index.comp(g, f)] != compose(&p.actions[f], &p.actions[g]) {
                return bad(format!("{}·{} is not preserved", index.name(g), index.name(f)));
            }
        }
    }
    Ok(())
}

/// The first morphism with `|f| ≰ |Pf|`.
pub fn normed_presheaf_witness<Q: Quantale>(
    q: &Q,
    index: &NormedCategory<Q::Value>,
    p: &Presheaf<Q::Value>,
) -> Option<usize> {
    (0..index.morphism_count()).find(|&f| {
        let pf = hom_norm(q, &p.actions[f], &p.sets[index.dom(f)], &p.sets[index.cod(f)])
            .expect("checked functor");
        !q.leq(&index.norm[f], &pf)
    })
}

pub fn check_natural<W: Clone, V: Clone>(
    index: &NormedCategory<W>,
    p: &Presheaf<V>,
    target: &Presheaf<V>,
    alpha: &Natural,
) -> Result<(), CauchyError> {
    if alpha.components.len() != index.object_count() {
        return Err(CauchyError::NotNatural("one component per object is needed".into()));
    }
    for x in 0..index.object_count() {
        check_map(&alpha.components[x], p.sets[x].len(), target.sets[x].len())
            .map_err(|e| CauchyError::NotNatural(format!("component at {}: {e}", index.objects[x])))?;
    }
    for f in 0..index.morphism_count() {
        let (d, c) = (index.dom(f), index.cod(f));
        if compose(&p.actions[f], &alpha.components[c]) != compose(&alpha.components[d], &target.actions[f]) {
            return Err(CauchyError::NotNatural(format!("square at {} does not commute", index.name(f))));
        }
    }
    Ok(())
}

/// `|α| = ⋀_x |α_x|`.
pub fn natural_norm<Q: Quantale>(
    q: &Q,
    p: &Presheaf<Q::Value>,
    target: &Presheaf<Q::Value>,
    alpha: &Natural,
) -> Q::Value {
    q.meet_all(alpha.components.iter().enumerate().map(|(x, a)| {
        hom_norm(q, a, &p.sets[x], &target.sets[x]).expect("checked transformation")
    }))
}

/// `β·α`.
pub fn compose_natural(alpha: &Natural, beta: &Natural) -> Natural {
    Natural {
        components: alpha
            .components
            .iter()
            .zip(&beta.components)
            .map(|(a, b)| compose(a, b))
            .collect(),
    }
}

/// Every natural transformation `p → target`, found by backtracking over
/// objects in order.
pub fn natural_transformations<W: Clone, V: Clone>(
    index: &NormedCategory<W>,
    p: &Presheaf<V>,
    target: &Presheaf<V>,
    cap: u64,
) -> Result<Vec<Natural>, CarrierTooLarge> {
    let n = index.object_count();
    let size = (0..n).fold(1u128, |acc, x| {
        acc.saturating_mul(count_maps(p.sets[x].len(), target.sets[x].len()))
    });
    check_cap(size, cap)?;
    let choices: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|x| all_maps(p.sets[x].len(), target.sets[x].len()).collect())
        .collect();
    // squares whose corners are both among the first `x + 1` objects
    let squares_at = |x: usize| {
        (0..index.morphism_count())
            .filter(move |&f| index.dom(f).max(index.cod(f)) == x)
            .collect::<Vec<_>>()
    };
    let squares: Vec<Vec<usize>> = (0..n).map(squares_at).collect();
    let mut out = vec![];
    let mut current: Vec<Vec<usize>> = Vec::with_capacity(n);
    fn go<W: Clone, V: Clone>(
        x: usize,
        index: &NormedCategory<W>,
        p: &Presheaf<V>,
        target: &Presheaf<V>,
        choices: &[Vec<Vec<usize>>],
        squares: &[Vec<usize>],
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<Natural>,
    ) {
        if x == choices.len() {
            out.push(Natural {
                components: current.clone(),
            });
            return;
        }
        for a in &choices[x] {
            current.push(a.clone());
            let ok = squares[x].iter().all(|&f| {
                let (d, c) = (index.dom(f), index.cod(f));
                compose(&p.actions[f], &current[c]) == compose(&current[d], &target.actions[f])
            });
            if ok {
                go(x + 1, index, p, target, choices, squares, current, out);
            }
            current.pop();
        }
    }
    go(0, index, p, target, &choices, &squares, &mut current, &mut out);
    Ok(out)
}

/// Every normed functor `X → Set//V` whose sets have at most `max_size`
/// elements, with norms drawn from `pool`.
pub fn small_test_functors<Q: Quantale>(
    q: &Q,
    index: &NormedCategory<Q::Value>,
    pool: &[Q::Value],
    max_size: usize,
    cap: u64,
) -> Result<Vec<Presheaf<Q::Value>>, CarrierTooLarge> {
    let n = index.object_count();
    let free: Vec<usize> = (0..index.morphism_count())
        .filter(|&f| !index.is_identity(f))
        .collect();
    let mut out = vec![];
    let mut budget: u128 = 0;
    for sizes in all_maps(n, max_size + 1) {
        let action_count = free.iter().fold(1u128, |acc, &f| {
            acc.saturating_mul(count_maps(sizes[index.dom(f)], sizes[index.cod(f)]))
        });
        let total: usize = sizes.iter().sum();
        budget = budget.saturating_add(
            action_count.saturating_add(count_maps(total, pool.len())),
        );
        check_cap(budget, cap)?;
        let functorial: Vec<Vec<Vec<usize>>> = free
            .iter()
            .map(|&f| all_maps(sizes[index.dom(f)], sizes[index.cod(f)]).collect::<Vec<_>>())
            .multi_cartesian_product()
            .filter_map(|chosen| {
                let mut actions: Vec<Vec<usize>> = (0..index.morphism_count())
                    .map(|f| identity(sizes[index.dom(f)]))
                    .collect();
                for (&f, a) in free.iter().zip(chosen) {
                    actions[f] = a;
                }
                let shape = Presheaf {
                    sets: sizes.iter().map(|&s| NormedSet::numbered(vec![q.bottom(); s])).collect(),
                    actions,
                };
                check_presheaf(index, &shape).ok().map(|_| shape.actions)
            })
            .collect();
        let functorial = if free.is_empty() {
            vec![(0..index.morphism_count()).map(|f| identity(sizes[index.dom(f)])).collect()]
        } else {
            functorial
        };
        for norms in all_maps(total, pool.len()) {
            let mut offset = 0;
            let sets: Vec<NormedSet<Q::Value>> = sizes
                .iter()
                .map(|&s| {
                    let set = NormedSet::numbered(norms[offset..offset + s].iter().map(|&i| pool[i].clone()).collect());
                    offset += s;
                    set
                })
                .collect();
            for actions in &functorial {
                let candidate = Presheaf {
                    sets: sets.clone(),
                    actions: actions.clone(),
                };
                if normed_presheaf_witness(q, index, &candidate).is_none() {
                    out.push(candidate);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub enum PresheafTail {
    Identity,
    /// An idempotent natural endotransformation of the last stage.
    Idempotent(Natural),
}

/// `P_0 → P_1 → … → P_K` followed by a tail.
#[derive(Debug, Clone)]
pub struct PresheafSequence<'a, V> {
    pub index: &'a NormedCategory<V>,
    pub stages: Vec<Presheaf<V>>,
    /// `maps[n]: P_n → P_{n+1}`.
    pub maps: Vec<Natural>,
    pub tail: PresheafTail,
}

impl<'a, V: Clone> PresheafSequence<'a, V> {
    pub fn new(
        index: &'a NormedCategory<V>,
        stages: Vec<Presheaf<V>>,
        maps: Vec<Natural>,
        tail: PresheafTail,
    ) -> Result<Self, CauchyError> {
        if stages.is_empty() || maps.len() + 1 != stages.len() {
            return Err(CauchyError::MalformedSequence(format!(
                "{} stages need {} maps, got {}",
                stages.len(),
                stages.len().saturating_sub(1),
                maps.len()
            )));
        }
        for p in &stages {
            check_presheaf(index, p)?;
        }
        for (n, m) in maps.iter().enumerate() {
            check_natural(index, &stages[n], &stages[n + 1], m)?;
        }
        if let PresheafTail::Idempotent(e) = &tail {
            let last = stages.last().expect("nonempty");
            check_natural(index, last, last, e)?;
            if compose_natural(e, e) != *e {
                return Err(CauchyError::NotIdempotent("tail transformation".into()));
            }
        }
        Ok(PresheafSequence {
            index,
            stages,
            maps,
            tail,
        })
    }

    pub fn tail_start(&self) -> usize {
        self.stages.len() - 1
    }

    pub fn stage(&self, n: usize) -> &Presheaf<V> {
        &self.stages[n.min(self.tail_start())]
    }

    pub fn connecting(&self, n: usize) -> Natural {
        if n < self.maps.len() {
            return self.maps[n].clone();
        }
        match &self.tail {
            PresheafTail::Identity => Natural::identity(self.stage(n)),
            PresheafTail::Idempotent(e) => e.clone(),
        }
    }

    /// `σ_{m,n}` for `m ≤ n`.
    pub fn composite(&self, m: usize, n: usize) -> Natural {
        let n = n.min(self.tail_start().max(m) + 1);
        (m..n).fold(Natural::identity(self.stage(m)), |acc, i| {
            compose_natural(&acc, &self.connecting(i))
        })
    }

    /// The normed-set sequence at one object.
    pub fn at(&self, x: usize) -> NormedSetSequence<V> {
        NormedSetSequence::new(
            self.stages.iter().map(|p| p.sets[x].clone()).collect(),
            self.maps.iter().map(|m| m.components[x].clone()).collect(),
            match &self.tail {
                PresheafTail::Identity => Tail::Identity,
                PresheafTail::Idempotent(e) => Tail::Idempotent(e.components[x].clone()),
            },
        )
        .expect("validated sequence")
    }

    /// `⋁_N ⋀_{n≥m≥N} |σ_{m,n}|` with `|σ| = ⋀_x |σ^x|`.
    pub fn cauchy_value<Q: Quantale<Value = V>>(&self, q: &Q) -> V {
        let k = self.tail_start();
        let horizon = k + 2;
        q.join_all((0..=k + 1).map(|n0| {
            q.meet_all((n0..=horizon).flat_map(|m| {
                (m..=horizon).map(move |n| {
                    natural_norm(q, self.stage(m), self.stage(n), &self.composite(m, n))
                })
            }))
        }))
    }
}

#[derive(Debug, Clone)]
pub struct PresheafOptions<V> {
    /// Largest set size in the enumerated target family.
    pub max_target_size: usize,
    /// Norm values for the target family; defaults to the whole carrier of
    /// a finite quantale, otherwise to the values occurring in the sequence.
    pub value_pool: Option<Vec<V>>,
    pub extra_targets: Vec<Presheaf<V>>,
    pub cap: u64,
}

impl<V> Default for PresheafOptions<V> {
    fn default() -> Self {
        PresheafOptions {
            max_target_size: 2,
            value_pool: None,
            extra_targets: vec![],
            cap: crate::enumerate::DEFAULT_CHOICE_CAP,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PresheafColimit<V> {
    pub colimit: Presheaf<V>,
    /// `legs[n]: P_n → P` for `n ≤ K`.
    pub legs: Vec<Natural>,
    pub targets_checked: usize,
    pub transformations_checked: usize,
    pub report: ValidationReport,
}

fn value_pool<Q: Quantale>(q: &Q, seq: &PresheafSequence<'_, Q::Value>) -> Vec<Q::Value> {
    if let Some(all) = q.elements() {
        return all;
    }
    let mut pool: Vec<Q::Value> = vec![q.bottom(), q.unit(), q.top()];
    for v in seq
        .stages
        .iter()
        .flat_map(|p| p.sets.iter().flat_map(|s| s.norm.iter()))
        .chain(seq.index.norm.iter())
    {
        if !pool.contains(v) {
            pool.push(v.clone());
        }
    }
    pool
}

/// Objectwise set colimit with the Cauchy norm, and a report on (C1),
/// (C2a) and (C2b) over the enumerated target family.
pub fn presheaf_cauchy_colimit<Q: Quantale>(
    q: &Q,
    seq: &PresheafSequence<'_, Q::Value>,
    opts: &PresheafOptions<Q::Value>,
) -> Result<PresheafColimit<Q::Value>, CauchyError> {
    let index = seq.index;
    let n_obj = index.object_count();
    let k = seq.tail_start();
    let mut report = ValidationReport::new();

    let cauchy = seq.cauchy_value(q);
    report.record(
        "sequence is Cauchy",
        (!q.is_k(&cauchy)).then(|| format!("value {}", q.format_value(&cauchy))),
    );
    match check_conditions(q, false) {
        Ok(c) if c.condition_a.holds || c.condition_b.holds => {
            report.push("condition A or B", Status::Pass, None);
            report = report.with_detail(format!(
                "A: {}, B: {}",
                c.condition_a.holds, c.condition_b.holds
            ));
        }
        Ok(_) => {
            report.push("condition A or B", Status::Advisory, None);
            report = report.with_detail("neither holds; the remaining checks are not backed by the theorem");
        }
        Err(e) => {
            report.push("condition A or B", Status::Advisory, None);
            report = report.with_detail(format!("unknown: {e}"));
        }
    }

    let mut sets = Vec::with_capacity(n_obj);
    let mut carriers = Vec::with_capacity(n_obj);
    let mut leg_components: Vec<Vec<Vec<usize>>> = vec![Vec::with_capacity(n_obj); k + 1];
    for x in 0..n_obj {
        let s = seq.at(x);
        let col = seq_colimit(q, &s, NormMode::Cauchy)?;
        let last = s.stage(k).len();
        carriers.push(match &seq.tail {
            PresheafTail::Identity => (0..last).collect::<Vec<_>>(),
            PresheafTail::Idempotent(e) => (0..last).filter(|&i| e.components[x][i] == i).collect(),
        });
        for (n, leg) in col.legs.into_iter().enumerate() {
            leg_components[n].push(leg);
        }
        sets.push(col.set);
    }
    let actions = (0..index.morphism_count())
        .map(|f| {
            let (d, c) = (index.dom(f), index.cod(f));
            let pf = &seq.stage(k).actions[f];
            carriers[d]
                .iter()
                .map(|&a| {
                    carriers[c]
                        .iter()
                        .position(|&b| b == pf[a])
                        .expect("idempotent tails are natural")
                })
                .collect()
        })
        .collect();
    let colimit = Presheaf { sets, actions };
    let legs: Vec<Natural> = leg_components
        .into_iter()
        .map(|components| Natural { components })
        .collect();

    report.record("colimit is a functor", check_presheaf(index, &colimit).err().map(|e| e.to_string()));
    report.record(
        "legs are natural",
        legs.iter()
            .enumerate()
            .find_map(|(n, g)| check_natural(index, seq.stage(n), &colimit, g).err().map(|e| format!("γ_{n}: {e}"))),
    );
    report.record(
        "C1 colimit is a normed functor",
        normed_presheaf_witness(q, index, &colimit).map(|f| index.name(f).to_string()),
    );

    let eventual = |alpha: Option<(&Presheaf<Q::Value>, &Natural)>| {
        let norms: Vec<Q::Value> = legs
            .iter()
            .enumerate()
            .map(|(n, g)| match alpha {
                None => natural_norm(q, seq.stage(n), &colimit, g),
                Some((target, a)) => natural_norm(q, seq.stage(n), target, &compose_natural(g, a)),
            })
            .collect();
        q.join_all((0..norms.len()).map(|n0| q.meet_all(norms[n0..].iter().cloned())))
    };
    let c2a = eventual(None);
    report.record(
        "C2a k-cocone",
        (!q.is_k(&c2a)).then(|| format!("eventual leg norm {}", q.format_value(&c2a))),
    );

    let pool = opts.value_pool.clone().unwrap_or_else(|| value_pool(q, seq));
    let mut targets = small_test_functors(q, index, &pool, opts.max_target_size, opts.cap)?;
    targets.extend(opts.extra_targets.iter().cloned());
    let mut transformations = 0usize;
    let mut witness = None;
    'targets: for (i, target) in targets.iter().enumerate() {
        for alpha in natural_transformations(index, &colimit, target, opts.cap)? {
            transformations += 1;
            let lower = eventual(Some((target, &alpha)));
            if !q.leq(&lower, &natural_norm(q, &colimit, target, &alpha)) {
                witness = Some(format!("target {i}, transformation {:?}", alpha.components));
                break 'targets;
            }
        }
    }
    report.record("C2b norm reflection", witness);
    report = report.with_detail(format!(
        "checked against {} target functors and {} transformations; targets outside this family are not covered",
        targets.len(),
        transformations
    ));

    Ok(PresheafColimit {
        colimit,
        legs,
        targets_checked: targets.len(),
        transformations_checked: transformations,
        report,
    })
}
