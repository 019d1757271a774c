//! Finite normed categories.
//!
//! A category is an explicit table: morphisms with domain and codomain, an
//! identity per object, and a composite for every composable pair.
//! `comp(g, f)` is `g·f`, first `f` then `g`.
//!
//! Isomorphisms of the underlying category need not be isomorphisms among
//! the k-morphisms, even when both directions are k-morphisms one way; use
//! [`NormedCategory::is_k_iso`] rather than [`NormedCategory::inverse`] when
//! the norm matters.

use std::collections::HashMap;

use thiserror::Error;

use crate::enumerate::{all_maps, check_cap, count_maps, CarrierTooLarge};
use crate::normed_sets::{compose as compose_maps, hom_norm, NormedSet};
use crate::quantale::{ExtReal, FiniteMonoid, Quantale};
use crate::report::ValidationReport;
use crate::vcat::VCategory;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("malformed category: {0}")]
    MalformedCategory(String),
    #[error("not a functor: {0}")]
    NotAFunctor(String),
    #[error("not a group: {0} has no inverse")]
    NotAGroup(String),
    #[error("fraction {0}/{1} is outside the supported range")]
    FractionOutOfRange(u64, u64),
    #[error(transparent)]
    CarrierTooLarge(#[from] CarrierTooLarge),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormedCategory<V> {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    pub identities: Vec<usize>,
    /// `table[g][f] = Some(g·f)` exactly when `cod f = dom g`.
    table: Vec<Vec<Option<usize>>>,
    pub norm: Vec<V>,
}

fn malformed<T>(msg: impl Into<String>) -> Result<T, CategoryError> {
    Err(CategoryError::MalformedCategory(msg.into()))
}

impl<V: Clone> NormedCategory<V> {
    /// Validates the table. Composites with identities may be omitted.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        composites: &[(usize, usize, usize)],
        norm: Vec<V>,
    ) -> Result<Self, CategoryError> {
        let (no, nm) = (objects.len(), morphisms.len());
        if norm.len() != nm {
            return malformed(format!("{} norms for {nm} morphisms", norm.len()));
        }
        if let Some(m) = morphisms.iter().find(|m| m.dom >= no || m.cod >= no) {
            return malformed(format!("{} has an unknown endpoint", m.name));
        }
        if identities.len() != no {
            return malformed("one identity per object required");
        }
        for (x, &i) in identities.iter().enumerate() {
            if i >= nm || morphisms[i].dom != x || morphisms[i].cod != x {
                return malformed(format!("identity of {} is not an endomorphism of it", objects[x]));
            }
        }
        let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; nm]; nm];
        let mut set = |g: usize, f: usize, h: usize| -> Result<(), CategoryError> {
            match table[g][f] {
                Some(old) if old != h => malformed(format!(
                    "{}·{} given as both {} and {}",
                    morphisms[g].name, morphisms[f].name, morphisms[old].name, morphisms[h].name
                )),
                _ => {
                    table[g][f] = Some(h);
                    Ok(())
                }
            }
        };
        for (f, m) in morphisms.iter().enumerate() {
            set(identities[m.cod], f, f)?;
            set(f, identities[m.dom], f)?;
        }
        for &(g, f, h) in composites {
            if g >= nm || f >= nm || h >= nm {
                return malformed("composite refers to an unknown morphism");
            }
            let (mg, mf, mh) = (&morphisms[g], &morphisms[f], &morphisms[h]);
            if mf.cod != mg.dom {
                return malformed(format!("{}·{} is not composable", mg.name, mf.name));
            }
            if mh.dom != mf.dom || mh.cod != mg.cod {
                return malformed(format!("{}·{} = {} has the wrong type", mg.name, mf.name, mh.name));
            }
            set(g, f, h)?;
        }
        for g in 0..nm {
            for f in 0..nm {
                if morphisms[f].cod == morphisms[g].dom && table[g][f].is_none() {
                    return malformed(format!(
                        "missing composite {}·{}",
                        morphisms[g].name, morphisms[f].name
                    ));
                }
            }
        }
        let cat = NormedCategory {
            objects,
            morphisms,
            identities,
            table,
            norm,
        };
        for f in 0..nm {
            for g in cat.out_of(cat.morphisms[f].cod) {
                for h in cat.out_of(cat.morphisms[g].cod) {
                    if cat.comp(h, cat.comp(g, f)) != cat.comp(cat.comp(h, g), f) {
                        return malformed(format!(
                            "composition not associative at ({}, {}, {})",
                            cat.morphisms[f].name, cat.morphisms[g].name, cat.morphisms[h].name
                        ));
                    }
                }
            }
        }
        Ok(cat)
    }

    /// Builds from names. Identities are given per object, in object order.
    pub fn from_names(
        objects: &[&str],
        morphisms: &[(&str, &str, &str)],
        identities: &[&str],
        composites: &[(&str, &str, &str)],
        norm: Vec<V>,
    ) -> Result<Self, CategoryError> {
        let obj = |n: &str| {
            objects
                .iter()
                .position(|o| *o == n)
                .ok_or_else(|| CategoryError::MalformedCategory(format!("unknown object {n}")))
        };
        let mor_list = morphisms
            .iter()
            .map(|&(name, d, c)| {
                Ok(Morphism {
                    name: name.to_string(),
                    dom: obj(d)?,
                    cod: obj(c)?,
                })
            })
            .collect::<Result<Vec<_>, CategoryError>>()?;
        let mor = |n: &str| {
            morphisms
                .iter()
                .position(|m| m.0 == n)
                .ok_or_else(|| CategoryError::MalformedCategory(format!("unknown morphism {n}")))
        };
        let ids = identities.iter().map(|n| mor(n)).collect::<Result<Vec<_>, _>>()?;
        let comps = composites
            .iter()
            .map(|&(g, f, h)| Ok((mor(g)?, mor(f)?, mor(h)?)))
            .collect::<Result<Vec<_>, CategoryError>>()?;
        Self::new(
            objects.iter().map(|s| s.to_string()).collect(),
            mor_list,
            ids,
            &comps,
            norm,
        )
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn dom(&self, f: usize) -> usize {
        self.morphisms[f].dom
    }

    pub fn cod(&self, f: usize) -> usize {
        self.morphisms[f].cod
    }

    pub fn name(&self, f: usize) -> &str {
        &self.morphisms[f].name
    }

    pub fn mor(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn obj(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn id(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.dom(f)] == f
    }

    /// `g·f`; panics unless `cod f = dom g`.
    pub fn comp(&self, g: usize, f: usize) -> usize {
        self.table[g][f].unwrap_or_else(|| {
            panic!("{}·{} is not composable", self.name(g), self.name(f))
        })
    }

    pub fn try_comp(&self, g: usize, f: usize) -> Option<usize> {
        self.table[g][f]
    }

    /// `g·f` for composite chains written left to right in application order.
    pub fn comp_path(&self, path: &[usize]) -> Option<usize> {
        let (&first, rest) = path.split_first()?;
        rest.iter().try_fold(first, |acc, &g| self.try_comp(g, acc))
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphism_count())
            .filter(|&f| self.dom(f) == x && self.cod(f) == y)
            .collect()
    }

    pub fn out_of(&self, x: usize) -> Vec<usize> {
        (0..self.morphism_count()).filter(|&f| self.dom(f) == x).collect()
    }

    pub fn into(&self, y: usize) -> Vec<usize> {
        (0..self.morphism_count()).filter(|&f| self.cod(f) == y).collect()
    }

    /// The inverse of `f` in the underlying category.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        self.hom(self.cod(f), self.dom(f)).into_iter().find(|&g| {
            self.comp(g, f) == self.id(self.dom(f)) && self.comp(f, g) == self.id(self.cod(f))
        })
    }

    /// Replaces all norms.
    pub fn with_norm<W>(&self, norm: Vec<W>) -> NormedCategory<W> {
        assert_eq!(norm.len(), self.morphism_count());
        NormedCategory {
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            identities: self.identities.clone(),
            table: self.table.clone(),
            norm,
        }
    }

    pub fn is_k_morphism<Q: Quantale<Value = V>>(&self, q: &Q, f: usize) -> bool {
        q.is_k(&self.norm[f])
    }

    /// An isomorphism whose inverse is also a k-morphism, and which is one itself.
    pub fn is_k_iso<Q: Quantale<Value = V>>(&self, q: &Q, f: usize) -> Option<usize> {
        self.inverse(f)
            .filter(|&g| self.is_k_morphism(q, f) && self.is_k_morphism(q, g))
    }

    /// A k-isomorphism `x → y`, if any.
    pub fn k_iso_between<Q: Quantale<Value = V>>(&self, q: &Q, x: usize, y: usize) -> Option<usize> {
        self.hom(x, y).into_iter().find(|&f| self.is_k_iso(q, f).is_some())
    }
}

/// `k ≤ |1_x|` and `|f| ⊗ |g| ≤ |g·f|`.
pub fn check_normed_category<Q: Quantale>(
    q: &Q,
    c: &NormedCategory<Q::Value>,
) -> ValidationReport {
    let mut r = ValidationReport::new();
    r.record(
        "identity norms",
        (0..c.object_count())
            .find(|&x| !q.is_k(&c.norm[c.id(x)]))
            .map(|x| c.name(c.id(x)).to_string()),
    );
    r.record(
        "composition norms",
        composable_pairs(c)
            .find(|&(f, g)| !q.leq(&q.tensor(&c.norm[f], &c.norm[g]), &c.norm[c.comp(g, f)]))
            .map(|(f, g)| format!("f={}, g={}", c.name(f), c.name(g))),
    );
    r
}

/// Pairs `(f, g)` with `g·f` defined.
pub fn composable_pairs<V: Clone>(
    c: &NormedCategory<V>,
) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..c.morphism_count()).flat_map(move |f| c.out_of(c.cod(f)).into_iter().map(move |g| (f, g)))
}

/// The k-morphisms, with a report that they form a wide subcategory.
pub fn k_morphisms<Q: Quantale>(
    q: &Q,
    c: &NormedCategory<Q::Value>,
) -> (Vec<usize>, ValidationReport) {
    let ks: Vec<usize> = (0..c.morphism_count())
        .filter(|&f| c.is_k_morphism(q, f))
        .collect();
    let mut r = ValidationReport::new();
    r.record(
        "contains identities",
        c.identities
            .iter()
            .find(|i| !ks.contains(i))
            .map(|&i| c.name(i).to_string()),
    );
    r.record(
        "closed under composition",
        composable_pairs(c)
            .find(|&(f, g)| ks.contains(&f) && ks.contains(&g) && !ks.contains(&c.comp(g, f)))
            .map(|(f, g)| format!("f={}, g={}", c.name(f), c.name(g))),
    );
    (ks, r)
}

/// Condition (S): `|f·h| ⊗ |h| ≤ |f|`. Returns the first failing `(f, h)`.
pub fn check_s<Q: Quantale>(q: &Q, c: &NormedCategory<Q::Value>) -> Option<(usize, usize)> {
    composable_pairs(c)
        .map(|(h, f)| (f, h))
        .find(|&(f, h)| !q.leq(&q.tensor(&c.norm[c.comp(f, h)], &c.norm[h]), &c.norm[f]))
}

/// Condition (S^op): `|g·f| ⊗ |g| ≤ |f|`. Returns the first failing `(f, g)`.
pub fn check_sop<Q: Quantale>(q: &Q, c: &NormedCategory<Q::Value>) -> Option<(usize, usize)> {
    composable_pairs(c)
        .find(|&(f, g)| !q.leq(&q.tensor(&c.norm[c.comp(g, f)], &c.norm[g]), &c.norm[f]))
}

pub fn symmetry_conditions_report<Q: Quantale>(
    q: &Q,
    c: &NormedCategory<Q::Value>,
) -> ValidationReport {
    let mut r = ValidationReport::new();
    r.record(
        "forward symmetric (S)",
        check_s(q, c).map(|(f, h)| format!("f={}, h={}", c.name(f), c.name(h))),
    );
    r.record(
        "backward symmetric (S^op)",
        check_sop(q, c).map(|(f, g)| format!("f={}, g={}", c.name(f), c.name(g))),
    );
    r
}

/// `iX`: one morphism `x→y` per pair, normed by `X(x,y)`.
pub fn from_vcategory<Q: Quantale>(
    _q: &Q,
    x: &VCategory<Q::Value>,
) -> NormedCategory<Q::Value> {
    let n = x.len();
    let idx = |a: usize, b: usize| a * n + b;
    let morphisms = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| Morphism {
            name: format!("{}→{}", x.points[a], x.points[b]),
            dom: a,
            cod: b,
        })
        .collect();
    let composites: Vec<_> = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (idx(b, c), idx(a, b), idx(a, c)))))
        .collect();
    let norm = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| x.d[a][b].clone())
        .collect();
    NormedCategory::new(
        x.points.clone(),
        morphisms,
        (0..n).map(|a| idx(a, a)).collect(),
        &composites,
        norm,
    )
    .expect("indiscrete category is well formed")
}

/// `sC`: `(sC)(x,y) = ⋁ { |f| : f: x → y }`.
pub fn sum_vcategory<Q: Quantale>(q: &Q, c: &NormedCategory<Q::Value>) -> VCategory<Q::Value> {
    let n = c.object_count();
    VCategory {
        points: c.objects.clone(),
        d: (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| q.join_all(c.hom(a, b).into_iter().map(|f| c.norm[f].clone())))
                    .collect()
            })
            .collect(),
    }
}

/// The one-object category whose morphisms are all self-maps of a normed
/// set, normed by [`hom_norm`]. Morphism names list images, e.g. `(0,2,2)`.
pub fn endomap_category<Q: Quantale>(
    q: &Q,
    a: &NormedSet<Q::Value>,
    cap: u64,
) -> Result<NormedCategory<Q::Value>, CategoryError> {
    check_cap(count_maps(a.len(), a.len()), cap)?;
    let maps: Vec<Vec<usize>> = all_maps(a.len(), a.len()).collect();
    let index: HashMap<Vec<usize>, usize> =
        maps.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let name = |m: &[usize]| {
        let parts: Vec<String> = m.iter().map(|i| i.to_string()).collect();
        format!("({})", parts.join(","))
    };
    let morphisms = maps
        .iter()
        .map(|m| Morphism {
            name: name(m),
            dom: 0,
            cod: 0,
        })
        .collect();
    let mut composites = vec![];
    for (g, mg) in maps.iter().enumerate() {
        for (f, mf) in maps.iter().enumerate() {
            composites.push((g, f, index[&compose_maps(mf, mg)]));
        }
    }
    let norm = maps
        .iter()
        .map(|m| hom_norm(q, m, a, a).expect("total map"))
        .collect();
    let id = index[&(0..a.len()).collect::<Vec<_>>()];
    NormedCategory::new(vec!["A".into()], morphisms, vec![id], &composites, norm)
}

/// `E`: one object, identity normed by `k`.
pub fn unit_category<Q: Quantale>(q: &Q) -> NormedCategory<Q::Value> {
    NormedCategory::new(
        vec!["*".into()],
        vec![Morphism {
            name: "1".into(),
            dom: 0,
            cod: 0,
        }],
        vec![0],
        &[],
        vec![q.unit()],
    )
    .expect("unit category")
}

/// `C ⊗ D` with `|(f, f')| = |f| ⊗ |f'|`; pairs are ordered row-major.
pub fn tensor_normed_cats<Q: Quantale>(
    q: &Q,
    c: &NormedCategory<Q::Value>,
    d: &NormedCategory<Q::Value>,
) -> NormedCategory<Q::Value> {
    let (nc, nd) = (c.morphism_count(), d.morphism_count());
    let od = d.object_count();
    let pair = |f: usize, g: usize| f * nd + g;
    let objects = c
        .objects
        .iter()
        .flat_map(|a| d.objects.iter().map(move |b| format!("({a},{b})")))
        .collect();
    let mut morphisms = vec![];
    let mut norm = vec![];
    for f in 0..nc {
        for g in 0..nd {
            morphisms.push(Morphism {
                name: format!("({},{})", c.name(f), d.name(g)),
                dom: c.dom(f) * od + d.dom(g),
                cod: c.cod(f) * od + d.cod(g),
            });
            norm.push(q.tensor(&c.norm[f], &d.norm[g]));
        }
    }
    let identities = (0..c.object_count())
        .flat_map(|a| (0..od).map(move |b| (a, b)))
        .map(|(a, b)| pair(c.id(a), d.id(b)))
        .collect();
    let mut composites = vec![];
    for (f1, g1) in composable_pairs(c) {
        for (f2, g2) in composable_pairs(d) {
            composites.push((pair(g1, g2), pair(f1, f2), pair(c.comp(g1, f1), d.comp(g2, f2))));
        }
    }
    NormedCategory::new(objects, morphisms, identities, &composites, norm)
        .expect("product of categories is a category")
}

/// A functor between finite categories, by object and morphism images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl Functor {
    pub fn identity<V: Clone>(c: &NormedCategory<V>) -> Self {
        Functor {
            objects: (0..c.object_count()).collect(),
            morphisms: (0..c.morphism_count()).collect(),
        }
    }
}

pub fn check_functor<V: Clone, W: Clone>(
    c: &NormedCategory<V>,
    d: &NormedCategory<W>,
    f: &Functor,
) -> Result<(), CategoryError> {
    let bad = |msg: String| Err(CategoryError::NotAFunctor(msg));
    if f.objects.len() != c.object_count() || f.morphisms.len() != c.morphism_count() {
        return bad("image tables have the wrong length".into());
    }
    if f.objects.iter().any(|&o| o >= d.object_count())
        || f.morphisms.iter().any(|&m| m >= d.morphism_count())
    {
        return bad("image outside the target".into());
    }
    for m in 0..c.morphism_count() {
        let fm = f.morphisms[m];
        if d.dom(fm) != f.objects[c.dom(m)] || d.cod(fm) != f.objects[c.cod(m)] {
            return bad(format!("{} is sent to a morphism of the wrong type", c.name(m)));
        }
    }
    for x in 0..c.object_count() {
        if f.morphisms[c.id(x)] != d.id(f.objects[x]) {
            return bad(format!("identity of {} is not preserved", c.objects[x]));
        }
    }
    for (a, b) in composable_pairs(c) {
        if f.morphisms[c.comp(b, a)] != d.comp(f.morphisms[b], f.morphisms[a]) {
            return bad(format!("composite {}·{} is not preserved", c.name(b), c.name(a)));
        }
    }
    Ok(())
}

/// `|Ff| ≥ |f|` for every morphism, the normed-functor condition.
pub fn is_normed_functor<Q: Quantale>(
    q: &Q,
    c: &NormedCategory<Q::Value>,
    d: &NormedCategory<Q::Value>,
    f: &Functor,
) -> bool {
    (0..c.morphism_count()).all(|m| q.leq(&c.norm[m], &d.norm[f.morphisms[m]]))
}

/// The largest norm on `c` making every `F_i` normed: `|f| = ⋀_i |F_i f|`.
pub fn initial_normed_structure<Q: Quantale, V: Clone>(
    q: &Q,
    c: &NormedCategory<V>,
    functors: &[(Functor, &NormedCategory<Q::Value>)],
) -> Result<NormedCategory<Q::Value>, CategoryError> {
    for (f, d) in functors {
        check_functor(c, d, f)?;
    }
    let norm = (0..c.morphism_count())
        .map(|m| q.meet_all(functors.iter().map(|(f, d)| d.norm[f.morphisms[m]].clone())))
        .collect();
    Ok(c.with_norm(norm))
}

/// A monoid with a norm on its elements.
#[derive(Debug, Clone, PartialEq)]
pub struct NormedMonoid<V> {
    pub monoid: FiniteMonoid,
    pub norm: Vec<V>,
}

impl<V: Clone> NormedMonoid<V> {
    /// The one-object category with `g·f = g f`.
    pub fn as_category(&self) -> NormedCategory<V> {
        let m = &self.monoid;
        let morphisms = m
            .elements
            .iter()
            .map(|e| Morphism {
                name: e.clone(),
                dom: 0,
                cod: 0,
            })
            .collect();
        let n = m.len();
        let composites: Vec<_> = (0..n)
            .flat_map(|g| (0..n).map(move |f| (g, f, m.op(g, f))))
            .collect();
        NormedCategory::new(
            vec!["*".into()],
            morphisms,
            vec![m.identity],
            &composites,
            self.norm.clone(),
        )
        .expect("a monoid is a one-object category")
    }
}

/// `k ≤ |1|` and `|a| ⊗ |b| ≤ |ab|`.
pub fn check_normed_monoid<Q: Quantale>(q: &Q, m: &NormedMonoid<Q::Value>) -> ValidationReport {
    let mo = &m.monoid;
    let mut r = ValidationReport::new();
    r.record(
        "unit norm",
        (!q.is_k(&m.norm[mo.identity])).then(|| mo.elements[mo.identity].clone()),
    );
    let n = mo.len();
    r.record(
        "product norms",
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| !q.leq(&q.tensor(&m.norm[a], &m.norm[b]), &m.norm[mo.op(a, b)]))
            .map(|(a, b)| format!("({}, {})", mo.elements[a], mo.elements[b])),
    );
    r
}

/// `A(a,b) = |a⁻¹ b|`.
pub fn group_to_vcat<V: Clone>(g: &NormedMonoid<V>) -> Result<VCategory<V>, CategoryError> {
    let m = &g.monoid;
    let inv = (0..m.len())
        .map(|a| {
            m.inverse(a)
                .ok_or_else(|| CategoryError::NotAGroup(m.elements[a].clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VCategory {
        points: m.elements.clone(),
        d: (0..m.len())
            .map(|a| (0..m.len()).map(|b| g.norm[m.op(inv[a], b)].clone()).collect())
            .collect(),
    })
}

/// `|a| = A(1, a)`.
pub fn vcat_to_group_norm<V: Clone>(monoid: &FiniteMonoid, a: &VCategory<V>) -> NormedMonoid<V> {
    NormedMonoid {
        monoid: monoid.clone(),
        norm: a.d[monoid.identity].clone(),
    }
}

/// First `(a, b, c)` with `A(ca, cb) ≠ A(a, b)`.
pub fn left_invariance_witness<V: Clone + PartialEq>(
    monoid: &FiniteMonoid,
    a: &VCategory<V>,
) -> Option<(usize, usize, usize)> {
    let n = monoid.len();
    (0..n)
        .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |c| (x, y, c))))
        .find(|&(x, y, c)| a.d[monoid.op(c, x)][monoid.op(c, y)] != a.d[x][y])
}

/// `|a⁻¹| = |a|` for every element.
pub fn is_normed_group<V: Clone + PartialEq>(g: &NormedMonoid<V>) -> Result<bool, CategoryError> {
    let m = &g.monoid;
    (0..m.len()).try_fold(true, |ok, a| {
        let inv = m
            .inverse(a)
            .ok_or_else(|| CategoryError::NotAGroup(m.elements[a].clone()))?;
        Ok(ok && g.norm[inv] == g.norm[a])
    })
}

/// Largest numerator or denominator accepted by [`rational_prime_norm`].
pub const RATIONAL_CAP: u64 = 1_000_000;

/// Norm on the positive rationals: the sum of absolute prime exponents of
/// `num/den`, by trial division.
pub fn rational_prime_norm(num: u64, den: u64) -> Result<ExtReal, CategoryError> {
    if num == 0 || den == 0 || num > RATIONAL_CAP || den > RATIONAL_CAP {
        return Err(CategoryError::FractionOutOfRange(num, den));
    }
    let mut exps: HashMap<u64, i64> = HashMap::new();
    for (value, sign) in [(num, 1i64), (den, -1i64)] {
        let mut v = value;
        let mut p = 2;
        while p * p <= v {
            while v % p == 0 {
                *exps.entry(p).or_default() += sign;
                v /= p;
            }
            p += 1;
        }
        if v > 1 {
            *exps.entry(v).or_default() += sign;
        }
    }
    Ok(ExtReal::of(exps.values().map(|e| e.unsigned_abs()).sum::<u64>() as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::{Boolean2, LawverePlus};

    fn x(v: f64) -> ExtReal {
        ExtReal::of(v)
    }

    fn z4(norm: [f64; 4]) -> NormedMonoid<ExtReal> {
        NormedMonoid {
            monoid: FiniteMonoid::cyclic(4),
            norm: norm.map(x).to_vec(),
        }
    }

    #[test]
    fn cyclic_monoid_norms() {
        let q = LawverePlus;
        assert!(check_normed_monoid(&q, &z4([0.0; 4])).all_passed());
        assert!(check_normed_category(&q, &z4([0.0; 4]).as_category()).all_passed());
        // word length in Z4: |a|+|b| ≥ |a+b| numerically
        let word = z4([0.0, 1.0, 2.0, 1.0]);
        assert!(check_normed_monoid(&q, &word).all_passed());
        // |0| must be k
        let bad = z4([1.0, 1.0, 2.0, 1.0]);
        assert!(!check_normed_monoid(&q, &bad).passed("unit norm"));
    }

    #[test]
    fn composition_norm_failure_witness() {
        let q = LawverePlus;
        // f: a→b, g: b→c, g·f = h with |h| = 5 > |f|+|g| = 2
        let c = NormedCategory::from_names(
            &["a", "b", "c"],
            &[
                ("1a", "a", "a"),
                ("1b", "b", "b"),
                ("1c", "c", "c"),
                ("f", "a", "b"),
                ("g", "b", "c"),
                ("h", "a", "c"),
            ],
            &["1a", "1b", "1c"],
            &[("g", "f", "h")],
            [0.0, 0.0, 0.0, 1.0, 1.0, 5.0].map(x).to_vec(),
        )
        .unwrap();
        let r = check_normed_category(&q, &c);
        assert_eq!(r.get("composition norms").unwrap().witness.as_deref(), Some("f=f, g=g"));
    }

    #[test]
    fn malformed_tables_rejected() {
        let missing = NormedCategory::from_names(
            &["a", "b", "c"],
            &[("1a", "a", "a"), ("1b", "b", "b"), ("1c", "c", "c"), ("f", "a", "b"), ("g", "b", "c")],
            &["1a", "1b", "1c"],
            &[],
            vec![true; 5],
        );
        assert!(matches!(missing, Err(CategoryError::MalformedCategory(_))));
    }

    fn endo27() -> NormedCategory<ExtReal> {
        let a = NormedSet::numbered(vec![x(0.0), x(1.0), x(2.0)]);
        endomap_category(&LawverePlus, &a, 1000).unwrap()
    }

    #[test]
    fn endomap_category_fails_s() {
        let q = LawverePlus;
        let c = endo27();
        assert_eq!(c.morphism_count(), 27);
        assert!(check_normed_category(&q, &c).all_passed());
        let (f, h) = (c.mor("(0,2,2)").unwrap(), c.mor("(0,0,1)").unwrap());
        assert_eq!(c.norm[c.comp(f, h)], x(0.0));
        assert_eq!(c.norm[h], x(0.0));
        assert_eq!(c.norm[f], x(1.0));
        let (wf, wh) = check_s(&q, &c).unwrap();
        assert!(!q.leq(&q.tensor(&c.norm[c.comp(wf, wh)], &c.norm[wh]), &c.norm[wf]));
        let s = sum_vcategory(&q, &c);
        assert_eq!(s.d, vec![vec![x(0.0)]]);
    }

    #[test]
    fn symmetric_space_satisfies_both_conditions() {
        let q = LawverePlus;
        let sp = VCategory::numbered(vec![
            vec![x(0.0), x(1.0), x(2.0)],
            vec![x(1.0), x(0.0), x(1.5)],
            vec![x(2.0), x(1.5), x(0.0)],
        ])
        .unwrap();
        let ix = from_vcategory(&q, &sp);
        assert!(check_normed_category(&q, &ix).all_passed());
        assert!(check_s(&q, &ix).is_none());
        assert!(check_sop(&q, &ix).is_none());
        assert_eq!(sum_vcategory(&q, &ix), sp);
    }

    #[test]
    fn boolean_k_morphisms_are_the_chosen_subcategory() {
        let q = Boolean2;
        let chain = VCategory::numbered(vec![vec![true, true], vec![false, true]]).unwrap();
        let ix = from_vcategory(&q, &chain);
        let (ks, r) = k_morphisms(&q, &ix);
        assert!(r.all_passed());
        let names: Vec<&str> = ks.iter().map(|&f| ix.name(f)).collect();
        assert_eq!(names, vec!["0→0", "0→1", "1→1"]);
    }

    #[test]
    fn tensor_with_unit_is_isomorphic() {
        let q = LawverePlus;
        let c = endo27();
        let t = tensor_normed_cats(&q, &c, &unit_category(&q));
        assert_eq!(t.norm, c.norm);
        assert!(check_normed_category(&q, &t).all_passed());
    }

    #[test]
    fn initial_structure_meets_pullbacks() {
        let q = LawverePlus;
        let sx = VCategory::numbered(vec![vec![x(0.0), x(1.0)], vec![x(3.0), x(0.0)]]).unwrap();
        let sy = VCategory::numbered(vec![vec![x(0.0), x(2.0)], vec![x(1.0), x(0.0)]]).unwrap();
        let (ix, iy) = (from_vcategory(&q, &sx), from_vcategory(&q, &sy));
        let id = Functor::identity(&ix);
        let same = initial_normed_structure(&q, &ix, &[(id.clone(), &ix)]).unwrap();
        assert_eq!(same.norm, ix.norm);
        let both = initial_normed_structure(&q, &ix, &[(id.clone(), &ix), (id, &iy)]).unwrap();
        assert_eq!(both.norm, [0.0, 2.0, 3.0, 0.0].map(x).to_vec());
        assert!(check_normed_category(&q, &both).all_passed());
    }

    #[test]
    fn z3_normed_group() {
        let g = NormedMonoid {
            monoid: FiniteMonoid::cyclic(3),
            norm: vec![x(0.0), x(1.0), x(1.0)],
        };
        assert!(is_normed_group(&g).unwrap());
        let a = group_to_vcat(&g).unwrap();
        assert!(crate::vcat::is_symmetric(&a));
        assert!(left_invariance_witness(&g.monoid, &a).is_none());
        assert_eq!(vcat_to_group_norm(&g.monoid, &a), g);
        assert!(check_s(&LawverePlus, &g.as_category()).is_none());
    }

    #[test]
    fn rational_norm_values() {
        assert_eq!(rational_prime_norm(2, 3).unwrap(), x(2.0));
        assert_eq!(rational_prime_norm(1, 1).unwrap(), x(0.0));
        assert_eq!(rational_prime_norm(6, 1).unwrap(), x(2.0));
        assert_eq!(rational_prime_norm(12, 18).unwrap(), x(2.0));
        assert!(rational_prime_norm(0, 1).is_err());
        assert!(rational_prime_norm(2_000_000, 1).is_err());
    }
}
