//! Generators and curated hosts shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;

use qnlab::cauchy::{idempotents, MorphSequence, MorphTail};
use qnlab::normed_cat::{endomap_category, from_vcategory, Morphism, NormedCategory};
use qnlab::normed_sets::{hom_norm, NormedSet};
use qnlab::quantale::{free_quantale, FiniteLattice, FiniteMonoid, QuantaleTable};
use qnlab::vcat::VCategory;
use qnlab::{ExtReal, FiniteQuantale, LawverePlus, Quantale};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

/// Subsets of `{0..base}` as bitmasks, closed under `∩` (and `∪` when
/// `frame`), always containing the empty and the full set.
fn set_family<R: Rng>(rng: &mut R, max: usize, frame: bool) -> Vec<u32> {
    loop {
        let base = rng.gen_range(1..=4);
        let full = (1u32 << base) - 1;
        let gens = rng.gen_range(0..=4);
        let mut fam: BTreeSet<u32> = [0, full].into();
        for _ in 0..gens {
            fam.insert(rng.gen_range(0..=full));
        }
        loop {
            let cur: Vec<u32> = fam.iter().copied().collect();
            let mut grew = false;
            for &a in &cur {
                for &b in &cur {
                    grew |= fam.insert(a & b);
                    if frame {
                        grew |= fam.insert(a | b);
                    }
                }
            }
            if !grew {
                break;
            }
        }
        if fam.len() <= max {
            return fam.into_iter().collect();
        }
    }
}

fn inclusion_order(fam: &[u32]) -> Vec<Vec<bool>> {
    fam.iter()
        .map(|&a| fam.iter().map(|&b| a & !b == 0).collect())
        .collect()
}

/// A random complete lattice with at most `max` elements: an intersection
/// closed family of sets ordered by inclusion.
pub fn random_lattice<R: Rng>(rng: &mut R, max: usize) -> FiniteLattice {
    FiniteLattice::from_order(inclusion_order(&set_family(rng, max, false))).unwrap()
}

/// A random finite frame (a ring of sets) as a quantale with `⊗ = ∧`.
pub fn random_frame<R: Rng>(rng: &mut R, max: usize) -> FiniteQuantale {
    let fam = set_family(rng, max, true);
    let index: HashMap<u32, usize> = fam.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let table = QuantaleTable {
        names: fam.iter().map(|s| format!("{s:b}")).collect(),
        leq: inclusion_order(&fam),
        tensor: fam
            .iter()
            .map(|&a| fam.iter().map(|&b| index[&(a & b)]).collect())
            .collect(),
        unit: fam.len() - 1,
    };
    FiniteQuantale::with_label(table, "frame").unwrap()
}

/// The chain `0 < 1 < … < n-1` with `⊗ = min`.
pub fn chain(n: usize) -> FiniteQuantale {
    let table = QuantaleTable {
        names: (0..n).map(|i| i.to_string()).collect(),
        leq: (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect(),
        tensor: (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect(),
        unit: n - 1,
    };
    FiniteQuantale::with_label(table, &format!("chain{n}")).unwrap()
}

/// The finite quantales every exhaustive property runs on.
pub fn curated_quantales() -> Vec<FiniteQuantale> {
    let mut out = vec![FiniteQuantale::m3bar(), chain(2), chain(4)];
    for n in 1..=3 {
        out.push(free_quantale(&FiniteMonoid::cyclic(n), &format!("free:Z{n}")).unwrap());
    }
    out
}

/// Brute-force `u ≪ v`: every `W` with `v ≤ ⋁W` has a member above `u`.
pub fn totally_below_oracle(l: &FiniteLattice, u: usize, v: usize) -> bool {
    let n = l.len();
    (0..1usize << n).all(|mask| {
        let w: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        !l.leq(v, l.join_all(w.iter().copied())) || w.iter().any(|&x| l.leq(u, x))
    })
}

/// Closes a square matrix under `k ≤ d(x,x)` and `d(x,y) ⊗ d(y,z) ≤ d(x,z)`.
pub fn close<Q: Quantale>(q: &Q, mut d: Vec<Vec<Q::Value>>) -> Vec<Vec<Q::Value>> {
    let n = d.len();
    for (x, row) in d.iter_mut().enumerate() {
        row[x] = q.join(&row[x], &q.unit());
    }
    for y in 0..n {
        for x in 0..n {
            for z in 0..n {
                let via = q.tensor(&d[x][y], &d[y][z]);
                d[x][z] = q.join(&d[x][z], &via);
            }
        }
    }
    d
}

pub fn random_value<R: Rng, Q: Quantale>(rng: &mut R, q: &Q, pool: &[Q::Value]) -> Q::Value {
    let _ = q;
    pool.choose(rng).unwrap().clone()
}

/// A small grid of extended reals with `0` and `∞` included.
pub fn real_pool() -> Vec<ExtReal> {
    [0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, f64::INFINITY]
        .map(ExtReal::of)
        .to_vec()
}

pub fn random_real_matrix<R: Rng>(rng: &mut R, n: usize, pool: &[ExtReal]) -> Vec<Vec<ExtReal>> {
    (0..n)
        .map(|_| (0..n).map(|_| *pool.choose(rng).unwrap()).collect())
        .collect()
}

/// A random Lawvere metric space on `n` points.
pub fn random_lawvere<R: Rng>(rng: &mut R, n: usize) -> VCategory<ExtReal> {
    let d = random_real_matrix(rng, n, &real_pool());
    VCategory::numbered(close(&LawverePlus, d)).unwrap()
}

/// A random symmetric Lawvere metric space on `n` points.
pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize) -> VCategory<ExtReal> {
    let mut d = random_real_matrix(rng, n, &real_pool());
    for x in 0..n {
        for y in 0..x {
            d[x][y] = d[y][x];
        }
    }
    VCategory::numbered(close(&LawverePlus, d)).unwrap()
}

pub fn random_vcat<R: Rng, Q: Quantale>(rng: &mut R, q: &Q, n: usize) -> VCategory<Q::Value> {
    let pool = q.elements().expect("finite carrier");
    let d = (0..n)
        .map(|_| (0..n).map(|_| pool.choose(rng).unwrap().clone()).collect())
        .collect();
    VCategory::numbered(close(q, d)).unwrap()
}

pub fn random_map<R: Rng>(rng: &mut R, from: usize, to: usize) -> Vec<usize> {
    (0..from).map(|_| rng.gen_range(0..to)).collect()
}

/// Objects `x, y` with `t·r = e`, `r·t = 1_y`; `t` carries the given norm.
pub fn splitting_host(t_norm: f64) -> NormedCategory<ExtReal> {
    NormedCategory::from_names(
        &["x", "y"],
        &[
            ("1x", "x", "x"),
            ("1y", "y", "y"),
            ("e", "x", "x"),
            ("r", "x", "y"),
            ("t", "y", "x"),
        ],
        &["1x", "1y"],
        &[
            ("r", "t", "1y"),
            ("t", "r", "e"),
            ("r", "e", "r"),
            ("e", "t", "t"),
            ("e", "e", "e"),
        ],
        [0.0, 0.0, 0.0, 0.0, t_norm].map(ExtReal::of).to_vec(),
    )
    .unwrap()
}

/// One object with an idempotent `e` that does not split.
pub fn nonsplit_host() -> NormedCategory<ExtReal> {
    NormedCategory::from_names(
        &["x"],
        &[("1", "x", "x"), ("e", "x", "x")],
        &["1"],
        &[("e", "e", "e")],
        vec![ExtReal::ZERO; 2],
    )
    .unwrap()
}

/// All 27 self-maps of `{0,1,2}` normed by `|i| = i`.
pub fn endomap27() -> NormedCategory<ExtReal> {
    let a = NormedSet::numbered([0.0, 1.0, 2.0].map(ExtReal::of).to_vec());
    endomap_category(&LawverePlus, &a, 1000).unwrap()
}

fn map_name(m: &[usize]) -> String {
    let parts: Vec<String> = m.iter().map(|i| i.to_string()).collect();
    format!("({})", parts.join(","))
}

/// The full subcategory of normed sets on the given objects: every map
/// between them, normed by the hom-norm.
pub fn normed_set_category(sets: &[NormedSet<ExtReal>]) -> NormedCategory<ExtReal> {
    let q = LawverePlus;
    let mut morphisms = vec![];
    let mut maps = vec![];
    let mut norm = vec![];
    let mut index = HashMap::new();
    for (a, sa) in sets.iter().enumerate() {
        for (b, sb) in sets.iter().enumerate() {
            for m in qnlab::enumerate::all_maps(sa.len(), sb.len()) {
                index.insert((a, b, m.clone()), morphisms.len());
                morphisms.push(Morphism {
                    name: format!("{a}{}{b}", map_name(&m)),
                    dom: a,
                    cod: b,
                });
                norm.push(hom_norm(&q, &m, sa, sb).unwrap());
                maps.push(m);
            }
        }
    }
    let identities = (0..sets.len())
        .map(|a| index[&(a, a, (0..sets[a].len()).collect::<Vec<_>>())])
        .collect();
    let mut composites = vec![];
    for (f, mf) in maps.iter().enumerate() {
        for (g, mg) in maps.iter().enumerate() {
            if morphisms[f].cod == morphisms[g].dom {
                let gf: Vec<usize> = mf.iter().map(|&i| mg[i]).collect();
                composites.push((g, f, index[&(morphisms[f].dom, morphisms[g].cod, gf)]));
            }
        }
    }
    let objects = (0..sets.len()).map(|a| format!("A{a}")).collect();
    NormedCategory::new(objects, morphisms, identities, &composites, norm).unwrap()
}

/// The one-object category of self-maps of `A` generated by `gens` under
/// composition, normed by the hom-norm.
pub fn transformation_monoid(a: &NormedSet<ExtReal>, gens: &[Vec<usize>]) -> NormedCategory<ExtReal> {
    let id: Vec<usize> = (0..a.len()).collect();
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Vec<usize>, usize> = [(id, 0)].into();
    let mut frontier = 0;
    while frontier < elems.len() {
        let f = elems[frontier].clone();
        frontier += 1;
        for g in gens {
            let gf: Vec<usize> = f.iter().map(|&i| g[i]).collect();
            if !index.contains_key(&gf) {
                index.insert(gf.clone(), elems.len());
                elems.push(gf);
            }
        }
    }
    let mut composites = vec![];
    for (f, mf) in elems.iter().enumerate() {
        for (g, mg) in elems.iter().enumerate() {
            let gf: Vec<usize> = mf.iter().map(|&i| mg[i]).collect();
            // the set is closed under left multiplication by generators,
            // hence under composition
            composites.push((g, f, index[&gf]));
        }
    }
    let morphisms = elems
        .iter()
        .map(|m| Morphism { name: map_name(m), dom: 0, cod: 0 })
        .collect();
    let norm = elems
        .iter()
        .map(|m| hom_norm(&LawverePlus, m, a, a).unwrap())
        .collect();
    NormedCategory::new(vec!["A".into()], morphisms, vec![0], &composites, norm).unwrap()
}

/// A random transformation monoid on at most three points, with at most
/// `max` morphisms.
pub fn random_transformation_monoid<R: Rng>(rng: &mut R, max: usize) -> NormedCategory<ExtReal> {
    loop {
        let n = rng.gen_range(1..=3);
        let pool = real_pool();
        let a = NormedSet::numbered((0..n).map(|_| *pool[..8].choose(rng).unwrap()).collect());
        let gens: Vec<Vec<usize>> = (0..rng.gen_range(1..=2)).map(|_| random_map(rng, n, n)).collect();
        let c = transformation_monoid(&a, &gens);
        if c.morphism_count() <= max {
            return c;
        }
    }
}

/// A random full subcategory of normed sets on objects of sizes 1 and 2.
pub fn random_normed_set_category<R: Rng>(rng: &mut R) -> NormedCategory<ExtReal> {
    let pool = real_pool();
    let mut pick = || *pool[..8].choose(rng).unwrap();
    let one = NormedSet::numbered(vec![pick()]);
    let two = NormedSet::numbered(vec![pick(), pick()]);
    normed_set_category(&[one, two])
}

/// The curated finite hosts over `R+`, each with at most 27 morphisms.
pub fn curated_hosts() -> Vec<(&'static str, NormedCategory<ExtReal>)> {
    let x = ExtReal::of;
    let sym = VCategory::numbered(vec![vec![x(0.0), x(1.0)], vec![x(1.0), x(0.0)]]).unwrap();
    let asym = VCategory::numbered(vec![vec![x(0.0), x(0.0)], vec![x(f64::INFINITY), x(0.0)]]).unwrap();
    let collapse = VCategory::numbered(vec![vec![x(0.0), x(0.0)], vec![x(0.0), x(0.0)]]).unwrap();
    let sets = [
        NormedSet::numbered(vec![x(1.0)]),
        NormedSet::numbered(vec![x(0.0), x(2.0)]),
    ];
    vec![
        ("splitting", splitting_host(0.0)),
        ("splitting |t|=1", splitting_host(1.0)),
        ("nonsplit", nonsplit_host()),
        ("iX symmetric", from_vcategory(&LawverePlus, &sym)),
        ("iX asymmetric", from_vcategory(&LawverePlus, &asym)),
        ("iX indiscrete", from_vcategory(&LawverePlus, &collapse)),
        ("normed sets 1,2", normed_set_category(&sets)),
        ("endomaps of {0,1,2}", endomap27()),
    ]
}

/// Curated hosts plus seeded random monoids, normed-set categories and spaces.
pub fn all_hosts() -> Vec<NormedCategory<ExtReal>> {
    let mut hosts: Vec<_> = curated_hosts().into_iter().map(|(_, h)| h).collect();
    let mut r = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        hosts.push(random_transformation_monoid(&mut r, 12));
        hosts.push(random_normed_set_category(&mut r));
        let n = r.gen_range(1..=3);
        hosts.push(from_vcategory(&LawverePlus, &random_symmetric(&mut r, n)));
        hosts.push(from_vcategory(&LawverePlus, &random_lawvere(&mut r, n)));
    }
    hosts
}

pub fn random_morph_sequence<'a, R: Rng>(r: &mut R, host: &'a NormedCategory<ExtReal>) -> MorphSequence<'a, ExtReal> {
    let start = r.gen_range(0..host.object_count());
    let mut at = start;
    let mut prefix = vec![];
    for _ in 0..r.gen_range(0..=3) {
        let f = *host.out_of(at).choose(r).unwrap();
        prefix.push(f);
        at = host.cod(f);
    }
    let idem: Vec<usize> = idempotents(host).into_iter().filter(|&e| host.dom(e) == at).collect();
    let tail = match idem.choose(r) {
        Some(&e) if r.gen_bool(0.5) => MorphTail::Idempotent(e),
        _ => MorphTail::Identity,
    };
    MorphSequence::new(host, start, prefix, tail).unwrap()
}
