//! JSON file formats.
//!
//! Every loader reports failures as [`IoError`], naming the file, the line
//! and the key at fault. Files that refer to other files (`"quantale"`,
//! `"host"`, `"source"`, ...) resolve paths relative to their own directory.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};

use serde_json::Value;

use crate::cauchy::{Cocone, MorphTail, Natural, Presheaf, PresheafTail};
use crate::normed_cat::{Functor, Morphism, NormedCategory};
use crate::normed_sets::{NormedSet, NormedSetSequence, Tail};
use crate::quantale::{AnyQuantale, AnyValue, ExtReal, FiniteQuantale, Quantale, QuantaleFile, QuantaleTable};
use crate::snvec::{MonomialMap, WeightTail, WeightedSpace};
use crate::vcat::VCategory;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IoError {
    pub file: String,
    pub line: Option<usize>,
    pub key: Option<String>,
    pub message: String,
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.file)?;
        if let Some(l) = self.line {
            write!(f, ":{l}")?;
        }
        if let Some(k) = &self.key {
            write!(f, ": key `{k}`")?;
        }
        write!(f, ": {}", self.message)
    }
}

impl std::error::Error for IoError {}

pub type IoResult<T> = Result<T, IoError>;

/// A parsed JSON file together with its text, for line lookups.
#[derive(Debug, Clone)]
pub struct Source {
    pub path: PathBuf,
    pub text: String,
    pub json: Value,
}

impl Source {
    pub fn load(path: &Path) -> IoResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| IoError {
            file: path.display().to_string(),
            line: None,
            key: None,
            message: e.to_string(),
        })?;
        Self::parse(path, text)
    }

    pub fn parse(path: &Path, text: String) -> IoResult<Self> {
        let json = serde_json::from_str(&text).map_err(|e| IoError {
            file: path.display().to_string(),
            line: Some(e.line()),
            key: None,
            message: e.to_string(),
        })?;
        Ok(Source {
            path: path.to_path_buf(),
            text,
            json,
        })
    }

    /// Line of the last component of a dotted key path, found by locating
    /// each component in turn.
    fn line_of(&self, key: &str) -> Option<usize> {
        let mut from = 0;
        for part in key.split('.') {
            let needle = format!("\"{part}\"");
            let at = self.text[from..].find(&needle)? + from;
            from = at + needle.len();
        }
        Some(self.text[..from].matches('\n').count() + 1)
    }

    pub fn error(&self, key: &str, message: impl Into<String>) -> IoError {
        IoError {
            file: self.path.display().to_string(),
            line: self.line_of(key),
            key: Some(key.to_string()),
            message: message.into(),
        }
    }

    fn field<'v>(&self, obj: &'v Value, key: &str, path: &str) -> IoResult<&'v Value> {
        obj.get(key)
            .ok_or_else(|| self.error(path, "missing"))
    }

    fn top(&self, key: &str) -> IoResult<&Value> {
        self.field(&self.json, key, key)
    }

    fn str_of<'v>(&self, v: &'v Value, path: &str) -> IoResult<&'v str> {
        v.as_str().ok_or_else(|| self.error(path, "expected a string"))
    }

    fn array_of<'v>(&self, v: &'v Value, path: &str) -> IoResult<&'v Vec<Value>> {
        v.as_array().ok_or_else(|| self.error(path, "expected an array"))
    }

    fn object_of<'v>(&self, v: &'v Value, path: &str) -> IoResult<&'v serde_json::Map<String, Value>> {
        v.as_object().ok_or_else(|| self.error(path, "expected an object"))
    }

    fn strings(&self, v: &Value, path: &str) -> IoResult<Vec<String>> {
        self.array_of(v, path)?
            .iter()
            .map(|s| self.str_of(s, path).map(str::to_string))
            .collect()
    }

    fn number(&self, v: &Value, path: &str) -> IoResult<f64> {
        v.as_f64().ok_or_else(|| self.error(path, "expected a number"))
    }

    fn sibling(&self, rel: &str) -> PathBuf {
        self.path.parent().unwrap_or(Path::new(".")).join(rel)
    }

    fn value(&self, q: &AnyQuantale, raw: &Value, path: &str) -> IoResult<AnyValue> {
        q.parse_value(raw)
            .ok_or_else(|| self.error(path, format!("`{raw}` is not a value of {}", q.name())))
    }

    fn index(&self, names: &[String], raw: &Value, path: &str) -> IoResult<usize> {
        let name = self.str_of(raw, path)?;
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| self.error(path, format!("unknown name `{name}`")))
    }
}

/// Reads a quantale table without checking its axioms.
pub fn load_quantale_table(path: &Path) -> IoResult<(QuantaleTable, Source)> {
    let src = Source::load(path)?;
    let file: QuantaleFile = serde_json::from_value(src.json.clone()).map_err(|e| {
        let key = ["elements", "leq", "tensor", "unit"]
            .into_iter()
            .find(|k| e.to_string().contains(k) || src.json.get(k).is_none())
            .unwrap_or("elements");
        src.error(key, e.to_string())
    })?;
    let table = QuantaleTable::from_file(&file).map_err(|e| {
        let msg = e.to_string();
        let key = ["tensor", "leq", "unit"]
            .into_iter()
            .find(|k| msg.contains(&format!("`{k}`")) || msg.contains(k))
            .unwrap_or("elements");
        src.error(key, msg)
    })?;
    Ok((table, src))
}

/// A built-in name (`boolean`, `lawvere`, `lawvere-times`, `m3bar`,
/// `free:Zn`) or a path to a quantale table.
pub fn resolve_quantale(reference: &str, base: Option<&Source>) -> IoResult<AnyQuantale> {
    if let Ok(q) = AnyQuantale::by_name(reference) {
        return Ok(q);
    }
    let path = base.map_or_else(|| PathBuf::from(reference), |b| b.sibling(reference));
    if !path.exists() {
        return Err(match base {
            Some(b) => b.error("quantale", format!("`{reference}` is neither a built-in quantale nor a file")),
            None => IoError {
                file: reference.to_string(),
                line: None,
                key: None,
                message: "neither a built-in quantale nor a file".into(),
            },
        });
    }
    let (table, src) = load_quantale_table(&path)?;
    let label = path.file_stem().map_or("finite".into(), |s| s.to_string_lossy().into_owned());
    FiniteQuantale::with_label(table, &label)
        .map(AnyQuantale::Finite)
        .map_err(|e| src.error("tensor", e.to_string()))
}

fn quantale_field(src: &Source) -> IoResult<AnyQuantale> {
    let name = src.str_of(src.top("quantale")?, "quantale")?;
    resolve_quantale(name, Some(src))
}

#[derive(Debug, Clone)]
pub struct VCatFile {
    pub quantale: AnyQuantale,
    pub space: VCategory<AnyValue>,
}

/// `{"quantale":…, "points":[...], "d":[[...]]}`.
pub fn load_vcat(path: &Path) -> IoResult<VCatFile> {
    let src = Source::load(path)?;
    let q = quantale_field(&src)?;
    let points = src.strings(src.top("points")?, "points")?;
    let rows = src.array_of(src.top("d")?, "d")?;
    if rows.len() != points.len() {
        return Err(src.error("d", format!("{} rows for {} points", rows.len(), points.len())));
    }
    let d = rows
        .iter()
        .map(|row| {
            let row = src.array_of(row, "d")?;
            if row.len() != points.len() {
                return Err(src.error("d", format!("a row has {} entries, expected {}", row.len(), points.len())));
            }
            row.iter().map(|v| src.value(&q, v, "d")).collect()
        })
        .collect::<IoResult<Vec<Vec<_>>>>()?;
    let space = VCategory::new(points, d).map_err(|e| src.error("d", e.to_string()))?;
    Ok(VCatFile { quantale: q, space })
}

/// Parses `a,b,c` as a map given by the images of the source points.
pub fn parse_point_map(spec: &str, source: &VCategory<AnyValue>, target: &VCategory<AnyValue>) -> IoResult<Vec<usize>> {
    let err = |m: String| IoError {
        file: "--map".into(),
        line: None,
        key: None,
        message: m,
    };
    let images: Vec<&str> = spec.split(',').map(str::trim).collect();
    if images.len() != source.len() {
        return Err(err(format!("{} images for {} source points", images.len(), source.len())));
    }
    images
        .iter()
        .map(|name| {
            target
                .points
                .iter()
                .position(|p| p == name)
                .ok_or_else(|| err(format!("unknown target point `{name}`")))
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct DistributorFile {
    pub quantale: AnyQuantale,
    pub source: VCategory<AnyValue>,
    pub target: VCategory<AnyValue>,
    pub matrix: Vec<Vec<AnyValue>>,
}

/// `{"source": file, "target": file, "matrix": [[...]]}`, rows indexed by
/// source points.
pub fn load_distributor(path: &Path) -> IoResult<DistributorFile> {
    let src = Source::load(path)?;
    let x = load_vcat(&src.sibling(src.str_of(src.top("source")?, "source")?))?;
    let y = load_vcat(&src.sibling(src.str_of(src.top("target")?, "target")?))?;
    if x.quantale != y.quantale {
        return Err(src.error("target", "source and target use different quantales"));
    }
    let rows = src.array_of(src.top("matrix")?, "matrix")?;
    if rows.len() != x.space.len() {
        return Err(src.error("matrix", format!("{} rows for {} source points", rows.len(), x.space.len())));
    }
    let matrix = rows
        .iter()
        .map(|row| {
            let row = src.array_of(row, "matrix")?;
            if row.len() != y.space.len() {
                return Err(src.error("matrix", format!("a row has {} entries, expected {}", row.len(), y.space.len())));
            }
            row.iter().map(|v| src.value(&x.quantale, v, "matrix")).collect()
        })
        .collect::<IoResult<Vec<Vec<_>>>>()?;
    Ok(DistributorFile {
        quantale: x.quantale,
        source: x.space,
        target: y.space,
        matrix,
    })
}

#[derive(Debug, Clone)]
pub struct CategoryFile {
    pub quantale: AnyQuantale,
    pub host: NormedCategory<AnyValue>,
}

/// Splits a composite key `g∘f` (also `g.f` or `g·f`) into `(g, f)`.
fn split_composite(key: &str) -> Option<(&str, &str)> {
    ['∘', '·', '.']
        .into_iter()
        .find_map(|sep| key.split_once(sep))
        .map(|(g, f)| (g.trim(), f.trim()))
}

/// ```json
/// {"quantale": "lawvere", "objects": ["x","y"],
///  "morphisms": [{"name":"r","dom":"x","cod":"y"}, ...],
///  "identities": {"x": "1x", ...}, "compose": {"r∘t": "1y", ...},
///  "norm": {"r": 0, ...}}
/// ```
pub fn load_category(path: &Path) -> IoResult<CategoryFile> {
    let src = Source::load(path)?;
    let q = quantale_field(&src)?;
    let objects = src.strings(src.top("objects")?, "objects")?;
    let mut morphisms = vec![];
    for m in src.array_of(src.top("morphisms")?, "morphisms")? {
        let name = src.str_of(src.field(m, "name", "morphisms.name")?, "morphisms.name")?;
        let end = |k: &str| {
            let path = format!("morphisms.{k}");
            src.index(&objects, src.field(m, k, &path)?, &path)
        };
        morphisms.push(Morphism {
            name: name.to_string(),
            dom: end("dom")?,
            cod: end("cod")?,
        });
    }
    let names: Vec<String> = morphisms.iter().map(|m| m.name.clone()).collect();
    let mut seen = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if seen.insert(n, i).is_some() {
            return Err(src.error(&format!("morphisms.{n}"), "duplicate morphism name"));
        }
    }
    let ids_raw = src.object_of(src.top("identities")?, "identities")?;
    let identities = objects
        .iter()
        .map(|o| {
            let path = format!("identities.{o}");
            let raw = ids_raw.get(o).ok_or_else(|| src.error("identities", format!("no identity for `{o}`")))?;
            src.index(&names, raw, &path)
        })
        .collect::<IoResult<Vec<_>>>()?;
    let mut composites = vec![];
    if let Some(c) = src.json.get("compose") {
        for (key, h) in src.object_of(c, "compose")? {
            let path = format!("compose.{key}");
            let (g, f) = split_composite(key).ok_or_else(|| src.error(&path, "expected `g∘f`"))?;
            let look = |n: &str| {
                names
                    .iter()
                    .position(|m| m == n)
                    .ok_or_else(|| src.error(&path, format!("unknown morphism `{n}`")))
            };
            composites.push((look(g)?, look(f)?, src.index(&names, h, &path)?));
        }
    }
    let norm_raw = src.object_of(src.top("norm")?, "norm")?;
    let norm = names
        .iter()
        .map(|n| {
            let raw = norm_raw.get(n).ok_or_else(|| src.error("norm", format!("no norm for `{n}`")))?;
            src.value(&q, raw, &format!("norm.{n}"))
        })
        .collect::<IoResult<Vec<_>>>()?;
    if let Some(extra) = norm_raw.keys().find(|k| !names.contains(k)) {
        return Err(src.error(&format!("norm.{extra}"), "not a morphism"));
    }
    let host = NormedCategory::new(objects, morphisms, identities, &composites, norm)
        .map_err(|e| src.error("compose", e.to_string()))?;
    Ok(CategoryFile { quantale: q, host })
}

#[derive(Debug, Clone)]
pub struct SequenceFile {
    pub category: CategoryFile,
    pub start: usize,
    pub prefix: Vec<usize>,
    pub tail: MorphTail,
    pub source: Source,
}

/// `{"host": file, "prefix": [...], "tail": {"kind": "identity"|"idempotent",
/// "morphism": "e"}}`. `"start"` names the first object when the prefix is
/// empty and the tail is an identity.
pub fn load_sequence(path: &Path) -> IoResult<SequenceFile> {
    let src = Source::load(path)?;
    let category = load_category(&src.sibling(src.str_of(src.top("host")?, "host")?))?;
    let host = &category.host;
    let names: Vec<String> = (0..host.morphism_count()).map(|f| host.name(f).to_string()).collect();
    let prefix = match src.json.get("prefix") {
        None => vec![],
        Some(p) => src
            .array_of(p, "prefix")?
            .iter()
            .map(|v| src.index(&names, v, "prefix"))
            .collect::<IoResult<Vec<_>>>()?,
    };
    let tail_raw = src.top("tail")?;
    let kind = src.str_of(src.field(tail_raw, "kind", "tail.kind")?, "tail.kind")?;
    let tail = match kind {
        "identity" => MorphTail::Identity,
        "idempotent" => MorphTail::Idempotent(src.index(
            &names,
            src.field(tail_raw, "morphism", "tail.morphism")?,
            "tail.morphism",
        )?),
        other => return Err(src.error("tail.kind", format!("unknown tail kind `{other}`"))),
    };
    let start = match (src.json.get("start"), prefix.first(), &tail) {
        (Some(s), _, _) => src.index(&host.objects, s, "start")?,
        (None, Some(&f), _) => host.dom(f),
        (None, None, MorphTail::Idempotent(e)) => host.dom(*e),
        (None, None, MorphTail::Identity) => return Err(src.error("start", "needed when the prefix is empty")),
    };
    Ok(SequenceFile {
        category,
        start,
        prefix,
        tail,
        source: src,
    })
}

/// `{"vertex": object, "legs": [morphism, ...]}` against a host.
pub fn load_cocone(path: &Path, host: &NormedCategory<AnyValue>) -> IoResult<Cocone> {
    let src = Source::load(path)?;
    let vertex = src.index(&host.objects, src.top("vertex")?, "vertex")?;
    let names: Vec<String> = (0..host.morphism_count()).map(|f| host.name(f).to_string()).collect();
    let legs = src
        .array_of(src.top("legs")?, "legs")?
        .iter()
        .map(|v| src.index(&names, v, "legs"))
        .collect::<IoResult<Vec<_>>>()?;
    Ok(Cocone { vertex, legs })
}

fn normed_set(src: &Source, q: &AnyQuantale, raw: &Value, path: &str) -> IoResult<NormedSet<AnyValue>> {
    let elements = src.strings(src.field(raw, "elements", &format!("{path}.elements"))?, &format!("{path}.elements"))?;
    let norm_path = format!("{path}.norm");
    let norm_raw = src.object_of(src.field(raw, "norm", &norm_path)?, &norm_path)?;
    let norm = elements
        .iter()
        .map(|e| {
            let v = norm_raw.get(e).ok_or_else(|| src.error(&norm_path, format!("no norm for `{e}`")))?;
            src.value(q, v, &norm_path)
        })
        .collect::<IoResult<Vec<_>>>()?;
    NormedSet::new(elements, norm).map_err(|e| src.error(path, e.to_string()))
}

/// A map between normed sets written as the list of images, by name.
fn set_map(src: &Source, raw: &Value, from: &NormedSet<AnyValue>, to: &NormedSet<AnyValue>, path: &str) -> IoResult<Vec<usize>> {
    let images = src.array_of(raw, path)?;
    if images.len() != from.len() {
        return Err(src.error(path, format!("{} images for {} elements", images.len(), from.len())));
    }
    images.iter().map(|v| src.index(&to.elements, v, path)).collect()
}

/// A normed set: `{"quantale":…, "elements":[...], "norm":{elem: value}}`.
pub fn load_normed_set(path: &Path) -> IoResult<(AnyQuantale, NormedSet<AnyValue>)> {
    let src = Source::load(path)?;
    let q = quantale_field(&src)?;
    let set = normed_set(&src, &q, &src.json, "elements")?;
    Ok((q, set))
}

/// `{"quantale":…, "stages":[normed set, ...], "prefix":[[images], ...],
/// "tail":{"kind":"identity"|"idempotent","map":[images]}}`; `prefix[n]`
/// maps stage `n` to stage `n+1`.
pub fn load_normed_set_sequence(path: &Path) -> IoResult<(AnyQuantale, NormedSetSequence<AnyValue>)> {
    let src = Source::load(path)?;
    let q = quantale_field(&src)?;
    let stages = src
        .array_of(src.top("stages")?, "stages")?
        .iter()
        .map(|s| normed_set(&src, &q, s, "stages"))
        .collect::<IoResult<Vec<_>>>()?;
    if stages.is_empty() {
        return Err(src.error("stages", "at least one stage is needed"));
    }
    let maps_raw = match src.json.get("prefix") {
        Some(p) => src.array_of(p, "prefix")?.clone(),
        None => vec![],
    };
    if maps_raw.len() + 1 != stages.len() {
        return Err(src.error("prefix", format!("{} maps for {} stages", maps_raw.len(), stages.len())));
    }
    let maps = maps_raw
        .iter()
        .enumerate()
        .map(|(n, m)| set_map(&src, m, &stages[n], &stages[n + 1], "prefix"))
        .collect::<IoResult<Vec<_>>>()?;
    let last = stages.last().expect("non-empty");
    let tail_raw = src.top("tail")?;
    let tail = match src.str_of(src.field(tail_raw, "kind", "tail.kind")?, "tail.kind")? {
        "identity" => Tail::Identity,
        "idempotent" => Tail::Idempotent(set_map(&src, src.field(tail_raw, "map", "tail.map")?, last, last, "tail.map")?),
        other => return Err(src.error("tail.kind", format!("unknown tail kind `{other}`"))),
    };
    let seq = NormedSetSequence::new(stages, maps, tail).map_err(|e| src.error("tail", e.to_string()))?;
    Ok((q, seq))
}

fn presheaf(src: &Source, q: &AnyQuantale, index: &NormedCategory<AnyValue>, raw: &Value, path: &str) -> IoResult<Presheaf<AnyValue>> {
    let sets_path = format!("{path}.sets");
    let sets_raw = src.object_of(src.field(raw, "sets", &sets_path)?, &sets_path)?;
    let sets = index
        .objects
        .iter()
        .map(|o| {
            let s = sets_raw.get(o).ok_or_else(|| src.error(&sets_path, format!("no set for `{o}`")))?;
            normed_set(src, q, s, &format!("{sets_path}.{o}"))
        })
        .collect::<IoResult<Vec<_>>>()?;
    let act_path = format!("{path}.actions");
    let acts = raw.get("actions").map(|a| src.object_of(a, &act_path)).transpose()?;
    let actions = (0..index.morphism_count())
        .map(|f| {
            let (d, c) = (index.dom(f), index.cod(f));
            match acts.and_then(|a| a.get(index.name(f))) {
                Some(m) => set_map(src, m, &sets[d], &sets[c], &format!("{act_path}.{}", index.name(f))),
                None if index.is_identity(f) => Ok((0..sets[d].len()).collect()),
                None => Err(src.error(&act_path, format!("no action for `{}`", index.name(f)))),
            }
        })
        .collect::<IoResult<Vec<_>>>()?;
    Ok(Presheaf { sets, actions })
}

fn natural(src: &Source, index: &NormedCategory<AnyValue>, raw: &Value, from: &Presheaf<AnyValue>, to: &Presheaf<AnyValue>, path: &str) -> IoResult<Natural> {
    let comps = src.object_of(raw, path)?;
    let components = index
        .objects
        .iter()
        .enumerate()
        .map(|(x, o)| {
            let m = comps.get(o).ok_or_else(|| src.error(path, format!("no component at `{o}`")))?;
            set_map(src, m, &from.sets[x], &to.sets[x], &format!("{path}.{o}"))
        })
        .collect::<IoResult<Vec<_>>>()?;
    Ok(Natural { components })
}

#[derive(Debug, Clone)]
pub struct PresheafFile {
    pub category: CategoryFile,
    pub stages: Vec<Presheaf<AnyValue>>,
    pub maps: Vec<Natural>,
    pub tail: PresheafTail,
}

/// ```json
/// {"index": category file,
///  "stages": [{"sets": {obj: normed set}, "actions": {morphism: [images]}}],
///  "maps": [{obj: [images]}],
///  "tail": {"kind": "identity"|"idempotent", "map": {obj: [images]}}}
/// ```
/// Actions of identities may be omitted.
pub fn load_presheaf_sequence(path: &Path) -> IoResult<PresheafFile> {
    let src = Source::load(path)?;
    let category = load_category(&src.sibling(src.str_of(src.top("index")?, "index")?))?;
    let (q, index) = (&category.quantale, &category.host);
    let stages = src
        .array_of(src.top("stages")?, "stages")?
        .iter()
        .map(|s| presheaf(&src, q, index, s, "stages"))
        .collect::<IoResult<Vec<_>>>()?;
    if stages.is_empty() {
        return Err(src.error("stages", "at least one stage is needed"));
    }
    let maps_raw = match src.json.get("maps") {
        Some(m) => src.array_of(m, "maps")?.clone(),
        None => vec![],
    };
    if maps_raw.len() + 1 != stages.len() {
        return Err(src.error("maps", format!("{} maps for {} stages", maps_raw.len(), stages.len())));
    }
    let maps = maps_raw
        .iter()
        .enumerate()
        .map(|(n, m)| natural(&src, index, m, &stages[n], &stages[n + 1], "maps"))
        .collect::<IoResult<Vec<_>>>()?;
    let last = stages.last().expect("non-empty");
    let tail_raw = src.top("tail")?;
    let tail = match src.str_of(src.field(tail_raw, "kind", "tail.kind")?, "tail.kind")? {
        "identity" => PresheafTail::Identity,
        "idempotent" => PresheafTail::Idempotent(natural(&src, index, src.field(tail_raw, "map", "tail.map")?, last, last, "tail.map")?),
        other => return Err(src.error("tail.kind", format!("unknown tail kind `{other}`"))),
    };
    Ok(PresheafFile {
        category,
        stages,
        maps,
        tail,
    })
}

/// A functor on a host, given by object and morphism images.
pub fn parse_functor(src: &Source, host: &NormedCategory<AnyValue>, raw: &Value, path: &str) -> IoResult<Functor> {
    let names: Vec<String> = (0..host.morphism_count()).map(|f| host.name(f).to_string()).collect();
    let obj_path = format!("{path}.objects");
    let objs = src.object_of(src.field(raw, "objects", &obj_path)?, &obj_path)?;
    let objects = host
        .objects
        .iter()
        .map(|o| {
            let v = objs.get(o).ok_or_else(|| src.error(&obj_path, format!("no image for `{o}`")))?;
            src.index(&host.objects, v, &format!("{obj_path}.{o}"))
        })
        .collect::<IoResult<Vec<_>>>()?;
    let mor_path = format!("{path}.morphisms");
    let mors = src.object_of(src.field(raw, "morphisms", &mor_path)?, &mor_path)?;
    let morphisms = names
        .iter()
        .enumerate()
        .map(|(f, n)| match mors.get(n) {
            Some(v) => src.index(&names, v, &format!("{mor_path}.{n}")),
            None if host.is_identity(f) => Ok(host.id(objects[host.dom(f)])),
            None => Err(src.error(&mor_path, format!("no image for `{n}`"))),
        })
        .collect::<IoResult<Vec<_>>>()?;
    Ok(Functor { objects, morphisms })
}

#[derive(Debug, Clone)]
pub enum BanachScenario {
    Analytic {
        map: String,
        lipschitz: f64,
        seed: f64,
        tolerance: f64,
    },
    Finite {
        host: NormedCategory<ExtReal>,
        functor: Functor,
        lipschitz: f64,
        seed: usize,
    },
}

/// `{"mode":"analytic","map":"x/2+1","L":0.5,"seed":0,"tol":1e-9}` or
/// `{"mode":"finite","host":file,"functor":{"objects":{..},"morphisms":{..}},"L":0.5,"seed":"f"}`
/// where the finite seed is a morphism `x → Fx`.
pub fn load_banach_scenario(path: &Path) -> IoResult<BanachScenario> {
    let src = Source::load(path)?;
    let lipschitz = src.number(src.top("L")?, "L")?;
    match src.str_of(src.top("mode")?, "mode")? {
        "analytic" => Ok(BanachScenario::Analytic {
            map: src.str_of(src.top("map")?, "map")?.to_string(),
            lipschitz,
            seed: src.json.get("seed").map_or(Ok(0.0), |v| src.number(v, "seed"))?,
            tolerance: src.json.get("tol").map_or(Ok(1e-9), |v| src.number(v, "tol"))?,
        }),
        "finite" => {
            let cat = load_category(&src.sibling(src.str_of(src.top("host")?, "host")?))?;
            if !cat.quantale.is_lawvere_plus() {
                return Err(src.error("host", "finite mode needs a host over the lawvere quantale"));
            }
            let functor = parse_functor(&src, &cat.host, src.top("functor")?, "functor")?;
            let names: Vec<String> = (0..cat.host.morphism_count()).map(|f| cat.host.name(f).to_string()).collect();
            let seed = src.index(&names, src.top("seed")?, "seed")?;
            let norm = cat.host.norm.iter().map(|v| v.as_real().expect("lawvere values")).collect();
            Ok(BanachScenario::Finite {
                host: cat.host.with_norm(norm),
                functor,
                lipschitz,
                seed,
            })
        }
        other => Err(src.error("mode", format!("unknown mode `{other}`"))),
    }
}

/// `{"weights": [...]}` with `"inf"` allowed.
pub fn load_weighted_space(path: &Path) -> IoResult<WeightedSpace> {
    let src = Source::load(path)?;
    let weights = src
        .array_of(src.top("weights")?, "weights")?
        .iter()
        .map(|w| serde_json::from_value::<ExtReal>(w.clone()).map_err(|e| src.error("weights", e.to_string())))
        .collect::<IoResult<Vec<_>>>()?;
    Ok(WeightedSpace::new(weights))
}

/// `{"perm": [...], "scalars": [...]}`.
pub fn load_monomial_map(path: &Path) -> IoResult<MonomialMap> {
    let src = Source::load(path)?;
    let perm = src
        .array_of(src.top("perm")?, "perm")?
        .iter()
        .map(|v| v.as_u64().map(|j| j as usize).ok_or_else(|| src.error("perm", "expected a coordinate index")))
        .collect::<IoResult<Vec<_>>>()?;
    let scalars = src
        .array_of(src.top("scalars")?, "scalars")?
        .iter()
        .map(|v| src.number(v, "scalars"))
        .collect::<IoResult<Vec<_>>>()?;
    MonomialMap::new(perm, scalars).map_err(|e| src.error("scalars", e.to_string()))
}

/// `{"tails": [{"kind": "reciprocal", "c": 1}, ...]}`.
pub fn load_weight_tails(path: &Path) -> IoResult<Vec<WeightTail>> {
    let src = Source::load(path)?;
    src.array_of(src.top("tails")?, "tails")?
        .iter()
        .map(|t| serde_json::from_value(t.clone()).map_err(|e| src.error("tails", e.to_string())))
        .collect()
}

/// The on-disk form of a category; `value` renders norms.
pub fn category_to_json<V: Clone>(
    quantale: &str,
    host: &NormedCategory<V>,
    value: impl Fn(&V) -> Value,
) -> Value {
    let name = |f: usize| Value::String(host.name(f).to_string());
    let mut compose = serde_json::Map::new();
    for f in 0..host.morphism_count() {
        for g in host.out_of(host.cod(f)) {
            if !host.is_identity(f) && !host.is_identity(g) {
                compose.insert(format!("{}∘{}", host.name(g), host.name(f)), name(host.comp(g, f)));
            }
        }
    }
    serde_json::json!({
        "quantale": quantale,
        "objects": host.objects,
        "morphisms": (0..host.morphism_count()).map(|f| serde_json::json!({
            "name": host.name(f),
            "dom": host.objects[host.dom(f)],
            "cod": host.objects[host.cod(f)],
        })).collect::<Vec<_>>(),
        "identities": host.objects.iter().enumerate()
            .map(|(x, o)| (o.clone(), name(host.id(x))))
            .collect::<serde_json::Map<_, _>>(),
        "compose": compose,
        "norm": (0..host.morphism_count())
            .map(|f| (host.name(f).to_string(), value(&host.norm[f])))
            .collect::<serde_json::Map<_, _>>(),
    })
}
