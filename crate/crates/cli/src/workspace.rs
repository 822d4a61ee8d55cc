//! Workspace files: a quiver, named objects, embeddings and optional frozen
//! expectations, in one JSON document.
//!
//! ```json
//! {
//!   "schema": "sphere-forge/1",
//!   "quiver": { "vertices": ["1", "2"],
//!               "arrows": [{"name": "a", "source": "1", "target": "2"}] },
//!   "objects": {
//!     "P1": {"projective": "1"},
//!     "R2": {"kronecker-regular": "2"},
//!     "M":  {"module": {"dims": [1, 1], "arrows": {"a": [["1/2"]]}}},
//!     "C":  {"terms": [{"shift": 1, "dims": [0, 1], "arrows": {}}]},
//!     "X":  {"sum": ["P1", "M"]},
//!     "Y":  {"shift": {"of": "X", "by": -1}},
//!     "Z":  {"zero": true}
//!   },
//!   "probes": ["P1", "M"],
//!   "roster": ["Z", "P1"],
//!   "embeddings": {"iota": ["P1"]},
//!   "seed": 7,
//!   "expect": {}
//! }
//! ```
//!
//! Objects may refer to each other in any order. Every error carries the
//! JSON pointer of the offending value.

use std::collections::{BTreeMap, HashMap};

use serde_json::{Map, Value};
use sphere_forge_core::derived::DObject;
use sphere_forge_core::exactlin::{Matrix, Scalar};
use sphere_forge_core::quiver::{injective, projective, simple, Quiver, QuiverError, Rep};
use sphere_forge_core::sodtwist::{validate_exc_sequence, ExcEmbedding};
use thiserror::Error;

pub const SCHEMA: &str = "sphere-forge/1";

#[derive(Debug, Error)]
pub enum WorkspaceError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{pointer}: {message}")]
    Schema { pointer: String, message: String },
}

fn err(pointer: &str, message: impl Into<String>) -> WorkspaceError {
    WorkspaceError::Schema {
        pointer: pointer.to_string(),
        message: message.into(),
    }
}

fn child(pointer: &str, key: &str) -> String {
    format!("{pointer}/{}", key.replace('~', "~0").replace('/', "~1"))
}

/// Frozen values checked by the verification suites.
#[derive(Clone, Debug, Default)]
pub struct Expectations {
    /// `exceptional`, `spherelike(d)`, `spherical(d)` or `neither`
    pub detect: Vec<(String, String)>,
    pub hom: Vec<(String, String, BTreeMap<i64, usize>)>,
    /// degree and the dimension vectors of `Q_A` by shift
    pub asphericity: Vec<(String, i64, BTreeMap<i64, Vec<usize>>)>,
    /// embedding, roster entry, probe, frbO membership
    pub membership: Vec<(String, String, String, bool)>,
    /// exceptional objects removed to form the embedded subcategory
    pub removed: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Embedding {
    pub name: String,
    pub members: Vec<String>,
    pub exc: ExcEmbedding,
}

#[derive(Clone, Debug)]
pub struct Workspace {
    pub quiver: Quiver,
    objects: Vec<(String, DObject)>,
    index: HashMap<String, usize>,
    /// summands of objects built with `sum`, flattened through nested sums
    pub summands: BTreeMap<String, Vec<String>>,
    pub probes: Vec<String>,
    pub roster: Vec<String>,
    pub embeddings: Vec<Embedding>,
    pub seed: u64,
    pub expect: Expectations,
}

impl Workspace {
    pub fn object(&self, name: &str) -> Option<&DObject> {
        self.index.get(name).map(|&i| &self.objects[i].1)
    }

    pub fn objects(&self) -> &[(String, DObject)] {
        &self.objects
    }

    pub fn embedding(&self, name: &str) -> Option<&Embedding> {
        self.embeddings.iter().find(|e| e.name == name)
    }

    pub fn named(&self, names: &[String]) -> Vec<(String, DObject)> {
        names
            .iter()
            .map(|n| (n.clone(), self.object(n).cloned().unwrap_or_else(DObject::zero)))
            .collect()
    }
}

pub fn load(path: &std::path::Path) -> Result<Workspace, WorkspaceError> {
    let bytes = std::fs::read(path).map_err(|e| WorkspaceError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse(&bytes)
}

pub fn parse(bytes: &[u8]) -> Result<Workspace, WorkspaceError> {
    let v: Value = serde_json::from_slice(bytes).map_err(|e| WorkspaceError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let root = as_object(&v, "")?;
    check_keys(
        root,
        "",
        &[
            "schema",
            "quiver",
            "objects",
            "probes",
            "roster",
            "embeddings",
            "seed",
            "expect",
        ],
    )?;
    if let Some(s) = root.get("schema") {
        if s.as_str() != Some(SCHEMA) {
            return Err(err("/schema", format!("expected {SCHEMA:?}")));
        }
    }
    let quiver = parse_quiver(required(root, "", "quiver")?)?;
    let defs = as_object(required(root, "", "objects")?, "/objects")?;

    let mut b = Builder {
        q: &quiver,
        defs,
        done: HashMap::new(),
        summands: BTreeMap::new(),
        visiting: Vec::new(),
    };
    let mut objects = Vec::new();
    let mut index = HashMap::new();
    for name in defs.keys() {
        let obj = b.resolve(name, "/objects")?;
        index.insert(name.clone(), objects.len());
        objects.push((name.clone(), obj));
    }
    let summands = b.summands;

    let names = |key: &str| -> Result<Option<Vec<String>>, WorkspaceError> {
        root.get(key)
            .map(|v| name_list(v, &format!("/{key}"), &index))
            .transpose()
    };
    let probes = names("probes")?.unwrap_or_else(|| objects.iter().map(|(n, _)| n.clone()).collect());
    let roster = names("roster")?.unwrap_or_default();

    let mut embeddings = Vec::new();
    if let Some(e) = root.get("embeddings") {
        for (name, list) in as_object(e, "/embeddings")? {
            let p = child("/embeddings", name);
            let members = name_list(list, &p, &index)?;
            if members.is_empty() {
                return Err(err(&p, "an embedding needs at least one object"));
            }
            let seq: Vec<DObject> = members.iter().map(|m| objects[index[m]].1.clone()).collect();
            let exc = validate_exc_sequence(&quiver, &seq).map_err(|e| err(&p, e.to_string()))?;
            embeddings.push(Embedding {
                name: name.clone(),
                members,
                exc,
            });
        }
    }

    let seed = match root.get("seed") {
        None => 0,
        Some(s) => s
            .as_u64()
            .ok_or_else(|| err("/seed", "expected a non-negative integer"))?,
    };
    let expect = match root.get("expect") {
        None => Expectations::default(),
        Some(e) => parse_expect(e, &index, &embeddings)?,
    };
    Ok(Workspace {
        quiver,
        objects,
        index,
        summands,
        probes,
        roster,
        embeddings,
        seed,
        expect,
    })
}

fn as_object<'a>(v: &'a Value, p: &str) -> Result<&'a Map<String, Value>, WorkspaceError> {
    v.as_object().ok_or_else(|| err(p, "expected an object"))
}

fn as_array<'a>(v: &'a Value, p: &str) -> Result<&'a Vec<Value>, WorkspaceError> {
    v.as_array().ok_or_else(|| err(p, "expected an array"))
}

fn as_str<'a>(v: &'a Value, p: &str) -> Result<&'a str, WorkspaceError> {
    v.as_str().ok_or_else(|| err(p, "expected a string"))
}

fn as_int(v: &Value, p: &str) -> Result<i64, WorkspaceError> {
    v.as_i64().ok_or_else(|| err(p, "expected an integer"))
}

fn as_dim(v: &Value, p: &str) -> Result<usize, WorkspaceError> {
    v.as_u64()
        .and_then(|d| usize::try_from(d).ok())
        .filter(|&d| d <= 1 << 16)
        .ok_or_else(|| err(p, "expected a dimension"))
}

fn required<'a>(m: &'a Map<String, Value>, p: &str, key: &str) -> Result<&'a Value, WorkspaceError> {
    m.get(key).ok_or_else(|| err(p, format!("missing field {key:?}")))
}

fn check_keys(m: &Map<String, Value>, p: &str, allowed: &[&str]) -> Result<(), WorkspaceError> {
    match m.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(err(&child(p, k), "unknown field")),
        None => Ok(()),
    }
}

fn name_list(v: &Value, p: &str, index: &HashMap<String, usize>) -> Result<Vec<String>, WorkspaceError> {
    as_array(v, p)?
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let ip = format!("{p}/{i}");
            let n = as_str(n, &ip)?;
            if !index.contains_key(n) {
                return Err(err(&ip, format!("unknown object {n:?}")));
            }
            Ok(n.to_string())
        })
        .collect()
}

fn parse_quiver(v: &Value) -> Result<Quiver, WorkspaceError> {
    let m = as_object(v, "/quiver")?;
    check_keys(m, "/quiver", &["vertices", "arrows"])?;
    let vertices = as_array(required(m, "/quiver", "vertices")?, "/quiver/vertices")?
        .iter()
        .enumerate()
        .map(|(i, x)| as_str(x, &format!("/quiver/vertices/{i}")).map(str::to_string))
        .collect::<Result<Vec<_>, _>>()?;
    let mut arrows = Vec::new();
    if let Some(a) = m.get("arrows") {
        for (i, x) in as_array(a, "/quiver/arrows")?.iter().enumerate() {
            let p = format!("/quiver/arrows/{i}");
            let am = as_object(x, &p)?;
            check_keys(am, &p, &["name", "source", "target"])?;
            let get = |k: &str| {
                required(am, &p, k)
                    .and_then(|v| as_str(v, &child(&p, k)))
                    .map(str::to_string)
            };
            arrows.push((get("name")?, get("source")?, get("target")?));
        }
    }
    Quiver::new(vertices, arrows).map_err(|e| err("/quiver", e.to_string()))
}

struct Builder<'a> {
    q: &'a Quiver,
    defs: &'a Map<String, Value>,
    done: HashMap<String, DObject>,
    summands: BTreeMap<String, Vec<String>>,
    visiting: Vec<String>,
}

impl Builder<'_> {
    fn resolve(&mut self, name: &str, from: &str) -> Result<DObject, WorkspaceError> {
        if let Some(o) = self.done.get(name) {
            return Ok(o.clone());
        }
        let Some(def) = self.defs.get(name) else {
            return Err(err(from, format!("unknown object {name:?}")));
        };
        if self.visiting.iter().any(|n| n == name) {
            return Err(err(from, format!("object {name:?} refers to itself")));
        }
        self.visiting.push(name.to_string());
        let p = child("/objects", name);
        let obj = self.build(name, def, &p);
        self.visiting.pop();
        let obj = obj?;
        self.done.insert(name.to_string(), obj.clone());
        Ok(obj)
    }

    fn vertex(&self, v: &Value, p: &str) -> Result<usize, WorkspaceError> {
        let label = as_str(v, p)?;
        self.q.vertex_index(label).map_err(|e| err(p, e.to_string()))
    }

    fn module(&self, m: Rep, p: &str) -> Result<DObject, WorkspaceError> {
        DObject::module(self.q, m).map_err(|e| err(p, e.to_string()))
    }

    fn build(&mut self, name: &str, def: &Value, p: &str) -> Result<DObject, WorkspaceError> {
        let m = as_object(def, p)?;
        let mut keys = m.keys();
        let (Some(kind), None) = (keys.next(), keys.next()) else {
            return Err(err(p, "expected exactly one constructor"));
        };
        let arg = &m[kind];
        let ap = child(p, kind);
        let q = self.q;
        let qerr = |e: QuiverError| err(&ap, e.to_string());
        match kind.as_str() {
            "zero" => Ok(DObject::zero()),
            "projective" => self.module(projective(q, self.vertex(arg, &ap)?).map_err(qerr)?, &ap),
            "injective" => self.module(injective(q, self.vertex(arg, &ap)?).map_err(qerr)?, &ap),
            "simple" => self.module(simple(q, self.vertex(arg, &ap)?).map_err(qerr)?, &ap),
            "kronecker-regular" => {
                let r = kronecker_regular(q, as_str(arg, &ap)?, &ap)?;
                self.module(r, &ap)
            }
            "module" => {
                let r = parse_rep(q, arg, &ap)?;
                self.module(r, &ap)
            }
            "terms" => {
                let mut terms = Vec::new();
                for (i, t) in as_array(arg, &ap)?.iter().enumerate() {
                    let tp = format!("{ap}/{i}");
                    let tm = as_object(t, &tp)?;
                    let shift = as_int(required(tm, &tp, "shift")?, &child(&tp, "shift"))?;
                    let mut rest = tm.clone();
                    rest.remove("shift");
                    terms.push((parse_rep(q, &Value::Object(rest), &tp)?, shift));
                }
                DObject::new(q, terms).map_err(|e| err(&ap, e.to_string()))
            }
            "sum" => {
                let mut parts = Vec::new();
                let mut flat = Vec::new();
                for (i, n) in as_array(arg, &ap)?.iter().enumerate() {
                    let np = format!("{ap}/{i}");
                    let n = as_str(n, &np)?;
                    parts.push(self.resolve(n, &np)?);
                    match self.summands.get(n) {
                        Some(inner) => flat.extend(inner.iter().cloned()),
                        None => flat.push(n.to_string()),
                    }
                }
                self.summands.insert(name.to_string(), flat);
                let refs: Vec<&DObject> = parts.iter().collect();
                DObject::sum(q, &refs).map_err(|e| err(&ap, e.to_string()))
            }
            "shift" => {
                let sm = as_object(arg, &ap)?;
                check_keys(sm, &ap, &["of", "by"])?;
                let of = as_str(required(sm, &ap, "of")?, &child(&ap, "of"))?;
                let by = as_int(required(sm, &ap, "by")?, &child(&ap, "by"))?;
                if by.unsigned_abs() > 1 << 20 {
                    return Err(err(&child(&ap, "by"), "shift out of range"));
                }
                Ok(self.resolve(of, &child(&ap, "of"))?.shift(by))
            }
            other => Err(err(&ap, format!("unknown constructor {other:?}"))),
        }
    }
}

fn parse_scalar(v: &Value, p: &str) -> Result<Scalar, WorkspaceError> {
    match v {
        Value::String(s) => s.parse().map_err(|_| err(p, format!("not a rational number: {s:?}"))),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from_int(n.as_i64().unwrap_or_default())),
        _ => Err(err(p, "expected a rational number as a string \"p/q\"")),
    }
}

fn parse_rep(q: &Quiver, v: &Value, p: &str) -> Result<Rep, WorkspaceError> {
    let m = as_object(v, p)?;
    check_keys(m, p, &["dims", "arrows"])?;
    let dp = child(p, "dims");
    let dims = as_array(required(m, p, "dims")?, &dp)?
        .iter()
        .enumerate()
        .map(|(i, d)| as_dim(d, &format!("{dp}/{i}")))
        .collect::<Result<Vec<_>, _>>()?;
    if dims.len() != q.num_vertices() {
        return Err(err(
            &dp,
            format!("{} dimensions for {} vertices", dims.len(), q.num_vertices()),
        ));
    }
    let ap = child(p, "arrows");
    let given = match m.get("arrows") {
        Some(a) => as_object(a, &ap)?.clone(),
        None => Map::new(),
    };
    if let Some(k) = given.keys().find(|k| !q.arrows().iter().any(|a| &a.name == *k)) {
        return Err(err(&child(&ap, k), "unknown arrow"));
    }
    let mut mats = Vec::new();
    for arrow in q.arrows() {
        let (rows, cols) = (dims[arrow.target], dims[arrow.source]);
        let mp = child(&ap, &arrow.name);
        let Some(mv) = given.get(&arrow.name) else {
            mats.push(Matrix::zeros(rows, cols));
            continue;
        };
        let raw = as_array(mv, &mp)?;
        let mut entries = Vec::with_capacity(raw.len());
        for (i, r) in raw.iter().enumerate() {
            let rp = format!("{mp}/{i}");
            let row = as_array(r, &rp)?;
            if row.len() != cols {
                return Err(err(
                    &rp,
                    format!("arrow {:?} needs rows of length {cols}, got {}", arrow.name, row.len()),
                ));
            }
            entries.push(
                row.iter()
                    .enumerate()
                    .map(|(j, x)| parse_scalar(x, &format!("{rp}/{j}")))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        if entries.len() != rows {
            return Err(err(
                &mp,
                format!(
                    "arrow {:?} needs a {rows}x{cols} matrix, got {} rows",
                    arrow.name,
                    entries.len()
                ),
            ));
        }
        mats.push(Matrix::from_rows_with_cols(entries, cols).map_err(|e| err(&mp, e.to_string()))?);
    }
    Rep::new(q, dims, mats).map_err(|e| err(p, e.to_string()))
}

/// `R_λ`: one-dimensional at both ends of the unique pair of parallel arrows,
/// with the arrows acting by `1` and `λ`, or by `0` and `1` for `λ = inf`.
fn kronecker_regular(q: &Quiver, lambda: &str, p: &str) -> Result<Rep, WorkspaceError> {
    let arrows = q.arrows();
    let mut pair = None;
    for (i, a) in arrows.iter().enumerate() {
        for (j, b) in arrows.iter().enumerate().skip(i + 1) {
            if (a.source, a.target) == (b.source, b.target) {
                if pair.is_some() {
                    return Err(err(p, "the quiver has more than one pair of parallel arrows"));
                }
                pair = Some((i, j));
            }
        }
    }
    let Some((i, j)) = pair else {
        return Err(err(p, "the quiver has no pair of parallel arrows"));
    };
    let (a, b) = if lambda == "inf" {
        (Scalar::zero(), Scalar::one())
    } else {
        (
            Scalar::one(),
            lambda
                .parse()
                .map_err(|_| err(p, format!("not a rational number or \"inf\": {lambda:?}")))?,
        )
    };
    let mut dims = vec![0; q.num_vertices()];
    dims[arrows[i].source] = 1;
    dims[arrows[i].target] = 1;
    let mats = arrows
        .iter()
        .enumerate()
        .map(|(k, arr)| {
            let (r, c) = (dims[arr.target], dims[arr.source]);
            match k {
                _ if k == i => Matrix::from_rows_with_cols(vec![vec![a.clone()]], 1),
                _ if k == j => Matrix::from_rows_with_cols(vec![vec![b.clone()]], 1),
                _ => Ok(Matrix::zeros(r, c)),
            }
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| err(p, e.to_string()))?;
    Rep::new(q, dims, mats).map_err(|e| err(p, e.to_string()))
}

fn parse_dims(v: &Value, p: &str) -> Result<BTreeMap<i64, usize>, WorkspaceError> {
    let mut out = BTreeMap::new();
    for (k, d) in as_object(v, p)? {
        let kp = child(p, k);
        let deg: i64 = k.parse().map_err(|_| err(&kp, "degree keys must be integers"))?;
        let d = as_dim(d, &kp)?;
        if d > 0 {
            out.insert(deg, d);
        }
    }
    Ok(out)
}

fn parse_expect(
    v: &Value,
    index: &HashMap<String, usize>,
    embeddings: &[Embedding],
) -> Result<Expectations, WorkspaceError> {
    let m = as_object(v, "/expect")?;
    check_keys(m, "/expect", &["detect", "hom", "asphericity", "membership", "removed"])?;
    let known = |n: &str, p: &str| {
        if index.contains_key(n) {
            Ok(n.to_string())
        } else {
            Err(err(p, format!("unknown object {n:?}")))
        }
    };
    let mut out = Expectations::default();
    if let Some(d) = m.get("detect") {
        for (name, kind) in as_object(d, "/expect/detect")? {
            let p = child("/expect/detect", name);
            let kind = as_str(kind, &p)?;
            if parse_kind(kind).is_none() {
                return Err(err(&p, format!("unknown kind {kind:?}")));
            }
            out.detect.push((known(name, &p)?, kind.to_string()));
        }
    }
    if let Some(h) = m.get("hom") {
        for (i, e) in as_array(h, "/expect/hom")?.iter().enumerate() {
            let p = format!("/expect/hom/{i}");
            let em = as_object(e, &p)?;
            check_keys(em, &p, &["x", "y", "dims"])?;
            let x = known(as_str(required(em, &p, "x")?, &p)?, &child(&p, "x"))?;
            let y = known(as_str(required(em, &p, "y")?, &p)?, &child(&p, "y"))?;
            out.hom
                .push((x, y, parse_dims(required(em, &p, "dims")?, &child(&p, "dims"))?));
        }
    }
    if let Some(a) = m.get("asphericity") {
        for (name, e) in as_object(a, "/expect/asphericity")? {
            let p = child("/expect/asphericity", name);
            let em = as_object(e, &p)?;
            check_keys(em, &p, &["degree", "q"])?;
            let d = as_int(required(em, &p, "degree")?, &child(&p, "degree"))?;
            let qp = child(&p, "q");
            let mut qd = BTreeMap::new();
            for (k, dv) in as_object(required(em, &p, "q")?, &qp)? {
                let kp = child(&qp, k);
                let shift: i64 = k.parse().map_err(|_| err(&kp, "shift keys must be integers"))?;
                let dims = as_array(dv, &kp)?
                    .iter()
                    .enumerate()
                    .map(|(i, x)| as_dim(x, &format!("{kp}/{i}")))
                    .collect::<Result<Vec<_>, _>>()?;
                qd.insert(shift, dims);
            }
            out.asphericity.push((known(name, &p)?, d, qd));
        }
    }
    if let Some(mem) = m.get("membership") {
        for (emb, rows) in as_object(mem, "/expect/membership")? {
            let ep = child("/expect/membership", emb);
            if !embeddings.iter().any(|e| &e.name == emb) {
                return Err(err(&ep, format!("unknown embedding {emb:?}")));
            }
            for (a, cols) in as_object(rows, &ep)? {
                let ap = child(&ep, a);
                let a = known(a, &ap)?;
                for (b, val) in as_object(cols, &ap)? {
                    let bp = child(&ap, b);
                    let val = val.as_bool().ok_or_else(|| err(&bp, "expected a boolean"))?;
                    out.membership.push((emb.clone(), a.clone(), known(b, &bp)?, val));
                }
            }
        }
    }
    if let Some(r) = m.get("removed") {
        out.removed = name_list(r, "/expect/removed", index)?;
    }
    Ok(out)
}

/// `Some((kind, spherical))` for a recognised kind string.
pub fn parse_kind(s: &str) -> Option<(sphere_forge_core::nbhd::Kind, bool)> {
    use sphere_forge_core::nbhd::Kind;
    let degree = |prefix: &str| s.strip_prefix(prefix)?.strip_suffix(')')?.parse::<i64>().ok();
    match s {
        "exceptional" => Some((Kind::Exceptional, false)),
        "neither" => Some((Kind::Neither, false)),
        _ => degree("spherelike(")
            .map(|d| (Kind::Spherelike(d), false))
            .or_else(|| degree("spherical(").map(|d| (Kind::Spherelike(d), true))),
    }
}
