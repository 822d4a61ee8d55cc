//! JSON shapes shared by all commands.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};
use sphere_forge_core::derived::DObject;
use sphere_forge_core::exactlin::Matrix;
use sphere_forge_core::nbhd::{Kind, SpherelikeProfile};
use sphere_forge_core::quiver::{Quiver, Rep};

use crate::workspace::SCHEMA;

/// Wraps a payload with the schema tag and the command name.
pub fn envelope(command: &str, payload: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    if let Value::Object(p) = payload {
        m.extend(p);
    }
    Value::Object(m)
}

pub fn dims<T: serde::Serialize>(d: &BTreeMap<i64, T>) -> Value {
    Value::Object(d.iter().map(|(k, v)| (k.to_string(), json!(v))).collect())
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| json!(x.to_string())).collect()))
            .collect(),
    )
}

pub fn rep(q: &Quiver, r: &Rep) -> Value {
    let arrows: Map<String, Value> = q
        .arrows()
        .iter()
        .zip(r.mats())
        .map(|(a, m)| (a.name.clone(), matrix(m)))
        .collect();
    json!({ "dims": r.dims(), "arrows": arrows })
}

/// Same shape as the `terms` constructor of the workspace format.
pub fn object(q: &Quiver, x: &DObject) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|(r, s)| {
            let mut v = rep(q, r);
            if let Value::Object(m) = &mut v {
                m.insert("shift".into(), json!(s));
            }
            v
        })
        .collect();
    json!({ "terms": terms, "dim_vectors": dims(&x.dim_vectors()), "zero": x.is_zero() })
}

pub fn kind(k: &Kind, spherical: bool) -> String {
    match k {
        Kind::Exceptional => "exceptional".into(),
        Kind::Neither => "neither".into(),
        Kind::Spherelike(d) if spherical => format!("spherical({d})"),
        Kind::Spherelike(d) => format!("spherelike({d})"),
    }
}

pub fn profile(p: &SpherelikeProfile) -> Value {
    json!({
        "kind": kind(&p.kind, p.is_spherical()),
        "self_hom": dims(&p.self_hom),
        "cy_degree": p.cy_degree,
        "spherical": p.is_spherical(),
    })
}
