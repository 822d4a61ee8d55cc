//! Command dispatch. Every command reads names from the workspace and
//! returns one JSON document (or DOT text for `poset --format dot`).

use serde_json::{json, Value};
use sphere_forge_core::derived::{hom_graded, serre, DObject, DerivedError};
use sphere_forge_core::nbhd::{
    asphericity, detect, frb_codomain_member, frb_decompose, frbo_member, frbod_member, poset_build, sph_subcat_member,
    spho_member, Flavor, NbhdError,
};
use sphere_forge_core::sodtwist::{left_mutation, right_mutation, twist_object, SodError};
use thiserror::Error;

use crate::render::{dims, envelope, object, profile};
use crate::verify::{run_suite, Suite};
use crate::workspace::{Embedding, Workspace};

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("{0}")]
    Usage(String),
    #[error("computation failed: {0}")]
    Internal(String),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Usage(_) => 2,
            CommandError::Internal(_) => 1,
        }
    }
}

impl From<DerivedError> for CommandError {
    fn from(e: DerivedError) -> Self {
        CommandError::Internal(e.to_string())
    }
}

impl From<SodError> for CommandError {
    fn from(e: SodError) -> Self {
        match e {
            SodError::Certification(_) | SodError::Derived(_) => CommandError::Internal(e.to_string()),
            _ => CommandError::Usage(e.to_string()),
        }
    }
}

impl From<NbhdError> for CommandError {
    fn from(e: NbhdError) -> Self {
        match e {
            NbhdError::Certification(_) | NbhdError::Derived(_) => CommandError::Internal(e.to_string()),
            NbhdError::Sod(s) => s.into(),
            _ => CommandError::Usage(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Clone, Debug)]
pub enum Command {
    Hom {
        x: String,
        y: String,
    },
    Serre {
        x: String,
    },
    Detect {
        x: String,
    },
    Twist {
        a: String,
        x: String,
    },
    MutateLeft {
        e: String,
        x: String,
    },
    MutateRight {
        e: String,
        x: String,
    },
    SodProject {
        emb: String,
        x: String,
    },
    POp {
        emb: String,
        x: String,
    },
    Asphericity {
        a: String,
        d: i64,
    },
    Member {
        flavor: String,
        emb: String,
        a: String,
        b: String,
    },
    Decompose {
        emb: String,
        b: String,
    },
    Poset {
        emb: String,
        flavor: String,
    },
    Verify {
        suite: String,
    },
}

#[derive(Clone, Debug)]
pub struct Options {
    pub format: Format,
    pub seed: Option<u64>,
    pub probes: Option<Vec<String>>,
    pub roster: Option<Vec<String>>,
}

/// Rendered output and the process exit code it implies.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

impl Outcome {
    fn json(v: &Value, exit_code: i32) -> Outcome {
        let mut text = serde_json::to_string_pretty(v).unwrap_or_default();
        text.push('\n');
        Outcome { text, exit_code }
    }
}

fn obj<'a>(ws: &'a Workspace, name: &str) -> Result<&'a DObject, CommandError> {
    ws.object(name)
        .ok_or_else(|| CommandError::Usage(format!("unknown object {name:?}")))
}

fn emb<'a>(ws: &'a Workspace, name: &str) -> Result<&'a Embedding, CommandError> {
    ws.embedding(name)
        .ok_or_else(|| CommandError::Usage(format!("unknown embedding {name:?}")))
}

fn flavor(s: &str) -> Result<Flavor, CommandError> {
    s.parse().map_err(CommandError::Usage)
}

fn names(ws: &Workspace, given: &Option<Vec<String>>, default: &[String]) -> Result<Vec<String>, CommandError> {
    let list = given.clone().unwrap_or_else(|| default.to_vec());
    for n in &list {
        obj(ws, n)?;
    }
    Ok(list)
}

pub fn run(ws: &Workspace, cmd: &Command, opts: &Options) -> Result<Outcome, CommandError> {
    let q = &ws.quiver;
    let seed = opts.seed.unwrap_or(ws.seed);
    if opts.format == Format::Dot && !matches!(cmd, Command::Poset { .. }) {
        return Err(CommandError::Usage("--format dot is only available for poset".into()));
    }
    let out = match cmd {
        Command::Hom { x, y } => {
            let h = hom_graded(q, obj(ws, x)?, obj(ws, y)?)?;
            envelope(
                "hom",
                json!({ "x": x, "y": y, "dims": dims(&h.dims()), "euler": h.euler() }),
            )
        }
        Command::Serre { x } => {
            let s = serre(q, obj(ws, x)?)?;
            envelope("serre", json!({ "x": x, "object": object(q, &s) }))
        }
        Command::Detect { x } => {
            let p = detect(q, obj(ws, x)?, seed)?;
            envelope("detect", json!({ "x": x, "profile": profile(&p) }))
        }
        Command::Twist { a, x } => {
            let t = twist_object(q, obj(ws, a)?, obj(ws, x)?)?;
            envelope("twist", json!({ "a": a, "x": x, "object": object(q, &t) }))
        }
        Command::MutateLeft { e, x } => {
            let m = left_mutation(q, obj(ws, e)?, obj(ws, x)?)?;
            envelope("mutate-left", json!({ "e": e, "x": x, "object": object(q, &m) }))
        }
        Command::MutateRight { e, x } => {
            let m = right_mutation(q, obj(ws, e)?, obj(ws, x)?)?;
            envelope("mutate-right", json!({ "e": e, "x": x, "object": object(q, &m) }))
        }
        Command::SodProject { emb: en, x } => {
            let parts = emb(ws, en)?.exc.sod_project(q, obj(ws, x)?)?.objects(q)?;
            envelope(
                "sod-project",
                json!({
                    "embedding": en,
                    "x": x,
                    "fr": object(q, &parts.fr),
                    "t": object(q, &parts.t),
                    "fl": object(q, &parts.fl),
                    "t_prime": object(q, &parts.tp),
                }),
            )
        }
        Command::POp { emb: en, x } => {
            let p = emb(ws, en)?.exc.p_operator(q, obj(ws, x)?)?;
            envelope("p-op", json!({ "embedding": en, "x": x, "object": object(q, &p) }))
        }
        Command::Asphericity { a, d } => {
            let asp = asphericity(q, obj(ws, a)?, *d)?;
            envelope(
                "asphericity",
                json!({
                    "a": a,
                    "degree": d,
                    "serre_shifted": object(q, &asp.serre_shifted),
                    "q": object(q, &asp.q_a),
                    "spherical": asp.q_a.is_zero(),
                }),
            )
        }
        Command::Member {
            flavor: f,
            emb: en,
            a,
            b,
        } => {
            let e = &emb(ws, en)?.exc;
            let (ao, bo) = (obj(ws, a)?, obj(ws, b)?);
            let member = match flavor(f)? {
                Flavor::FrbO => frbo_member(q, e, ao, bo)?,
                Flavor::FrbOd => frbod_member(q, e, ao, bo, seed)?,
                Flavor::SphO => spho_member(q, e, ao, bo, true, seed)?,
                Flavor::FrbCodomain => frb_codomain_member(q, e, bo)?,
                Flavor::SphSubcat => {
                    if ao.is_zero() {
                        true
                    } else {
                        let p = detect(q, ao, seed)?;
                        let sphere_forge_core::nbhd::Kind::Spherelike(d) = p.kind else {
                            return Err(CommandError::Usage(format!("{a:?} is not spherelike")));
                        };
                        sph_subcat_member(q, bo, &asphericity(q, ao, d)?)?
                    }
                }
            };
            envelope(
                "member",
                json!({ "flavor": f, "embedding": en, "a": a, "b": b, "member": member }),
            )
        }
        Command::Decompose { emb: en, b } => {
            let payload = match frb_decompose(q, &emb(ws, en)?.exc, obj(ws, b)?, seed) {
                Ok(d) => json!({
                    "embedding": en,
                    "b": b,
                    "member": true,
                    "image_part": object(q, &d.image_part),
                    "orthogonal_part": object(q, &d.orthogonal_part),
                }),
                Err(NbhdError::NotAMember) => json!({ "embedding": en, "b": b, "member": false }),
                Err(e) => return Err(e.into()),
            };
            envelope("decompose", payload)
        }
        Command::Poset { emb: en, flavor: f } => {
            let e = emb(ws, en)?;
            let roster = names(ws, &opts.roster, &ws.roster)?;
            let probes = names(ws, &opts.probes, &ws.probes)?;
            let p = poset_build(q, &e.exc, &ws.named(&roster), &ws.named(&probes), flavor(f)?, seed)?;
            if opts.format == Format::Dot {
                return Ok(Outcome {
                    text: p.to_dot(),
                    exit_code: 0,
                });
            }
            let name = |i: &usize| p.roster[*i].clone();
            let membership: serde_json::Map<String, Value> = p
                .roster
                .iter()
                .zip(&p.membership)
                .map(|(r, col)| {
                    (
                        r.clone(),
                        Value::Object(p.probes.iter().cloned().zip(col.iter().map(|&m| json!(m))).collect()),
                    )
                })
                .collect();
            envelope(
                "poset",
                json!({
                    "embedding": en,
                    "flavor": p.flavor.name(),
                    "roster": p.roster,
                    "probes": p.probes,
                    "probe_fingerprint": p.probe_fingerprint(),
                    "membership": membership,
                    "hasse": p.hasse.iter().map(|(a, b)| json!([name(a), name(b)])).collect::<Vec<_>>(),
                    "equivalent": p.equivalent.iter().map(|(a, b)| json!([name(a), name(b)])).collect::<Vec<_>>(),
                    "lattice": p.lattice.iter().map(|s| s.iter().map(|&i| p.probes[i].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                }),
            )
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(CommandError::Usage)?;
            let probes = names(ws, &opts.probes, &ws.probes)?;
            let roster = names(ws, &opts.roster, &ws.roster)?;
            let report = run_suite(ws, suite, &probes, &roster, seed);
            let code = if report.passed() { 0 } else { 1 };
            return Ok(Outcome::json(&envelope("verify", report.to_json()), code));
        }
    };
    Ok(Outcome::json(&out, 0))
}
