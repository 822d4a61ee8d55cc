//! Named verification suites. Each suite runs its checks over the workspace
//! probes (and roster, embeddings and expectations where relevant) and
//! records every check, passing or not.

use std::collections::BTreeMap;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sphere_forge_core::derived::{
    euler_pairing, hom_complexes, hom_graded, is_iso, les_check, serre, to_proj, DObject, Triangle,
};
use sphere_forge_core::exactlin::Scalar;
use sphere_forge_core::nbhd::{
    asphericity, detect, detect_in_subcategory, frb_codomain_member, frb_decompose, frbo_member, frbo_member_serre,
    poset_build, sph_subcat_member, spho_member, Flavor, Kind, NbhdError,
};
use sphere_forge_core::quiver::Quiver;
use sphere_forge_core::sodtwist::{left_mutation, right_mutation, twist_object};

use crate::render::{dims, kind};
use crate::workspace::{parse_kind, Workspace};

/// Number of random cones checked by `triangle-les`.
pub const RANDOM_CONES: usize = 20;

/// Ordered probe pairs checked by the twist autoequivalence spot-check.
pub const TWIST_PAIRS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    SerreDuality,
    TriangleLes,
    MutationRoundtrip,
    SodOrthogonality,
    RouteEquivalence,
    FrobeniusDecomposition,
    SpherelikeDetection,
    AsphericityConsistency,
    CompositionTheorem,
    PosetLaws,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::SerreDuality,
        Suite::TriangleLes,
        Suite::MutationRoundtrip,
        Suite::SodOrthogonality,
        Suite::RouteEquivalence,
        Suite::FrobeniusDecomposition,
        Suite::SpherelikeDetection,
        Suite::AsphericityConsistency,
        Suite::CompositionTheorem,
        Suite::PosetLaws,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SerreDuality => "serre-duality",
            Suite::TriangleLes => "triangle-les",
            Suite::MutationRoundtrip => "mutation-roundtrip",
            Suite::SodOrthogonality => "sod-orthogonality",
            Suite::RouteEquivalence => "route-equivalence",
            Suite::FrobeniusDecomposition => "frobenius-decomposition",
            Suite::SpherelikeDetection => "spherelike-detection",
            Suite::AsphericityConsistency => "asphericity-consistency",
            Suite::CompositionTheorem => "composition-theorem",
            Suite::PosetLaws => "poset-laws",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Value>,
    pub failures: Vec<Value>,
    pub skipped: Vec<Value>,
}

impl Report {
    fn new(suite: Suite) -> Report {
        Report {
            suite,
            checks: Vec::new(),
            failures: Vec::new(),
            skipped: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Number of checks whose `check` field equals `name`.
    pub fn count(&self, name: &str) -> usize {
        self.checks.iter().filter(|c| c["check"] == name).count()
    }

    fn record(&mut self, check: &str, ok: bool, mut detail: Value) {
        if let Value::Object(m) = &mut detail {
            m.insert("check".into(), json!(check));
            m.insert("ok".into(), json!(ok));
        }
        if !ok {
            self.failures.push(detail.clone());
        }
        self.checks.push(detail);
    }

    fn error(&mut self, check: &str, mut detail: Value, e: impl std::fmt::Display) {
        if let Value::Object(m) = &mut detail {
            m.insert("error".into(), json!(e.to_string()));
        }
        self.record(check, false, detail);
    }

    fn skip(&mut self, detail: Value) {
        self.skipped.push(detail);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "passed": self.passed(),
            "checked": self.checks.len(),
            "failed": self.failures.len(),
            "checks": self.checks,
            "failures": self.failures,
            "skipped": self.skipped,
        })
    }
}

struct Ctx<'a> {
    ws: &'a Workspace,
    q: &'a Quiver,
    probes: Vec<(String, DObject)>,
    roster: Vec<(String, DObject)>,
    seed: u64,
}

impl Ctx<'_> {
    fn iso(&self, x: &DObject, y: &DObject) -> Result<bool, String> {
        is_iso(self.q, x, y, self.seed)
            .map(|v| v.is_yes())
            .map_err(|e| e.to_string())
    }
}

pub fn run_suite(ws: &Workspace, suite: Suite, probes: &[String], roster: &[String], seed: u64) -> Report {
    let cx = Ctx {
        ws,
        q: &ws.quiver,
        probes: ws.named(probes),
        roster: ws.named(roster),
        seed,
    };
    let mut r = Report::new(suite);
    match suite {
        Suite::SerreDuality => serre_duality(&cx, &mut r),
        Suite::TriangleLes => triangle_les(&cx, &mut r),
        Suite::MutationRoundtrip => mutation_roundtrip(&cx, &mut r),
        Suite::SodOrthogonality => sod_orthogonality(&cx, &mut r),
        Suite::RouteEquivalence => route_equivalence(&cx, &mut r),
        Suite::FrobeniusDecomposition => frobenius_decomposition(&cx, &mut r),
        Suite::SpherelikeDetection => spherelike_detection(&cx, &mut r),
        Suite::AsphericityConsistency => asphericity_consistency(&cx, &mut r),
        Suite::CompositionTheorem => composition_theorem(&cx, &mut r),
        Suite::PosetLaws => poset_laws(&cx, &mut r),
    }
    r
}

fn negate(d: BTreeMap<i64, usize>) -> BTreeMap<i64, usize> {
    d.into_iter().map(|(k, v)| (-k, v)).collect()
}

/// `dim Hom^i(x, y) = dim Hom^{-i}(y, S x)`.
fn serre_duality(cx: &Ctx, r: &mut Report) {
    let q = cx.q;
    for (xn, x) in &cx.probes {
        let sx = match serre(q, x) {
            Ok(s) => s,
            Err(e) => {
                r.error("serre", json!({ "x": xn }), e);
                continue;
            }
        };
        for (yn, y) in &cx.probes {
            let detail = json!({ "x": xn, "y": yn });
            match (hom_graded(q, x, y), hom_graded(q, y, &sx)) {
                (Ok(h), Ok(d)) => {
                    let (h, d) = (h.dims(), negate(d.dims()));
                    let ok = h == d;
                    r.record(
                        "pair",
                        ok,
                        json!({ "x": xn, "y": yn, "hom": dims(&h), "dual": dims(&d) }),
                    );
                }
                (Err(e), _) | (_, Err(e)) => r.error("pair", detail, e),
            }
        }
    }
}

/// Random cones `X -> Y[n] -> C`: exactness of the long exact sequences for
/// `Hom(w, -)` and additivity of the Euler form.
fn triangle_les(cx: &Ctx, r: &mut Report) {
    let q = cx.q;
    let mut rng = ChaCha8Rng::seed_from_u64(cx.seed);
    let Ok(complexes) = cx
        .probes
        .iter()
        .map(|(_, x)| to_proj(q, x))
        .collect::<Result<Vec<_>, _>>()
    else {
        r.error("setup", json!({}), "probe resolution failed");
        return;
    };
    let mut made = 0;
    let mut attempts = 0;
    while made < RANDOM_CONES && attempts < 50 * RANDOM_CONES && !cx.probes.is_empty() {
        attempts += 1;
        let (i, j) = (rng.gen_range(0..cx.probes.len()), rng.gen_range(0..cx.probes.len()));
        let h = match hom_complexes(q, &complexes[i], &complexes[j]) {
            Ok(h) => h,
            Err(e) => {
                r.error("cone", json!({ "x": cx.probes[i].0, "y": cx.probes[j].0 }), e);
                continue;
            }
        };
        let degrees: Vec<i64> = h.dims().into_keys().collect();
        // the zero map is a legitimate cone too, so empty Hom spaces are kept at a low rate
        let (n, f) = if degrees.is_empty() {
            if rng.gen_range(0..4) != 0 {
                continue;
            }
            let z = sphere_forge_core::derived::ChainMap::zero(&complexes[i], &complexes[j]);
            (0, z)
        } else {
            let n = degrees[rng.gen_range(0..degrees.len())];
            let mut f = h.rep(q, n, 0).scale(&Scalar::zero());
            for k in 0..h.dim(n) {
                let c = Scalar::from_int(rng.gen_range(-3..=3));
                f = f.add(&h.rep(q, n, k).scale(&c));
            }
            (n, f)
        };
        made += 1;
        let label = json!({ "x": cx.probes[i].0, "y": cx.probes[j].0, "degree": n });
        let tri = Triangle::from_map(q, &f);
        let objs = match tri.objects(q) {
            Ok(o) => o,
            Err(e) => {
                r.error("cone", label, e);
                continue;
            }
        };
        let (x, y, c) = objs;
        let class_ok = {
            let (cx_, cy, cc) = (x.class(q), y.class(q), c.class(q));
            cx_.iter().zip(&cy).zip(&cc).all(|((a, b), z)| *z == b - a)
        };
        r.record("class", class_ok, label.clone());
        for (k, (wn, w)) in cx.probes.iter().enumerate() {
            let mut detail = label.clone();
            detail["w"] = json!(wn);
            match les_check(q, &tri, &complexes[k]) {
                Ok(Ok(())) => r.record("les", true, detail.clone()),
                Ok(Err(msg)) => {
                    detail["reason"] = json!(msg);
                    r.record("les", false, detail.clone());
                }
                Err(e) => r.error("les", detail.clone(), e),
            }
            let euler = (|| -> Result<bool, String> {
                let e = |a: &DObject, b: &DObject| euler_pairing(q, a, b).map_err(|e| e.to_string());
                let left = e(w, &c)? == e(w, &y)? - e(w, &x)?;
                let right = e(&c, w)? == e(&y, w)? - e(&x, w)?;
                let form = e(w, &c)? == q.euler_form(&w.class(q), &c.class(q));
                Ok(left && right && form)
            })();
            match euler {
                Ok(ok) => r.record("euler", ok, detail),
                Err(e) => r.error("euler", detail, e),
            }
        }
    }
    r.record("cone-count", made == RANDOM_CONES, json!({ "cones": made }));
}

fn exceptional_probes(cx: &Ctx) -> Vec<(String, DObject)> {
    cx.probes
        .iter()
        .filter(|(_, x)| {
            !x.is_zero()
                && detect(cx.q, x, cx.seed)
                    .map(|p| p.kind == Kind::Exceptional)
                    .unwrap_or(false)
        })
        .cloned()
        .collect()
}

/// `R_E L_E x ≅ R_E x` and `L_E R_E x ≅ L_E x` for every probe, and the
/// identity round trips on the orthogonals, where mutation is an equivalence.
fn mutation_roundtrip(cx: &Ctx, r: &mut Report) {
    let q = cx.q;
    let exc = exceptional_probes(cx);
    if exc.is_empty() {
        r.skip(json!({ "reason": "no exceptional probes" }));
    }
    for (en, e) in &exc {
        for (xn, x) in &cx.probes {
            let detail = json!({ "e": en, "x": xn });
            let res = (|| -> Result<[bool; 4], String> {
                let s = |v: sphere_forge_core::sodtwist::SodError| v.to_string();
                let l = left_mutation(q, e, x).map_err(s)?;
                let rr = right_mutation(q, e, x).map_err(s)?;
                let rl = right_mutation(q, e, &l).map_err(s)?;
                let lr = left_mutation(q, e, &rr).map_err(s)?;
                // rr lies in ⊥E and l in E⊥, where the round trips are identities
                let rl_rr = right_mutation(q, e, &left_mutation(q, e, &rr).map_err(s)?).map_err(s)?;
                let lr_l = left_mutation(q, e, &right_mutation(q, e, &l).map_err(s)?).map_err(s)?;
                Ok([
                    cx.iso(&rl, &rr)?,
                    cx.iso(&lr, &l)?,
                    cx.iso(&rl_rr, &rr)?,
                    cx.iso(&lr_l, &l)?,
                ])
            })();
            match res {
                Ok([a, b, c, d]) => {
                    r.record("right-left", a, detail.clone());
                    r.record("left-right", b, detail.clone());
                    r.record("right-left-identity", c, detail.clone());
                    r.record("left-right-identity", d, detail);
                }
                Err(e) => r.error("mutation", detail, e),
            }
        }
    }
}

/// Projection triangles: `T b ∈ ker R`, `T' b ∈ ker L`, both adjoint parts in
/// the image, and `T b = T' b = 0` for a full sequence.
fn sod_orthogonality(cx: &Ctx, r: &mut Report) {
    let q = cx.q;
    for e in &cx.ws.embeddings {
        let full = e.members.len() == q.num_vertices();
        for (bn, b) in &cx.probes {
            let detail = json!({ "embedding": e.name, "b": bn });
            let res = (|| -> Result<Vec<(&'static str, bool)>, String> {
                let objs = e
                    .exc
                    .sod_project(q, b)
                    .map_err(|x| x.to_string())?
                    .objects(q)
                    .map_err(|x| x.to_string())?;
                let p = |x: &DObject| to_proj(q, x).map_err(|x| x.to_string());
                let mut out = vec![
                    (
                        "t-in-ker-r",
                        e.exc.in_ker_r(q, &p(&objs.t)?).map_err(|x| x.to_string())?,
                    ),
                    (
                        "tp-in-ker-l",
                        e.exc.in_ker_l(q, &p(&objs.tp)?).map_err(|x| x.to_string())?,
                    ),
                    ("fr-in-image", e.exc.check_image(q, &objs.fr).is_ok()),
                    ("fl-in-image", e.exc.check_image(q, &objs.fl).is_ok()),
                ];
                if full {
                    out.push(("full-annihilation", objs.t.is_zero() && objs.tp.is_zero()));
                }
                Ok(out)
            })();
            match res {
                Ok(list) => {
                    for (name, ok) in list {
                        r.record(name, ok, detail.clone());
                    }
                }
                Err(err) => r.error("sod-project", detail, err),
            }
        }
    }
}

fn image_roster<'a>(cx: &'a Ctx, e: &crate::workspace::Embedding, r: &mut Report) -> Vec<&'a (String, DObject)> {
    cx.roster
        .iter()
        .filter(|(an, a)| {
            let ok = a.is_zero() || e.exc.check_image(cx.q, a).is_ok();
            if !ok {
                r.skip(json!({ "embedding": e.name, "a": an, "reason": "not in the image" }));
            }
            ok
        })
        .collect()
}

fn route_equivalence(cx: &Ctx, r: &mut Report) {
    let q = cx.q;
    for e in &cx.ws.embeddings {
        for (an, a) in image_roster(cx, e, r) {
            for (bn, b) in &cx.probes {
                let detail = json!({ "embedding": e.name, "a": an, "b": bn });
                match (frbo_member(q, &e.exc, a, b), frbo_member_serre(q, &e.exc, a, b)) {
                    (Ok(x), Ok(y)) => {
                        let mut d = detail;
                        d["member"] = json!(x);
                        r.record("pair", x == y, d);
                    }
                    (Err(err), _) | (_, Err(err)) => r.error("pair", detail, err),
                }
            }
        }
    }
}

fn frobenius_decomposition(cx: &Ctx, r: &mut Report) {
    let q = cx.q;
    for e in &cx.ws.embeddings {
        for (bn, b) in &cx.probes {
            let mut detail = json!({ "embedding": e.name, "b": bn });
            let member = match frb_codomain_member(q, &e.exc, b) {
                Ok(m) => m,
                Err(err) => {
                    r.error("member", detail, err);
                    continue;
                }
            };
            detail["member"] = json!(member);
            match e.exc.p_operator(q, b) {
                Ok(p) => r.record("p-zero-test", p.is_zero() == member, detail.clone()),
                Err(err) => r.error("p-zero-test", detail.clone(), err),
            }
            match frb_decompose(q, &e.exc, b, cx.seed) {
                Ok(d) => {
                    let ok = member && (d.image_part.is_zero() || e.exc.check_image(q, &d.image_part).is_ok());
                    r.record("decomposition", ok, detail);
                }
                Err(NbhdError::NotAMember) => r.record("decomposition", !member, detail),
                Err(err) => r.error("decomposition", detail, err),
            }
        }
    }
}

/// Profiles of all probes against the frozen expectations, graded Homs
/// against the frozen values, and the twist law for spherical probes.
fn spherelike_detection(cx: &Ctx, r: &mut Report) {
    let q = cx.q;
    let mut profiles = BTreeMap::new();
    for (xn, x) in &cx.probes {
        match detect(q, x, cx.seed) {
            Ok(p) => {
                r.record(
                    "profile",
                    true,
                    json!({ "x": xn, "kind": kind(&p.kind, p.is_spherical()) }),
                );
                profiles.insert(xn.clone(), p);
            }
            Err(e) => r.error("profile", json!({ "x": xn }), e),
        }
    }
    for (xn, want) in &cx.ws.expect.detect {
        let got = match profiles.get(xn) {
            Some(p) => Some(kind(&p.kind, p.is_spherical())),
            None => cx
                .ws
                .object(xn)
                .and_then(|x| detect(q, x, cx.seed).ok())
                .map(|p| kind(&p.kind, p.is_spherical())),
        };
        let ok = got.as_deref() == Some(want.as_str()) && parse_kind(want).is_some();
        r.record("expected-kind", ok, json!({ "x": xn, "want": want, "got": got }));
    }
    for (xn, yn, want) in &cx.ws.expect.hom {
        let detail = json!({ "x": xn, "y": yn, "want": dims(want) });
        match (cx.ws.object(xn), cx.ws.object(yn)) {
            (Some(x), Some(y)) => match hom_graded(q, x, y) {
                Ok(h) => r.record("expected-hom", &h.dims() == want, detail),
                Err(e) => r.error("expected-hom", detail, e),
            },
            _ => r.error("expected-hom", detail, "unknown object"),
        }
    }
    for (an, a) in &cx.probes {
        let Some(p) = profiles.get(an).filter(|p| p.is_spherical()) else {
            continue;
        };
        let Kind::Spherelike(d) = p.kind else { continue };
        let detail = json!({ "a": an, "degree": d });
        match twist_object(q, a, a)
            .map_err(|e| e.to_string())
            .and_then(|t| cx.iso(&t, &a.shift(1 - d)))
        {
            Ok(ok) => r.record("twist-self", ok, detail),
            Err(e) => r.error("twist-self", detail, e),
        }
        let pairs = cx
            .probes
            .iter()
            .flat_map(|x| cx.probes.iter().map(move |y| (x, y)))
            .filter(|((xn, _), (yn, _))| xn != yn)
            .take(TWIST_PAIRS);
        for ((xn, x), (yn, y)) in pairs {
            let detail = json!({ "a": an, "x": xn, "y": yn });
            let res = (|| -> Result<bool, String> {
                let tx = twist_object(q, a, x).map_err(|e| e.to_string())?;
                let ty = twist_object(q, a, y).map_err(|e| e.to_string())?;
                let before = hom_graded(q, x, y).map_err(|e| e.to_string())?.dims();
                let after = hom_graded(q, &tx, &ty).map_err(|e| e.to_string())?.dims();
                Ok(before == after)
            })();
            match res {
                Ok(ok) => r.record("twist-preserves-hom", ok, detail),
                Err(e) => r.error("twist-preserves-hom", detail, e),
            }
        }
    }
}

/// For spherelike probes: `Q_A = 0` exactly when `A` is spherical, the
/// asphericity triangle is exact against every probe, and frozen `Q_A`
/// dimensions match.
fn asphericity_consistency(cx: &Ctx, r: &mut Report) {
    let q = cx.q;
    let Ok(complexes) = cx
        .probes
        .iter()
        .map(|(_, x)| to_proj(q, x))
        .collect::<Result<Vec<_>, _>>()
    else {
        r.error("setup", json!({}), "probe resolution failed");
        return;
    };
    let mut targets: Vec<(String, DObject)> = Vec::new();
    for (an, a) in cx.probes.iter().chain(&cx.roster) {
        if !targets.iter().any(|(n, _)| n == an) {
            targets.push((an.clone(), a.clone()));
        }
    }
    for (an, a) in &targets {
        let p = match detect(q, a, cx.seed) {
            Ok(p) => p,
            Err(e) => {
                r.error("profile", json!({ "a": an }), e);
                continue;
            }
        };
        let Kind::Spherelike(d) = p.kind else { continue };
        let detail = json!({ "a": an, "degree": d });
        let asp = match asphericity(q, a, d) {
            Ok(x) => x,
            Err(e) => {
                r.error("asphericity", detail, e);
                continue;
            }
        };
        let mut d2 = detail.clone();
        d2["q"] = dims(&asp.q_a.dim_vectors());
        r.record("q-zero-iff-spherical", asp.q_a.is_zero() == p.is_spherical(), d2);
        let tri = Triangle::from_map(q, &asp.w);
        for (k, (wn, _)) in cx.probes.iter().enumerate() {
            let mut dw = detail.clone();
            dw["w"] = json!(wn);
            match les_check(q, &tri, &complexes[k]) {
                Ok(Ok(())) => r.record("les", true, dw),
                Ok(Err(m)) => {
                    dw["reason"] = json!(m);
                    r.record("les", false, dw);
                }
                Err(e) => r.error("les", dw, e),
            }
        }
    }
    for (an, d, want) in &cx.ws.expect.asphericity {
        let detail = json!({ "a": an, "degree": d, "want": dims(want) });
        let res = cx
            .ws
            .object(an)
            .ok_or_else(|| "unknown object".to_string())
            .and_then(|a| asphericity(q, a, *d).map_err(|e| e.to_string()));
        match res {
            Ok(asp) => r.record("expected-q", &asp.q_a.dim_vectors() == want, detail),
            Err(e) => r.error("expected-q", detail, e),
        }
    }
}

/// For roster entries spherical inside the subcategory: the spherical
/// neighbourhood of the composite, the Frobenius neighbourhood, and the
/// subcategory `⊥Q_A` agree on every probe.
fn composition_theorem(cx: &Ctx, r: &mut Report) {
    let q = cx.q;
    for e in &cx.ws.embeddings {
        for (an, a) in image_roster(cx, e, r) {
            if a.is_zero() {
                continue;
            }
            let base = json!({ "embedding": e.name, "a": an });
            let sub = match detect_in_subcategory(q, &e.exc, a, cx.seed) {
                Ok(p) => p,
                Err(err) => {
                    r.error("profile", base, err);
                    continue;
                }
            };
            let d = match (sub.kind.clone(), sub.cy_degree) {
                (Kind::Spherelike(d), Some(c)) if c == d => d,
                _ => {
                    r.skip(json!({ "embedding": e.name, "a": an, "reason": "not spherical in the subcategory" }));
                    continue;
                }
            };
            let asp = match asphericity(q, a, d) {
                Ok(x) => x,
                Err(err) => {
                    r.error("asphericity", base, err);
                    continue;
                }
            };
            let mut pd = base.clone();
            pd["q"] = dims(&asp.q_a.dim_vectors());
            pd["properly_spherelike"] = json!(!asp.q_a.is_zero());
            r.record("profile", true, pd);
            for (bn, b) in &cx.probes {
                let mut detail = base.clone();
                detail["b"] = json!(bn);
                let res = (|| -> Result<(bool, bool, bool), String> {
                    let s = spho_member(q, &e.exc, a, b, true, cx.seed).map_err(|x| x.to_string())?;
                    let f = frbo_member(q, &e.exc, a, b).map_err(|x| x.to_string())?;
                    let c = sph_subcat_member(q, b, &asp).map_err(|x| x.to_string())?;
                    Ok((s, f, c))
                })();
                match res {
                    Ok((s, f, c)) => {
                        detail["member"] = json!(f);
                        r.record("agree", s == f && f == c, detail.clone());
                        let frozen = cx
                            .ws
                            .expect
                            .membership
                            .iter()
                            .find(|(en, xa, xb, _)| en == &e.name && xa == an && xb == bn);
                        if let Some((.., want)) = frozen {
                            r.record("expected-member", f == *want, detail);
                        }
                    }
                    Err(err) => r.error("agree", detail, err),
                }
            }
            for sn in &cx.ws.expect.removed {
                let Some(s) = cx.ws.object(sn) else { continue };
                let detail = json!({ "embedding": e.name, "a": an, "removed": sn });
                let res = (|| -> Result<bool, String> {
                    let excluded = !frbo_member(q, &e.exc, a, s).map_err(|x| x.to_string())?;
                    let hom_nonzero = !hom_graded(q, s, a).map_err(|x| x.to_string())?.is_zero();
                    Ok(excluded == hom_nonzero)
                })();
                match res {
                    Ok(ok) => r.record("removed-case-split", ok, detail),
                    Err(err) => r.error("removed-case-split", detail, err),
                }
            }
        }
    }
}

/// Maximality of the zero object, the meet law for roster sums, and the
/// weak-generator column against the codomain column.
fn poset_laws(cx: &Ctx, r: &mut Report) {
    let q = cx.q;
    for e in &cx.ws.embeddings {
        let roster: Vec<(String, DObject)> = image_roster(cx, e, r).into_iter().cloned().collect();
        let base = json!({ "embedding": e.name });
        if roster.is_empty() {
            r.skip(json!({ "embedding": e.name, "reason": "empty roster" }));
            continue;
        }
        let build = |f| poset_build(q, &e.exc, &roster, &cx.probes, f, cx.seed);
        let (p, cod) = match (build(Flavor::FrbO), build(Flavor::FrbCodomain)) {
            (Ok(p), Ok(c)) => (p, c),
            (Err(err), _) | (_, Err(err)) => {
                r.error("build", base, err);
                continue;
            }
        };
        let pos = |n: &str| roster.iter().position(|(x, _)| x == n);
        for (i, (an, a)) in roster.iter().enumerate() {
            if a.is_zero() {
                let ok = p.column(i).iter().all(|&m| m) && (0..roster.len()).all(|j| p.leq(j, i));
                r.record("zero-maximal", ok, json!({ "embedding": e.name, "a": an }));
            }
            if let Some(parts) = cx.ws.summands.get(an) {
                let idx: Option<Vec<usize>> = parts.iter().map(|s| pos(s)).collect();
                if let Some(idx) = idx {
                    let meet: Vec<bool> = (0..cx.probes.len())
                        .map(|k| idx.iter().all(|&j| p.column(j)[k]))
                        .collect();
                    r.record(
                        "meet-law",
                        p.column(i) == meet.as_slice(),
                        json!({ "embedding": e.name, "a": an, "summands": parts }),
                    );
                }
                let generates = e.members.iter().all(|m| parts.contains(m));
                if generates {
                    r.record(
                        "weak-generator",
                        p.column(i) == cod.column(i),
                        json!({ "embedding": e.name, "a": an }),
                    );
                }
            }
        }
        let hasse_ok = p.hasse.iter().all(|&(a, b)| p.leq(a, b) && !p.leq(b, a));
        r.record("hasse-strict", hasse_ok, base.clone());
        let dot = p.to_dot();
        let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
        r.record("dot-nodes", nodes == roster.len(), base);
    }
}
