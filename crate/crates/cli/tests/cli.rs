use std::path::PathBuf;
use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::{json, Value};
use sphere_forge_cli::render::object;
use sphere_forge_cli::{parse, WorkspaceError};
use sphere_forge_core::derived::{hom_graded, is_iso, DObject};
use sphere_forge_core::exactlin::{Matrix, Scalar};
use sphere_forge_core::quiver::{Quiver, Rep};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphere-forge"))
        .args(args)
        .output()
        .unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn kronecker() -> String {
    fixture("kronecker.json").display().to_string()
}

fn tacked() -> String {
    fixture("tacked-kronecker.json").display().to_string()
}

#[test]
fn hom_of_regular_module() {
    let out = cli(&[&kronecker(), "hom", "R0", "R0"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["schema"], "sphere-forge/1");
    assert_eq!(v["dims"], json!({"0": 1, "1": 1}));
}

#[test]
fn zero_object_is_maximal() {
    let ws = parse(&std::fs::read(fixture("tacked-kronecker.json")).unwrap()).unwrap();
    for b in &ws.probes {
        let v = json_of(&cli(&[&tacked(), "member", "frbO", "iota", "Z", b]));
        assert_eq!(v["member"], true, "{b}");
    }
}

#[test]
fn verify_lists_every_pair() {
    let out = cli(&[&kronecker(), "verify", "serre-duality"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 13 * 13);
}

#[test]
fn every_command_is_tagged_and_deterministic() {
    let k = kronecker();
    let t = tacked();
    let runs: Vec<Vec<&str>> = vec![
        vec![&k, "hom", "P1", "R2"],
        vec![&k, "serre", "S1"],
        vec![&k, "detect", "R1"],
        vec![&k, "twist", "R1", "P1"],
        vec![&k, "mutate-left", "P2", "P1"],
        vec![&k, "mutate-right", "P1", "P2"],
        vec![&t, "sod-project", "iota", "S3"],
        vec![&t, "p-op", "iota", "S3"],
        vec![&t, "asphericity", "iR1", "1"],
        vec![&t, "member", "sphO", "iota", "iR1", "P1"],
        vec![&t, "member", "frbOd", "iota", "iR1", "I3"],
        vec![&t, "member", "sph-subcat", "iota", "iR1", "S2"],
        vec![&t, "member", "frb-codomain", "iota", "Z", "S2"],
        vec![&t, "decompose", "iota", "I3"],
        vec![&t, "poset", "iota"],
        vec![&t, "--seed", "3", "verify", "triangle-les"],
    ];
    for args in runs {
        let a = cli(&args);
        let b = cli(&args);
        assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(json_of(&a)["schema"], "sphere-forge/1");
    }
}

#[test]
fn dot_output() {
    let out = cli(&[&tacked(), "poset", "iota", "--format", "dot", "--roster", "Z,iR1,P2"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=").count(), 3);
    assert!(dot.contains("// probes:"));
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&[&kronecker(), "hom", "R0", "Missing"]).status.code(), Some(2));
    assert_eq!(cli(&[&kronecker(), "asphericity", "P1", "1"]).status.code(), Some(2));
    assert_eq!(cli(&[&kronecker(), "verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(
        cli(&[&kronecker(), "detect", "P1", "--format", "dot"]).status.code(),
        Some(2)
    );
    assert_eq!(
        cli(&[&tacked(), "member", "frbO", "iota", "S3", "P1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        cli(&["/definitely/not/here.json", "detect", "X"]).status.code(),
        Some(2)
    );
    assert_eq!(cli(&[&kronecker()]).status.code(), Some(2));
}

#[test]
fn failing_suite_exits_one() {
    let dir = std::env::temp_dir().join(format!("sphere-forge-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wrong.json");
    let mut ws: Value = serde_json::from_slice(&std::fs::read(fixture("kronecker.json")).unwrap()).unwrap();
    ws["expect"]["detect"]["R0"] = json!("exceptional");
    std::fs::write(&path, serde_json::to_vec(&ws).unwrap()).unwrap();
    let out = cli(&[path.to_str().unwrap(), "verify", "spherelike-detection"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["passed"], false);
    assert_eq!(v["failures"][0]["x"], "R0");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn minimal_workspace_detects_exceptional() {
    let dir = std::env::temp_dir().join(format!("sphere-forge-min-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("min.json");
    std::fs::write(
        &path,
        r#"{"quiver": {"vertices": ["v"]}, "objects": {"S": {"simple": "v"}}}"#,
    )
    .unwrap();
    let v = json_of(&cli(&[path.to_str().unwrap(), "detect", "S"]));
    assert_eq!(v["profile"]["kind"], "exceptional");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn wrong_arrow_shape_names_the_arrow() {
    let src = br#"{"quiver": {"vertices": ["1","2"], "arrows": [{"name":"a","source":"1","target":"2"}]},
        "objects": {"M": {"module": {"dims": [2, 1], "arrows": {"a": [["1"]]}}}}}"#;
    match parse(src) {
        Err(e @ WorkspaceError::Schema { .. }) => {
            let msg = e.to_string();
            assert!(msg.starts_with("/objects/M/module/arrows/a"), "{msg}");
            assert!(msg.contains("\"a\""), "{msg}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn kronecker_constructors() {
    let ws = parse(&std::fs::read(fixture("kronecker.json")).unwrap()).unwrap();
    let q = &ws.quiver;
    let m = |a: i64, b: i64| {
        let r = Rep::new(
            q,
            vec![1, 1],
            vec![Matrix::from_ints(&[&[a]]), Matrix::from_ints(&[&[b]])],
        )
        .unwrap();
        DObject::module(q, r).unwrap()
    };
    assert_eq!(ws.object("R0").unwrap(), &m(1, 0));
    assert_eq!(ws.object("R1").unwrap(), &m(1, 1));
    assert_eq!(ws.object("Rinf").unwrap(), &m(0, 1));
    assert_eq!(ws.object("R2").unwrap(), &m(1, 2));
}

fn kronecker_quiver() -> Quiver {
    Quiver::from_indices(2, &[("a", 0, 1), ("b", 0, 1)]).unwrap()
}

/// Dimensions at both vertices, entries of both arrows, and the shift.
type Term = (usize, usize, Vec<i64>, Vec<i64>, i64);

fn arb_term() -> impl Strategy<Value = Term> {
    (0usize..3, 0usize..3).prop_flat_map(|(d0, d1)| {
        let n = d0 * d1;
        (
            Just(d0),
            Just(d1),
            prop::collection::vec(-3i64..=3, n),
            prop::collection::vec(-3i64..=3, n),
            -2i64..=2,
        )
    })
}

fn build(q: &Quiver, terms: &[Term]) -> DObject {
    let mat = |rows: usize, cols: usize, xs: &[i64]| {
        let entries = (0..rows)
            .map(|i| (0..cols).map(|j| Scalar::from_int(xs[i * cols + j])).collect())
            .collect();
        Matrix::from_rows_with_cols(entries, cols).unwrap()
    };
    let terms = terms
        .iter()
        .map(|(d0, d1, a, b, s)| {
            let r = Rep::new(q, vec![*d0, *d1], vec![mat(*d1, *d0, a), mat(*d1, *d0, b)]).unwrap();
            (r, *s)
        })
        .collect();
    DObject::new(q, terms).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rendered_objects_load_back(terms in prop::collection::vec(arb_term(), 0..3)) {
        let q = kronecker_quiver();
        let x = build(&q, &terms);
        let mut def = object(&q, &x);
        def.as_object_mut().unwrap().retain(|k, _| k == "terms");
        let ws = json!({
            "quiver": {"vertices": ["1", "2"], "arrows": [
                {"name": "a", "source": "1", "target": "2"},
                {"name": "b", "source": "1", "target": "2"}]},
            "objects": {"X": def},
        });
        let bytes = serde_json::to_vec(&ws).unwrap();
        let loaded = parse(&bytes).unwrap();
        let y = loaded.object("X").unwrap();
        prop_assert_eq!(y, &x);
        prop_assert_eq!(hom_graded(&q, y, &x).unwrap().dims(), hom_graded(&q, &x, &x).unwrap().dims());
        prop_assert!(is_iso(&q, y, &x, 1).unwrap().is_yes());
    }

    #[test]
    fn parse_never_panics(cut in 0usize..4000, byte in any::<u8>()) {
        let mut bytes = std::fs::read(fixture("tacked-kronecker.json")).unwrap();
        let i = cut % bytes.len();
        bytes[i] = byte;
        let _ = parse(&bytes);
    }
}
