//! Replays the checked-in fuzz seed corpora through the same entry points
//! the fuzz targets use, so they run on stable toolchains too.

use std::path::PathBuf;

use sphere_forge_cli::verify::Suite;
use sphere_forge_cli::workspace::parse_kind;
use sphere_forge_core::exactlin::Scalar;
use sphere_forge_core::nbhd::Flavor;

fn corpus(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut files: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(!files.is_empty(), "{} is empty", dir.display());
    files.into_iter().map(|p| std::fs::read(p).unwrap()).collect()
}

#[test]
fn workspace_seeds() {
    let mut loaded = 0;
    for data in corpus("workspace_parse") {
        if let Ok(ws) = sphere_forge_cli::parse(&data) {
            assert!(ws.probes.iter().all(|n| ws.object(n).is_some()));
            loaded += 1;
        }
    }
    assert!(loaded >= 4);
}

#[test]
fn scalar_seeds() {
    for data in corpus("scalar_parse") {
        let Ok(s) = std::str::from_utf8(&data) else { continue };
        if let Ok(x) = s.parse::<Scalar>() {
            assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
        }
    }
}

#[test]
fn name_seeds() {
    for data in corpus("name_parse") {
        let s = String::from_utf8(data).unwrap();
        if let Ok(f) = s.parse::<Flavor>() {
            assert_eq!(f.name(), s);
        }
        if let Ok(x) = s.parse::<Suite>() {
            assert_eq!(x.name(), s);
        }
        let _ = parse_kind(&s);
    }
}
