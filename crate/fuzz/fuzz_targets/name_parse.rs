#![no_main]

use libfuzzer_sys::fuzz_target;
use sphere_forge_cli::verify::Suite;
use sphere_forge_cli::workspace::parse_kind;
use sphere_forge_core::nbhd::Flavor;

fuzz_target!(|data: &str| {
    if let Ok(f) = data.parse::<Flavor>() {
        assert_eq!(f.name(), data);
    }
    if let Ok(s) = data.parse::<Suite>() {
        assert_eq!(s.name(), data);
    }
    let _ = parse_kind(data);
});
