#![no_main]

use libfuzzer_sys::fuzz_target;
use sphere_forge_core::exactlin::Scalar;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(x) = s.parse::<Scalar>() {
            let back: Scalar = x.to_string().parse().expect("display output parses");
            assert_eq!(back, x);
        }
    }
});
