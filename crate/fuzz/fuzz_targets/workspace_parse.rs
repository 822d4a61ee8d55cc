#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // loading must either fail cleanly or yield a workspace whose probes resolve
    if let Ok(ws) = sphere_forge_cli::parse(data) {
        for name in &ws.probes {
            assert!(ws.object(name).is_some());
        }
    }
});
