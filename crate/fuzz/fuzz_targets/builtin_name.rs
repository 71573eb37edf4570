#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(name) = std::str::from_utf8(data) {
        if let Ok(g) = fused_mackey::parse::builtin_group(name, 64) {
            assert!(g.order() <= 64);
        }
    }
});
