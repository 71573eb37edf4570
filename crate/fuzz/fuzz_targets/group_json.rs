#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(g) = fused_mackey::parse::parse_group_json(text, 64) {
            assert!(g.order() <= 64);
            g.check_axioms().unwrap();
        }
    }
});
