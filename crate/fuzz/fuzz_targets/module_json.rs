#![no_main]

use std::sync::{Arc, OnceLock};

use fused_mackey::algebra::build_algebra;
use fused_mackey::{AlgebraData, FiniteGroup};
use libfuzzer_sys::fuzz_target;

fn alg() -> &'static AlgebraData {
    static A: OnceLock<AlgebraData> = OnceLock::new();
    A.get_or_init(|| build_algebra(&Arc::new(FiniteGroup::builtin("C2").unwrap())))
}

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(m) = fused_mackey::parse::parse_module_json(alg(), text) {
            m.check(alg()).unwrap();
        }
    }
});
