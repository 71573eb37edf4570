#![no_main]

use std::sync::{Arc, OnceLock};

use fused_mackey::FiniteGroup;
use libfuzzer_sys::fuzz_target;

fn s3() -> &'static Arc<FiniteGroup> {
    static G: OnceLock<Arc<FiniteGroup>> = OnceLock::new();
    G.get_or_init(|| Arc::new(FiniteGroup::builtin("S3").unwrap()))
}

fuzz_target!(|data: &[u8]| {
    if data.len() > 256 {
        return;
    }
    if let Ok(expr) = std::str::from_utf8(data) {
        if let Ok(x) = fused_mackey::parse::parse_gset(s3(), expr) {
            let orbit_total: usize = x.orbits().iter().map(|o| o.points.len()).sum();
            assert_eq!(orbit_total, x.size());
        }
    }
});
