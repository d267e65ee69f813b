#![no_main]

use libfuzzer_sys::fuzz_target;
use parity_wilson::config::RunConfig;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(cfg) = RunConfig::from_text(s) {
            assert!(cfg.quad_check_tol > 0.0 && cfg.rel_tol > 0.0);
        }
    }
});
