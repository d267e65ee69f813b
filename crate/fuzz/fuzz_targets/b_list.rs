#![no_main]

use libfuzzer_sys::fuzz_target;
use parity_wilson::config::parse_b_list;
use parity_wilson::wilson::WilsonFamily;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(values) = parse_b_list(s) else { return };
    assert!(!values.is_empty());
    for b in values {
        // family construction either succeeds or reports an error
        if let Ok(f) = WilsonFamily::case_b(b) {
            let _ = f.degenerate_root();
        }
    }
});
