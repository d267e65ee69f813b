#![no_main]

use libfuzzer_sys::fuzz_target;
use parity_wilson::lorentz::RepLabel;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    match s.parse::<RepLabel>() {
        Ok(RepLabel::Spin(a, b)) => {
            let again: RepLabel = format!("{a},{b}").parse().expect("spins print in parseable form");
            assert_eq!(again, RepLabel::Spin(a, b));
        }
        Ok(RepLabel::Vector) | Err(_) => {}
    }
});
