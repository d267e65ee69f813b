#![no_main]

use libfuzzer_sys::fuzz_target;
use parity_wilson::numcore::Rational;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = s.parse::<Rational>() {
        let back: Rational = r.to_string().parse().expect("display output must parse");
        assert_eq!(back, r);
    }
});
