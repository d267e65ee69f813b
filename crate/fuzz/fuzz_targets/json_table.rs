#![no_main]

use libfuzzer_sys::fuzz_target;
use parity_wilson::numcore::{BParamPolynomial, RationalPolynomial};

fuzz_target!(|data: &[u8]| {
    if let Ok(table) = serde_json::from_slice::<Vec<RationalPolynomial>>(data) {
        let text = serde_json::to_string(&table).unwrap();
        let back: Vec<RationalPolynomial> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, table);
    }
    if let Ok(table) = serde_json::from_slice::<Vec<BParamPolynomial>>(data) {
        let text = serde_json::to_string(&table).unwrap();
        let back: Vec<BParamPolynomial> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, table);
    }
});
