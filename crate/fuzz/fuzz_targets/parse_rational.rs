#![no_main]
use galois_param_core::algebra::{format_rational, parse_rational};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(q) = parse_rational(s) {
            // canonical text parses back to the same value
            assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
    }
});
