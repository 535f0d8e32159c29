#![no_main]
use galois_param_core::algebra::RatPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = RatPoly::parse_json(s) {
            let again = RatPoly::from_wire(&p.to_wire()).unwrap();
            assert_eq!(again, p);
        }
    }
});
