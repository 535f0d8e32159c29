#![no_main]
use galois_param_core::numbertheory::{legendre_solvable, TernaryForm};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(f) = TernaryForm::parse_json(s) {
            let _ = legendre_solvable(&f);
        }
    }
});
