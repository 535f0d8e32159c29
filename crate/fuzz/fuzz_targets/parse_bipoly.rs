#![no_main]
use galois_param_core::algebra::BiPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(wire) = serde_json::from_slice::<Vec<Vec<String>>>(data) else { return };
    if let Ok(p) = BiPoly::from_wire(&wire) {
        assert_eq!(BiPoly::from_wire(&p.to_wire()).unwrap(), p);
    }
});
