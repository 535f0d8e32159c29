#![no_main]
use galois_param_core::groups::{ClassLabel, CycleType};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(ct) = s.parse::<CycleType>() {
            assert_eq!(ct.to_string().parse::<CycleType>().unwrap(), ct);
        }
        let _ = ClassLabel::sn_str(s);
    }
});
