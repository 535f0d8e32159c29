#![no_main]
use galois_param_core::criteria::parse_small_group;
use galois_param_core::groups::Group;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = Group::parse_json(s);
        let _ = parse_small_group(s);
    }
});
