#![no_main]
use galois_param_core::extensions::ExtensionDescriptor;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(e) = ExtensionDescriptor::parse_json(s) {
            // anything accepted must survive a round trip
            assert_eq!(ExtensionDescriptor::parse_json(&e.to_json()).unwrap(), e);
        }
    }
});
