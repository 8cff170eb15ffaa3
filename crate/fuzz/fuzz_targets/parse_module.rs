#![no_main]

use libfuzzer_sys::fuzz_target;
use thalg::orbit::parse_module;

fuzz_target!(|data: &[u8]| {
    if data.len() > 2048 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_module(text) {
        assert!(!m.elements().is_empty());
    }
});
