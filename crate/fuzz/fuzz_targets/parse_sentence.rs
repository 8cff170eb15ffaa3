#![no_main]

use libfuzzer_sys::fuzz_target;
use thalg::sentence::{decode, parse_sentence};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = parse_sentence(text) {
        let rendered = s.to_string();
        let back = parse_sentence(&rendered).unwrap();
        assert_eq!(back.to_string(), rendered);
        let _ = decode(&back);
    }
});
