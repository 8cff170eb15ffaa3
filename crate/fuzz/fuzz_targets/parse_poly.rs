#![no_main]

use libfuzzer_sys::fuzz_target;
use thalg::parse::parse_poly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_poly(text) {
        assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
    }
});
