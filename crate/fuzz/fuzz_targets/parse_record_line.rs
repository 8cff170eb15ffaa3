#![no_main]

use libfuzzer_sys::fuzz_target;
use thalg::axioms::parse_record_line;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_record_line(text) {
        assert_eq!(parse_record_line(&r.to_line()).unwrap(), r);
    }
});
