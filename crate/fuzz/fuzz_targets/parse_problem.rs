#![no_main]

use libfuzzer_sys::fuzz_target;
use thalg::embedding::parse_problem;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(e) = parse_problem(text) {
        assert!(e.phi.is_hom(&e.g, &e.a) && e.alpha.is_hom(&e.b, &e.a));
    }
});
