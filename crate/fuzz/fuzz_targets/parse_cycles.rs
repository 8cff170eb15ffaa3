#![no_main]

use libfuzzer_sys::fuzz_target;
use thalg::perm::parse_cycles;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(p) = parse_cycles(text, n as usize % 16 + 1) {
        assert_eq!(parse_cycles(&p.to_string(), p.degree()).unwrap(), p);
    }
});
