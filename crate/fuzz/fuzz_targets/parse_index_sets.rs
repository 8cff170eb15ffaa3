#![no_main]

use libfuzzer_sys::fuzz_target;
use thalg::orbit::parse_index_sets;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(sets) = parse_index_sets(text) {
        assert!(sets.iter().flatten().all(|&i| i >= 1));
    }
});
