#![no_main]

use libfuzzer_sys::fuzz_target;
use lifts_core::verify::parse_corpus;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(entries) = parse_corpus(text) {
            for e in entries {
                assert!(e.degree > 0);
                let _ = e.build(256);
            }
        }
    }
});
