#![no_main]

use libfuzzer_sys::fuzz_target;
use lifts_core::verify::{parse_report, render_structured};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(records) = parse_report(text) {
            let again = parse_report(&render_structured(&records)).unwrap();
            assert_eq!(again, records);
        }
    }
});
