#![no_main]

use libfuzzer_sys::fuzz_target;
use lifts_core::Cyclotomic;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(x) = text.parse::<Cyclotomic>() {
            let again: Cyclotomic = x.to_string().parse().unwrap();
            assert_eq!(again, x);
        }
    }
});
