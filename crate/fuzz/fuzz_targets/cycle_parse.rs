#![no_main]

use libfuzzer_sys::fuzz_target;
use lifts_core::perm::Permutation;

fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else { return };
    let degree = first as usize % 64 + 1;
    if let Ok(text) = std::str::from_utf8(rest) {
        if let Ok(p) = Permutation::parse_cycles(text, degree) {
            assert_eq!(p.degree(), degree);
            let again = Permutation::parse_cycles(&p.to_cycle_string(), degree).unwrap();
            assert_eq!(again, p);
        }
    }
});
