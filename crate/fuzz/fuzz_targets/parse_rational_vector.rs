#![no_main]

use libfuzzer_sys::fuzz_target;
use newton_strata::rational::{fmt_vec, parse_rational_vector};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(v) = parse_rational_vector(s) {
            assert_eq!(parse_rational_vector(&fmt_vec(&v)).unwrap(), v);
        }
    }
});
