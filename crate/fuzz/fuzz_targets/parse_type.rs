#![no_main]

use libfuzzer_sys::fuzz_target;
use newton_strata::TypeSpec;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(t) = s.parse::<TypeSpec>() {
            assert_eq!(t.to_string().parse::<TypeSpec>().unwrap(), t);
        }
    }
});
