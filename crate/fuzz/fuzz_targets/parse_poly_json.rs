#![no_main]

use libfuzzer_sys::fuzz_target;
use newton_strata::newton::parse_poly_json;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = parse_poly_json(s) {
            if let Ok(poly) = p.newton_polygon() {
                assert!(poly.is_valid());
                assert_eq!(poly.n, p.n);
            }
        }
    }
});
