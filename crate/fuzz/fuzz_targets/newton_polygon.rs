#![no_main]

use libfuzzer_sys::fuzz_target;
use newton_strata::newton::{gl_cycle_type, gl_newton_polygon};

// one byte per coefficient; 0xff is a zero coefficient
fuzz_target!(|data: &[u8]| {
    let orders: Vec<Option<i64>> = data
        .iter()
        .take(64)
        .map(|&b| (b != 0xff).then(|| b as i64 - 64))
        .collect();
    if let Ok(poly) = gl_newton_polygon(&orders) {
        assert!(poly.is_valid());
        assert_eq!(poly.n, orders.len());
        assert_eq!(gl_cycle_type(&poly).iter().sum::<usize>(), poly.n);
    }
});
