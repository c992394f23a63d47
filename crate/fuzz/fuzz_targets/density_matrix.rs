#![no_main]

use ergobound::{eigens, DensityOperator};
use libfuzzer_sys::fuzz_target;
use nalgebra::DMatrix;
use num_complex::Complex64;

// First byte picks the dimension (1..=8); the rest is read as little-endian
// f64 pairs (re, im), row-major.
fuzz_target!(|data: &[u8]| {
    let Some((&d, rest)) = data.split_first() else { return };
    let dim = (d % 8) as usize + 1;
    let needed = dim * dim * 16;
    if rest.len() < needed {
        return;
    }
    let num = |k: usize| f64::from_le_bytes(rest[8 * k..8 * k + 8].try_into().unwrap());
    let m = DMatrix::from_fn(dim, dim, |i, j| {
        let k = 2 * (i * dim + j);
        Complex64::new(num(k), num(k + 1))
    });
    if let Ok(rho) = DensityOperator::new(m) {
        let values = eigens(&rho);
        assert!(values.iter().all(|v| (0.0..=1.0).contains(v)));
    }
});
