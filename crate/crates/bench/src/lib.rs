//! Inputs shared by the benchmarks.

use ringcode_core::catalog::get_fixture;
use ringcode_core::{LinearCode, RingMatrix, RingSpec};

pub fn octocode() -> LinearCode {
    LinearCode::new(get_fixture("octocode_z8").expect("built-in fixture").matrix().expect("matrix").clone())
}

/// A deterministic `rows x n` generator over `Z_{p^s}` with no zero pattern,
/// so standard-form reduction has real work to do.
pub fn dense_code(p: u64, s: u32, n: usize, rows: usize) -> LinearCode {
    let spec = RingSpec::new(p, s).expect("valid ring");
    let m = spec.modulus();
    let entries: Vec<Vec<u64>> =
        (0..rows).map(|i| (0..n).map(|j| (7 * i as u64 + 3 * j as u64 * j as u64 + 1) % m).collect()).collect();
    LinearCode::new(RingMatrix::new(spec, n, &entries).expect("valid matrix"))
}
