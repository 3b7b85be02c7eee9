//! Shared fixtures for the benchmarks.

use num_bigint::BigInt;
use sgdigit::Submonoid;

/// A spread of integers with many digits in small bases.
pub fn wide_values(count: usize) -> Vec<BigInt> {
    (0..count)
        .map(|i| BigInt::from(7u32).pow(i as u32 % 90) * (i as i64 - count as i64 / 2))
        .collect()
}

pub fn sample_monoids() -> Vec<Submonoid> {
    [
        &[3u64, 5, 7][..],
        &[5, 7, 9, 11, 13],
        &[8, 13, 15, 17, 18, 20, 22, 27],
        &[11, 13, 17, 19],
    ]
    .iter()
    .map(|g| Submonoid::from_generators(g.iter().copied()).expect("small table"))
    .collect()
}
