//! Inputs shared by the criterion benchmarks.

use wronski::{Family, Partition, RatPoly, WronskianEngine};

/// Partitions of increasing size for determinant benchmarks.
pub fn partitions() -> Vec<Partition> {
    ["1,3", "1,2,4", "1,2,3,5", "2,2,3,4,6"]
        .iter()
        .map(|s| s.parse().expect("valid partition"))
        .collect()
}

/// The Hermite Wronskian of `lam`, a typical input to root counting.
pub fn hermite_wronskian(lam: &Partition) -> RatPoly {
    WronskianEngine::new(Family::hermite())
        .wronskian_det(lam)
        .expect("Hermite Wronskians exist for every partition")
        .poly
}
