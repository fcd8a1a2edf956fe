//! Shared helpers for the benchmark targets; the interesting code lives in
//! `benches/`.

use zsum_core::{build_family_a, ResidueSet};

/// The family set and its complement at parameter k, ready for kernel
/// benchmarks.
pub fn family_pair(k: usize) -> (ResidueSet, ResidueSet) {
    let a = build_family_a(k).expect("valid k");
    let comp = a.complement();
    (a, comp)
}
