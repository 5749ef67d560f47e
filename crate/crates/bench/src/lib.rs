//! Benchmark workloads.

use klm_core::{build_rho_uniform, coeff_rho, count_skyt, enumerate_skyt, kl_poly, BigInt, IntPoly, RhoUniformParams};

/// KL polynomial of `U_{m,d}(rho)` through the lattice-of-flats recurrence.
/// The recurrence is memoized process-wide, so repeated calls mostly measure lookups.
pub fn oracle(m: usize, d: usize, rho: usize) -> IntPoly {
    let p = RhoUniformParams::new(m, d, rho).expect("valid parameters");
    kl_poly(&build_rho_uniform(p).expect("valid parameters"))
}

/// Every coefficient from the tableau formula.
pub fn tableau(m: usize, d: usize, rho: usize) -> Vec<BigInt> {
    let p = RhoUniformParams::new(m, d, rho).expect("valid parameters");
    p.coefficient_range()
        .map(|i| coeff_rho(m, d, i, rho).expect("in range"))
        .collect()
}

pub fn skew_counts(side: i64, i_max: i64) -> BigInt {
    (1..=i_max).map(|i| count_skyt(side, i, side)).sum()
}

pub fn enumerate_count(a: usize, i: usize, b: usize) -> usize {
    enumerate_skyt(a, i, b).expect("fillable shape").len()
}
