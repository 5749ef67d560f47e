//! Sweeps that cross-check closed forms, tableau counts and the oracle over parameter grids.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::closed_forms::{
    build_rho_uniform, char_poly_rho, classify_minor, coeff_rho, coeff_uniform_klum,
    coeff_uniform_tableau, expected_flats, MinorKind,
};
use crate::error::Error;
use crate::identities::{default_identity_reports, gf_truncation_suite, IdentityReport};
use crate::matroid::{char_poly, flats, is_isomorphic, kl_poly, matroid_from_bases, GroundSubset};
use crate::params::RhoUniformParams;
use crate::tableaux::{
    count_skyt, count_skyt_backtracking, count_skyt_rho_direct, count_syt, count_syt_backtracking,
    enumerate_skyt, involution_rotate, SkewShape,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    RhoCoeffs,
    UniformCoeffs,
    Symmetry,
    Charpoly,
    Minors,
    Flats,
    Identities,
    Gf,
    Monotonicity,
    Counting,
    Catalan,
    Exchange,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::RhoCoeffs,
        Suite::UniformCoeffs,
        Suite::Symmetry,
        Suite::Charpoly,
        Suite::Minors,
        Suite::Flats,
        Suite::Identities,
        Suite::Gf,
        Suite::Monotonicity,
        Suite::Counting,
        Suite::Catalan,
        Suite::Exchange,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RhoCoeffs => "rho-coeffs",
            Suite::UniformCoeffs => "uniform-coeffs",
            Suite::Symmetry => "symmetry",
            Suite::Charpoly => "charpoly",
            Suite::Minors => "minors",
            Suite::Flats => "flats",
            Suite::Identities => "identities",
            Suite::Gf => "gf",
            Suite::Monotonicity => "monotonicity",
            Suite::Counting => "counting",
            Suite::Catalan => "catalan",
            Suite::Exchange => "exchange",
        }
    }

    /// Largest ground set swept when no override is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Charpoly | Suite::Flats => 10,
            Suite::Minors | Suite::Exchange => 8,
            _ => 9,
        }
    }

    pub fn run(self, max_n: Option<usize>) -> SuiteReport {
        let n = max_n.unwrap_or(self.default_max_n());
        let reports = match self {
            Suite::RhoCoeffs => vec![rho_coeffs(n)],
            Suite::UniformCoeffs => vec![uniform_coeffs(n)],
            Suite::Symmetry => symmetry(),
            Suite::Charpoly => vec![charpoly(n)],
            Suite::Minors => vec![minors(n)],
            Suite::Flats => vec![flats_structure(n)],
            Suite::Identities => default_identity_reports(),
            Suite::Gf => vec![gf_truncation_suite(4, 10)],
            Suite::Monotonicity => vec![monotonicity(n)],
            Suite::Counting => counting(),
            Suite::Catalan => vec![catalan()],
            Suite::Exchange => exchange(n),
        };
        SuiteReport::new(self.name(), reports)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub reports: Vec<IdentityReport>,
}

impl SuiteReport {
    fn new(suite: &str, reports: Vec<IdentityReport>) -> Self {
        Self {
            suite: suite.to_string(),
            passed: reports.iter().all(|r| r.passed),
            reports,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
struct CoeffPoint {
    m: usize,
    d: usize,
    rho: usize,
    i: usize,
}

/// `(m, d, rho, i)` with `m + d <= max_n` and `i` a possibly nonzero coefficient index.
fn coefficient_points(max_n: usize, rho_zero_only: bool) -> Vec<CoeffPoint> {
    RhoUniformParams::all_up_to(max_n)
        .into_iter()
        .filter(|p| !rho_zero_only || p.rho == 0)
        .flat_map(|p| {
            let top = if p.d == 0 { 1 } else { p.coefficient_range().end };
            (0..top).map(move |i| CoeffPoint { m: p.m, d: p.d, rho: p.rho, i })
        })
        .collect()
}

fn oracle_coeff(p: RhoUniformParams, i: usize) -> BigInt {
    kl_poly(&build_rho_uniform(p).expect("valid parameters")).coeff(i)
}

/// Formula, filtered enumeration and oracle agree on every coefficient of `U_{m,d}(rho)`.
pub fn rho_coeffs(max_n: usize) -> IdentityReport {
    let pts = coefficient_points(max_n, false);
    IdentityReport::run("rho_coeffs", json!({"m + d": format!("<= {max_n}")}), &pts, |q| {
        let p = RhoUniformParams::new(q.m, q.d, q.rho).unwrap();
        let formula = coeff_rho(q.m, q.d, q.i, q.rho).unwrap();
        formula == count_skyt_rho_direct(q.m, q.d, q.i, q.rho).unwrap() && formula == oracle_coeff(p, q.i)
    })
}

/// Tableau count, the quoted hypergeometric sum and the oracle agree for uniform matroids.
pub fn uniform_coeffs(max_n: usize) -> IdentityReport {
    let pts = coefficient_points(max_n, true);
    IdentityReport::run("uniform_coeffs", json!({"m + d": format!("<= {max_n}"), "rho": 0}), &pts, |q| {
        let p = RhoUniformParams::uniform(q.m, q.d).unwrap();
        let tableau = coeff_uniform_tableau(q.m, q.d, q.i).unwrap();
        coeff_uniform_klum(q.m, q.d, q.i).is_ok_and(|k| k == tableau) && tableau == oracle_coeff(p, q.i)
    })
}

#[derive(Debug, Clone, Copy, Serialize)]
struct ShapePoint {
    a: usize,
    i: usize,
    b: usize,
}

pub const SHAPE_MAX_SIDE: usize = 6;
pub const SHAPE_MAX_I: usize = 4;
pub const SHAPE_MAX_CELLS: usize = 14;

/// `a, b <= 6`, `1 <= i <= 4`, at most 14 cells.
fn shape_points() -> Vec<ShapePoint> {
    let mut pts = Vec::new();
    for a in 0..=SHAPE_MAX_SIDE {
        for i in 1..=SHAPE_MAX_I {
            for b in 0..=SHAPE_MAX_SIDE {
                if a + 2 * i + b <= SHAPE_MAX_CELLS + 2 {
                    pts.push(ShapePoint { a, i, b });
                }
            }
        }
    }
    pts
}

fn shape_grid() -> serde_json::Value {
    json!({"a": [0, SHAPE_MAX_SIDE], "i": [1, SHAPE_MAX_I], "b": [0, SHAPE_MAX_SIDE], "cells": format!("<= {SHAPE_MAX_CELLS}")})
}

pub fn symmetry() -> Vec<IdentityReport> {
    let pts = shape_points();
    let counts = IdentityReport::run("skyt_count_symmetry", shape_grid(), &pts, |q| {
        let (a, i, b) = (q.a as i64, q.i as i64, q.b as i64);
        count_skyt(a, i, b) == count_skyt(b, i, a)
    });
    let rotation = IdentityReport::run("rotation_involution", shape_grid(), &pts, |q| {
        let shape = SkewShape::new(q.a, q.i, q.b).unwrap();
        enumerate_skyt(q.a, q.i, q.b).unwrap().iter().all(|f| {
            let g = involution_rotate(f);
            g.is_legal() && g.shape() == shape.rotated() && &involution_rotate(&g) == f
        })
    });
    let coeff_pts: Vec<CoeffPoint> = coefficient_points(9, true)
        .into_iter()
        .filter(|q| q.i >= 1 && q.d >= 2 * q.i + 1)
        .collect();
    let coeffs = IdentityReport::run(
        "coefficient_symmetry",
        json!({"m + d": "<= 9", "rho": 0, "partner": "(d - 2i, m + 2i, i)"}),
        &coeff_pts,
        |q| {
            let (m2, d2) = (q.d - 2 * q.i, q.m + 2 * q.i);
            coeff_uniform_tableau(q.m, q.d, q.i).unwrap() == coeff_uniform_tableau(m2, d2, q.i).unwrap()
        },
    );
    vec![counts, rotation, coeffs]
}

/// The coefficient formula against the Mobius-function oracle, plus `chi(1) = 0`.
pub fn charpoly(max_n: usize) -> IdentityReport {
    let pts: Vec<RhoUniformParams> = RhoUniformParams::all_up_to(max_n)
        .into_iter()
        .filter(|p| p.d >= 1)
        .collect();
    IdentityReport::run("charpoly", json!({"m + d": format!("<= {max_n}"), "d": ">= 1"}), &pts, |&p| {
        let chi = char_poly_rho(p).unwrap();
        chi.eval(&BigInt::one()).is_zero() && char_poly(&build_rho_uniform(p).unwrap()).is_ok_and(|o| o == chi)
    })
}

#[derive(Debug, Clone, Copy, Serialize)]
struct MinorPoint {
    #[serde(flatten)]
    p: RhoUniformParams,
    flat: GroundSubset,
    kind: MinorKind,
}

/// Every localization and contraction at every flat is isomorphic to its classified type.
pub fn minors(max_n: usize) -> IdentityReport {
    let mut pts = Vec::new();
    for p in RhoUniformParams::all_up_to(max_n) {
        let m = build_rho_uniform(p).unwrap();
        for (flat, _, _) in flats(&m).iter() {
            for kind in [MinorKind::Localization, MinorKind::Contraction] {
                pts.push(MinorPoint { p, flat, kind });
            }
        }
    }
    IdentityReport::run("minors", json!({"m + d": format!("<= {max_n}")}), &pts, |q| {
        let m = build_rho_uniform(q.p).unwrap();
        let actual = match q.kind {
            MinorKind::Localization => m.localization(q.flat),
            MinorKind::Contraction => m.contraction(q.flat),
        };
        let claimed = classify_minor(q.p, q.flat, q.kind).and_then(|t| t.build());
        match (claimed, actual) {
            (Ok(c), Ok(a)) => is_isomorphic(&c, &a).unwrap_or(false),
            _ => false,
        }
    })
}

pub fn flats_structure(max_n: usize) -> IdentityReport {
    let pts = RhoUniformParams::all_up_to(max_n);
    IdentityReport::run("flats", json!({"m + d": format!("<= {max_n}")}), &pts, |&p| {
        let lattice = flats(&build_rho_uniform(p).unwrap());
        let actual: Vec<GroundSubset> = lattice.iter().map(|(f, _, _)| f).collect();
        expected_flats(p).is_ok_and(|e| e == actual)
    })
}

/// `0 <= c(rho) <= c(rho - 1)` on oracle coefficients, for every `rho >= 1`.
pub fn monotonicity(max_n: usize) -> IdentityReport {
    let pts: Vec<CoeffPoint> = coefficient_points(max_n, false)
        .into_iter()
        .filter(|q| q.rho >= 1)
        .collect();
    IdentityReport::run("monotonicity", json!({"m + d": format!("<= {max_n}"), "rho": ">= 1"}), &pts, |q| {
        let here = oracle_coeff(RhoUniformParams::new(q.m, q.d, q.rho).unwrap(), q.i);
        let prev = oracle_coeff(RhoUniformParams::new(q.m, q.d, q.rho - 1).unwrap(), q.i);
        BigInt::zero() <= here && here <= prev
    })
}

#[derive(Debug, Clone, Copy, Serialize)]
struct SytPoint {
    a: usize,
    i: usize,
    k: usize,
}

pub const SYT_MAX_CELLS: usize = 13;

/// Inclusion-exclusion and hook-length counts against backtracking.
pub fn counting() -> Vec<IdentityReport> {
    let pts = shape_points();
    let skyt = IdentityReport::run("skyt_counting_lemma", shape_grid(), &pts, |q| {
        count_skyt(q.a as i64, q.i as i64, q.b as i64) == count_skyt_backtracking(q.a, q.i, q.b).unwrap()
    });
    let mut syt_pts = Vec::new();
    for a in 1..=SYT_MAX_CELLS {
        for i in 0..=SYT_MAX_CELLS / 2 {
            for k in 0..=SYT_MAX_CELLS {
                if a + 2 * i + k <= SYT_MAX_CELLS && (i == 0 || a >= 2) {
                    syt_pts.push(SytPoint { a, i, k });
                }
            }
        }
    }
    let syt = IdentityReport::run("syt_hook_length", json!({"cells": format!("<= {SYT_MAX_CELLS}")}), &syt_pts, |q| {
        count_syt(q.a, q.i, q.k).unwrap() == count_syt_backtracking(q.a, q.i, q.k).unwrap()
    });
    vec![skyt, syt]
}

/// `C_0, ..., C_n` from `C_{j+1} = sum_k C_k C_{j-k}`.
pub fn catalan_numbers(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for j in 0..n {
        let next = (0..=j).map(|k| &c[k] * &c[j - k]).sum();
        c.push(next);
    }
    c
}

/// `#SkYT(2, i, 2)` is the Catalan number `C_{i+1}` for `i = 1..=6`.
pub fn catalan() -> IdentityReport {
    let cat = catalan_numbers(7);
    let pts: Vec<usize> = (1..=6).collect();
    IdentityReport::run("catalan", json!({"i": [1, 6]}), &pts, |&i| {
        let count = count_skyt(2, i as i64, 2);
        count == cat[i + 1] && count == count_skyt_backtracking(2, i, 2).unwrap()
    })
}

/// All families of pairwise-disjoint `d`-subsets of `[n]`, including the empty family.
pub fn disjoint_families(n: usize, d: usize) -> Vec<Vec<GroundSubset>> {
    let blocks: Vec<GroundSubset> = (0u32..1 << n)
        .map(GroundSubset::from_bits)
        .filter(|s| s.len() == d)
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_families(&blocks, 0, GroundSubset::EMPTY, &mut current, &mut out);
    out
}

fn extend_families(
    blocks: &[GroundSubset],
    from: usize,
    used: GroundSubset,
    current: &mut Vec<GroundSubset>,
    out: &mut Vec<Vec<GroundSubset>>,
) {
    out.push(current.clone());
    for k in from..blocks.len() {
        if blocks[k].intersection(used).is_empty() {
            current.push(blocks[k]);
            extend_families(blocks, k + 1, used.union(blocks[k]), current, out);
            current.pop();
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct FamilyPoint {
    n: usize,
    d: usize,
    removed: Vec<GroundSubset>,
}

/// Basis systems with a violation that the validator must reject, each with its witness.
pub fn violating_families() -> Vec<(usize, Vec<GroundSubset>, Error)> {
    let s = |e: &[usize]| e.iter().copied().collect::<GroundSubset>();
    let pairs_of_4 = |drop: &[GroundSubset]| -> Vec<GroundSubset> {
        (0u32..16)
            .map(GroundSubset::from_bits)
            .filter(|b| b.len() == 2 && !drop.contains(b))
            .collect()
    };
    vec![
        (
            4,
            vec![s(&[1, 2]), s(&[3, 4])],
            Error::ExchangeAxiomViolation { basis: s(&[1, 2]), other: s(&[3, 4]), element: 1 },
        ),
        // Two overlapping blocks removed from C([4], 2).
        (
            4,
            pairs_of_4(&[s(&[1, 2]), s(&[2, 3])]),
            Error::ExchangeAxiomViolation { basis: s(&[2, 4]), other: s(&[1, 3]), element: 4 },
        ),
    ]
}

/// Accepts `C([n], d)` minus every disjoint family (except one removing every basis)
/// and rejects the violating families with the expected witness.
pub fn exchange(max_n: usize) -> Vec<IdentityReport> {
    let mut pts = Vec::new();
    for n in 2..=max_n {
        for d in 2..=n {
            for removed in disjoint_families(n, d) {
                pts.push(FamilyPoint { n, d, removed });
            }
        }
    }
    let accepts = IdentityReport::run(
        "exchange_accepts_disjoint_removals",
        json!({"n": [2, max_n], "d": ">= 2"}),
        &pts,
        |q| {
            let bases: Vec<GroundSubset> = (0u32..1 << q.n)
                .map(GroundSubset::from_bits)
                .filter(|s| s.len() == q.d && !q.removed.contains(s))
                .collect();
            match matroid_from_bases(q.n, bases.iter().copied()) {
                Ok(m) => m.rank() == q.d,
                Err(e) => bases.is_empty() && e == Error::EmptyBases,
            }
        },
    );
    let bad = violating_families();
    let idx: Vec<usize> = (0..bad.len()).collect();
    let rejects = IdentityReport::run("exchange_rejects_violations", json!({"families": bad.len()}), &idx, |&k| {
        let (n, bases, want) = &bad[k];
        matroid_from_bases(*n, bases.iter().copied()).err().as_ref() == Some(want)
    });
    vec![accepts, rejects]
}

/// Every suite in order, each at its default size unless `max_n` overrides it.
pub fn run_all(max_n: Option<usize>) -> Vec<SuiteReport> {
    Suite::ALL.into_iter().map(|s| s.run(max_n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn catalan_sequence() {
        let c: Vec<i64> = catalan_numbers(7).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn disjoint_family_counts() {
        // Matchings in K_4: empty, 6 single edges, 3 perfect matchings.
        assert_eq!(disjoint_families(4, 2).len(), 10);
        assert_eq!(disjoint_families(3, 3).len(), 2);
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::RhoCoeffs, Suite::UniformCoeffs, Suite::Charpoly, Suite::Minors, Suite::Flats, Suite::Monotonicity, Suite::Exchange] {
            let r = s.run(Some(5));
            assert!(r.passed, "{:?}", r);
        }
        assert!(Suite::Catalan.run(None).passed);
    }
}
