//! Exact checks of the auxiliary counting, binomial, integral and series identities.
//!
//! Every `check_*` function evaluates both sides in exact arithmetic and
//! returns the verdict; `*_suite` functions sweep a default grid and
//! summarize the outcome as an [`IdentityReport`].

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::{binomial, factorial, rat, rat_int, rising, sign, BiSeries, Rational};
use crate::closed_forms::build_rho_uniform;
use crate::matroid::kl_poly;
use crate::params::RhoUniformParams;
use crate::tableaux::{count_overline_skyt, count_skyt, count_syt};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub grid: Value,
    pub checked: usize,
    pub failed: usize,
    pub passed: bool,
    pub counterexample: Option<Value>,
}

impl IdentityReport {
    /// Evaluates `check` on every point (in parallel) and keeps the first failure in grid order.
    pub fn run<P, F>(identity: &str, grid: Value, points: &[P], check: F) -> Self
    where
        P: Serialize + Sync,
        F: Fn(&P) -> bool + Sync,
    {
        let verdicts: Vec<bool> = points.par_iter().map(&check).collect();
        let failed = verdicts.iter().filter(|&&ok| !ok).count();
        let counterexample = verdicts
            .iter()
            .position(|&ok| !ok)
            .map(|k| serde_json::to_value(&points[k]).expect("grid points serialize"));
        Self {
            identity: identity.to_string(),
            grid,
            checked: points.len(),
            failed,
            passed: failed == 0,
            counterexample,
        }
    }
}

impl std::fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({} points", self.identity, self.checked)?;
        if let Some(c) = &self.counterexample {
            write!(f, ", {} failed, first at {c}", self.failed)?;
        }
        write!(f, ")")
    }
}

fn skyt(a: i64, k: i64, b: i64) -> BigInt {
    count_skyt(a, k, b)
}

/// `#SYT(m+1, k, d-2k-p-1) = sum_{j=0}^{d-2k-1} (-1)^{d-1+j} C(m+d-p, j-p) #SkYT(m+1, k, d-j-2k+1)`.
pub fn check_syt_dual(m: i64, k: i64, d: i64, p: i64) -> bool {
    let tail = d - 2 * k - p - 1;
    if m < 1 || k < 0 || p < 0 || tail < 0 {
        return false;
    }
    let lhs = count_syt((m + 1) as usize, k as usize, tail as usize).expect("a >= 2");
    let rhs: BigInt = (0..=d - 2 * k - 1)
        .map(|j| sign(d - 1 + j) * binomial(m + d - p, j - p) * skyt(m + 1, k, d - j - 2 * k + 1))
        .sum();
    lhs == rhs
}

/// `#SYT(2, k, d-2k-p-1) = sum_j (-1)^{d-1+j} C(mshift+d-p, j-p) #overline-SkYT(k, d-j-2k+1)`.
///
/// Holds for `mshift = 0`, the form in which the count is used; other shifts
/// are evaluated as stated.
pub fn check_barskyt_dual(k: i64, d: i64, p: i64, mshift: i64) -> bool {
    let tail = d - 2 * k - p - 1;
    if k < 1 || p < 0 || mshift < 0 || tail < 0 {
        return false;
    }
    let lhs = count_syt(2, k as usize, tail as usize).expect("a = 2");
    let rhs: BigInt = (0..=d - 2 * k - 1)
        .map(|j| {
            sign(d - 1 + j) * binomial(mshift + d - p, j - p) * count_overline_skyt(k, d - j - 2 * k + 1)
        })
        .sum();
    lhs == rhs
}

/// Double sum over `j, k` of signed binomials weighted by `weight(k, b)`, where
/// `b = d - j - 2k + 1` and the `j`-binomial has top `top`.
fn weighted_double_sum(d: i64, i: i64, k_lo: i64, top: i64, weight: impl Fn(i64, i64) -> BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..d {
        let outer = binomial(top, j);
        for k in k_lo..=i {
            let c = binomial(j, j - i + k);
            if c.is_zero() {
                continue;
            }
            acc += sign(j - i + k) * c * &outer * weight(k, d - j - 2 * k + 1);
        }
    }
    acc
}

/// `0 = (-1)^{d-i} C(m+d, d-i) + sum_{j<d} sum_{k<=i} (-1)^{j-i+k} C(j, j-i+k) C(m+d, j) #SkYT(m+1, k, d-j-2k+1)`.
pub fn check_skyt_identity(m: i64, d: i64, i: i64) -> bool {
    if i < 1 || m < 1 {
        return false;
    }
    let lead = sign(d - i) * binomial(m + d, d - i);
    let sum = weighted_double_sum(d, i, 0, m + d, |k, b| skyt(m + 1, k, b));
    (lead + sum).is_zero()
}

/// Left side of the overline analogue: `(-1)^{d-i-1} i C(d, i+1) + sum_{j<d} sum_{1<=k<=i} ...`.
pub fn skytbar_identity_lhs(d: i64, i: i64) -> BigInt {
    let lead = sign(d - i - 1) * i * binomial(d, i + 1);
    lead + weighted_double_sum(d, i, 1, d, count_overline_skyt)
}

/// The overline analogue equals 0 for `i > 1` and `(-1)^{d-2}` for `i = 1`.
pub fn check_skytbar_identity(d: i64, i: i64) -> bool {
    if i < 1 {
        return false;
    }
    let rhs = if i == 1 { BigInt::from(sign(d - 2)) } else { BigInt::zero() };
    skytbar_identity_lhs(d, i) == rhs
}

/// `int_0^{-1} x^a (1+x)^b dx = (-1)^{a+1} b! / ((a+1)(a+2)...(a+b+1))`, the left side
/// integrated termwise after expanding `(1+x)^b`.
pub fn check_integral_identity(a: i64, b: i64) -> bool {
    if a < 1 || b < 1 {
        return false;
    }
    let lhs: Rational = (0..=b)
        .map(|t| {
            let e = a + t + 1;
            rat(binomial(b, t) * sign(e), e)
        })
        .sum();
    let rhs = rat(factorial(b) * sign(a + 1), rising(a + 1, a + b + 1));
    lhs == rhs
}

/// `C(m+d, d-i) (m+d-i) (m-1)! (d-i)! i! / (m+d)! = sum_{k<=i} (-1)^k C(i,k) (d-i-k)/(m+k)`.
pub fn check_altsum_bin(m: i64, d: i64, i: i64) -> bool {
    if m < 1 || i < 0 || d < i {
        return false;
    }
    let lhs = rat(
        binomial(m + d, d - i) * (m + d - i) * factorial(m - 1) * factorial(d - i) * factorial(i),
        factorial(m + d),
    );
    let rhs: Rational = (0..=i)
        .map(|k| rat(binomial(i, k) * sign(k) * (d - i - k), m + k))
        .sum();
    lhs == rhs
}

/// `i C(d, i+1) i! (d-i+1)! / d! = sum_{1<=k<=i} (-1)^{k+1} (d-i+k+1)(d-k-i)/(k+1) C(i,k)`,
/// which holds for `i >= 2`.
pub fn check_altsum_bin_bar(d: i64, i: i64) -> bool {
    if i < 0 || d < i {
        return false;
    }
    let lhs = rat(binomial(d, i + 1) * i * factorial(i) * factorial(d - i + 1), factorial(d));
    let rhs: Rational = (1..=i)
        .map(|k| rat(binomial(i, k) * sign(k + 1) * (d - i + k + 1) * (d - k - i), k + 1))
        .sum();
    lhs == rhs
}

/// Both binomial identities: the first always, its overline companion when `i >= 2`.
pub fn check_binomial_altsum(m: i64, d: i64, i: i64) -> bool {
    if i < 1 || m < 1 || d <= i {
        return false;
    }
    check_altsum_bin(m, d, i) && (i < 2 || check_altsum_bin_bar(d, i))
}

/// Coefficient of `x^a y^b` in the alternating-sum generating function.
fn gf_alternating(i: i64, a: i64, b: i64) -> BigInt {
    (0..=a - 2)
        .map(|k| {
            sign(k) * (k + 1) * binomial(a + i + b - 2, b + i + k) * binomial(b + i + k - 1, b - 2)
        })
        .sum()
}

/// Coefficient of `x^a y^b` in the positive-sum generating function.
fn gf_positive(i: i64, a: i64, b: i64) -> BigInt {
    (0..=a - 2)
        .map(|h| binomial(b + i + h - 1, h + i + 1) * binomial(i - 1 + h, h))
        .sum()
}

/// `x^2 y^2 / ((1-x)(1-x-y)^i (1-y)^2)` up to total degree `order`.
pub fn gf_closed_form(i: u32, order: usize) -> BiSeries {
    let one = BiSeries::one(order);
    let x = BiSeries::x(order);
    let y = BiSeries::y(order);
    let num = &x.pow(2) * &y.pow(2);
    let den = &(&(&one - &x) * &(&(&one - &x) - &y).pow(i)) * &(&one - &y).pow(2);
    num.div_truncated(&den).expect("denominator has constant term 1")
}

/// Both double-sum generating functions agree with the closed form through total degree `n`.
pub fn check_gf_truncation(i: i64, n: usize) -> bool {
    if i < 1 {
        return false;
    }
    let closed = gf_closed_form(i as u32, n);
    closed.indices().all(|(a, b)| {
        let c = closed.coeff(a, b);
        let (a, b) = (a as i64, b as i64);
        c == rat_int(gf_alternating(i, a, b)) && c == rat_int(gf_positive(i, a, b))
    })
}

/// The constant-term chain for `U_{m,d}(rho)` sums to `-1`, in both its expanded
/// and simplified forms, and the oracle constant term is 1.
pub fn check_kl_constant_term_porism(m: i64, d: i64, rho: i64) -> bool {
    let Ok(p) = RhoUniformParams::new(m as usize, d as usize, rho as usize) else {
        return false;
    };
    let oracle_ok = build_rho_uniform(p).is_ok_and(|mat| kl_poly(&mat).coeff(0).is_one());
    if d == 0 {
        return oracle_ok;
    }
    let rho = p.removed() as i64;
    let n = m + d;
    let minus_one = BigInt::from(-1);

    let mut expanded = sign(d) * binomial(n - 1, d - 1) - rho * sign(d) + rho * sign(d - 1) * binomial(d - 1, d - 2);
    for j in 1..=d - 2 {
        expanded += rho * binomial(d, j) * sign(j) * (skyt(m + 1, 0, d - j + 1) - count_overline_skyt(0, d - j + 1));
    }
    for j in 1..d {
        expanded += (binomial(n, j) - rho * binomial(d, j)) * sign(j) * skyt(m + 1, 0, d - j + 1);
    }

    let simplified = sign(d) * binomial(n - 1, d - 1) - 1 + (0..d).map(|j| sign(j) * binomial(n, j)).sum::<BigInt>();

    oracle_ok && expanded == minus_one && simplified == minus_one
}

#[derive(Serialize)]
struct Mkdp {
    m: i64,
    k: i64,
    d: i64,
    p: i64,
}

#[derive(Serialize)]
struct Mdi {
    m: i64,
    d: i64,
    i: i64,
}

#[derive(Serialize)]
struct Di {
    d: i64,
    i: i64,
}

#[derive(Serialize)]
struct Ab {
    a: i64,
    b: i64,
}

#[derive(Serialize)]
struct In {
    i: i64,
    n: usize,
}

#[derive(Serialize)]
struct Mdrho {
    m: i64,
    d: i64,
    rho: i64,
}

pub const DEFAULT_M_MAX: i64 = 4;
pub const DEFAULT_D_MAX: i64 = 8;

pub fn syt_dual_suite(m_max: i64, d_max: i64) -> IdentityReport {
    let mut pts = Vec::new();
    for m in 1..=m_max {
        for d in 0..=d_max {
            for k in 0..=d {
                for p in 0..=d - 2 * k - 1 {
                    pts.push(Mkdp { m, k, d, p });
                }
            }
        }
    }
    let grid = json!({"m": [1, m_max], "d": [0, d_max], "k": ">= 0", "p": "d - 2k - p - 1 >= 0"});
    IdentityReport::run("syt_dual", grid, &pts, |q| check_syt_dual(q.m, q.k, q.d, q.p))
}

/// Sweeps `k >= 1` with the shift fixed to `mshift`.
pub fn barskyt_dual_suite(d_max: i64, mshift: i64) -> IdentityReport {
    let mut pts = Vec::new();
    for d in 0..=d_max {
        for k in 1..=d {
            for p in 0..=d - 2 * k - 1 {
                pts.push(Mkdp { m: mshift, k, d, p });
            }
        }
    }
    let grid = json!({"mshift": mshift, "d": [0, d_max], "k": ">= 1", "p": "d - 2k - p - 1 >= 0"});
    IdentityReport::run("barskyt_dual", grid, &pts, |q| check_barskyt_dual(q.k, q.d, q.p, q.m))
}

/// Default grid keeps `2i <= d`; see [`identity_findings`] for the rest of the stated range.
pub fn skyt_identity_suite(m_max: i64, d_max: i64) -> IdentityReport {
    skyt_identity_over(m_max, d_max, true)
}

fn skyt_identity_over(m_max: i64, d_max: i64, half: bool) -> IdentityReport {
    let pts = mdi_grid(m_max, d_max, half);
    let i_range = if half { "1 <= i, 2i <= d" } else { "1 <= i <= d - 1" };
    let grid = json!({"m": [1, m_max], "d": [2, d_max], "i": i_range});
    IdentityReport::run("skyt_identity", grid, &pts, |q| check_skyt_identity(q.m, q.d, q.i))
}

fn mdi_grid(m_max: i64, d_max: i64, half: bool) -> Vec<Mdi> {
    let mut pts = Vec::new();
    for m in 1..=m_max {
        for d in 2..=d_max {
            for i in (1..d).filter(|&i| !half || 2 * i <= d) {
                pts.push(Mdi { m, d, i });
            }
        }
    }
    pts
}

pub fn skytbar_identity_suite(d_max: i64, i_max: i64) -> IdentityReport {
    skytbar_identity_over(d_max, i_max, true)
}

fn skytbar_identity_over(d_max: i64, i_max: i64, half: bool) -> IdentityReport {
    let mut pts = Vec::new();
    for d in 2..=d_max {
        for i in (1..=i_max.min(d - 1)).filter(|&i| !half || 2 * i <= d) {
            pts.push(Di { d, i });
        }
    }
    let bound = if half { ", 2i <= d" } else { "" };
    let grid = json!({"d": [2, d_max], "i": format!("1 <= i <= min({i_max}, d - 1){bound}")});
    IdentityReport::run("skytbar_identity", grid, &pts, |q| check_skytbar_identity(q.d, q.i))
}

pub fn integral_identity_suite(ab_max: i64) -> IdentityReport {
    let pts: Vec<Ab> = (1..=ab_max)
        .flat_map(|a| (1..=ab_max).map(move |b| Ab { a, b }))
        .collect();
    let grid = json!({"a": [1, ab_max], "b": [1, ab_max]});
    IdentityReport::run("integral_identity", grid, &pts, |q| check_integral_identity(q.a, q.b))
}

pub fn binomial_altsum_suite(m_max: i64, d_max: i64) -> IdentityReport {
    let pts = mdi_grid(m_max, d_max, false);
    let grid = json!({"m": [1, m_max], "d": [2, d_max], "i": "1 <= i <= d - 1"});
    IdentityReport::run("binomial_altsum", grid, &pts, |q| check_binomial_altsum(q.m, q.d, q.i))
}

pub fn gf_truncation_suite(i_max: i64, n: usize) -> IdentityReport {
    let pts: Vec<In> = (1..=i_max).map(|i| In { i, n }).collect();
    let grid = json!({"i": [1, i_max], "N": n});
    IdentityReport::run("gf_truncation", grid, &pts, |q| check_gf_truncation(q.i, q.n))
}

pub fn porism_suite(max_n: usize) -> IdentityReport {
    let pts: Vec<Mdrho> = RhoUniformParams::all_up_to(max_n)
        .into_iter()
        .map(|p| Mdrho {
            m: p.m as i64,
            d: p.d as i64,
            rho: p.rho as i64,
        })
        .collect();
    let grid = json!({"m + d": format!("<= {max_n}")});
    IdentityReport::run("kl_constant_term_porism", grid, &pts, |q| {
        check_kl_constant_term_porism(q.m, q.d, q.rho)
    })
}

/// All identity suites on their default grids, in a fixed order.
pub fn default_identity_reports() -> Vec<IdentityReport> {
    vec![
        skyt_identity_suite(DEFAULT_M_MAX, DEFAULT_D_MAX),
        skytbar_identity_suite(9, 4),
        syt_dual_suite(DEFAULT_M_MAX, DEFAULT_D_MAX),
        barskyt_dual_suite(DEFAULT_D_MAX, 0),
        integral_identity_suite(8),
        binomial_altsum_suite(5, 9),
        gf_truncation_suite(4, 10),
        porism_suite(8),
    ]
}

/// Reports over parameter ranges where the identities, read literally, do not hold:
/// the two alternating-sum identities for `2i > d`, and the overline dual count
/// with a nonzero shift. Each of these is expected to fail.
pub fn identity_findings() -> Vec<IdentityReport> {
    let mut out = vec![
        skyt_identity_over(DEFAULT_M_MAX, DEFAULT_D_MAX, false),
        skytbar_identity_over(9, 4, false),
    ];
    out.extend((1..=3).map(|m| barskyt_dual_suite(DEFAULT_D_MAX, m)));
    out
}
