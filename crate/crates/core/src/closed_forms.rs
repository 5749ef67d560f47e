//! Closed forms for `U_{m,d}(rho)`: constructors, coefficient formulas,
//! the characteristic polynomial and the minor classifier.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, sign, IntPoly};
use crate::error::{Error, Result};
use crate::matroid::{matroid_from_bases, GroundSubset, Matroid};
use crate::params::RhoUniformParams;
use crate::tableaux::{count_overline_skyt, count_skyt};

/// The `l`-th removed block `{l*d + 1, ..., l*d + d}`; distinct blocks are disjoint.
pub fn shifted_block(d: usize, l: usize) -> GroundSubset {
    GroundSubset::interval(l * d + 1, l * d + d)
}

/// `U_{m,d}` with the blocks `[d]_0, ..., [d]_{rho-1}` removed from the basis system.
pub fn build_rho_uniform(p: RhoUniformParams) -> Result<Matroid> {
    p.validate()?;
    let n = p.ground_size();
    let removed: Vec<GroundSubset> = (0..p.removed()).map(|l| shifted_block(p.d, l)).collect();
    let bases = (0u32..1 << n)
        .map(GroundSubset::from_bits)
        .filter(|s| s.len() == p.d && !removed.contains(s));
    matroid_from_bases(n, bases)
}

/// Coefficient indices that can be nonzero: `2i < d`, plus `i = 0` when `d = 0`.
fn in_range(d: usize, i: usize) -> bool {
    i == 0 || 2 * i < d
}

/// `#SkYT(m + 1, i, d - 2i + 1)`.
pub fn coeff_uniform_tableau(m: usize, d: usize, i: usize) -> Result<BigInt> {
    let p = RhoUniformParams::uniform(m, d)?;
    if !in_range(p.d, i) {
        return Ok(BigInt::zero());
    }
    Ok(count_skyt((m + 1) as i64, i as i64, (d - 2 * i + 1) as i64))
}

/// The hypergeometric-style sum for uniform matroids, evaluated in exact rationals.
pub fn coeff_uniform_klum(m: usize, d: usize, i: usize) -> Result<BigInt> {
    RhoUniformParams::uniform(m, d)?;
    if !in_range(d, i) {
        return Ok(BigInt::zero());
    }
    if i == 0 {
        return Ok(BigInt::one());
    }
    let (a, b, i) = ((m + 1) as i64, (d - 2 * i + 1) as i64, i as i64);
    let sum: BigInt = (0..=a - 2)
        .map(|h| binomial(b + i + h - 1, h + i + 1) * binomial(i - 1 + h, h))
        .sum();
    let numer = binomial(b + 2 * i + a - 2, i) * sum;
    let denom = BigInt::from(b + i - 1);
    let (q, r) = numer.div_rem(&denom);
    if !r.is_zero() {
        return Err(Error::NonIntegerResult {
            numer: numer.to_string(),
            denom: denom.to_string(),
        });
    }
    Ok(q)
}

/// `c^i_{m,d}(rho) = #SkYT(m+1, i, d-2i+1) - rho #overline-SkYT(i, d-2i+1)`.
pub fn coeff_rho(m: usize, d: usize, i: usize, rho: usize) -> Result<BigInt> {
    let p = RhoUniformParams::new(m, d, rho)?;
    if !in_range(d, i) {
        return Ok(BigInt::zero());
    }
    let b = d as i64 - 2 * i as i64 + 1;
    let all = count_skyt((m + 1) as i64, i as i64, b);
    Ok(all - BigInt::from(p.removed()) * count_overline_skyt(i as i64, b))
}

/// `P_{U_{m,d}(rho)}(t)` assembled from `coeff_rho`.
pub fn kl_poly_rho(p: RhoUniformParams) -> Result<IntPoly> {
    p.validate()?;
    if p.d == 0 {
        return Ok(IntPoly::one());
    }
    let coeffs = p
        .coefficient_range()
        .map(|i| coeff_rho(p.m, p.d, i, p.rho))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

/// `chi_{U_{m,d}(rho)}(t)` from its coefficient formula; needs `d >= 1`.
pub fn char_poly_rho(p: RhoUniformParams) -> Result<IntPoly> {
    p.validate()?;
    if p.d == 0 {
        return Err(Error::InvalidParameters(format!(
            "{p}: rank 0 consists of loops only"
        )));
    }
    let (n, d, rho) = ((p.m + p.d) as i64, p.d as i64, p.removed() as i64);
    let coeffs = (0..=d)
        .map(|i| match i {
            0 => sign(d) * (binomial(n - 1, d - 1) - rho),
            1 => sign(d - 1) * (binomial(n, d - 1) - rho),
            _ => sign(d - i) * binomial(n, d - i),
        })
        .collect();
    Ok(IntPoly::new(coeffs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MinorKind {
    Localization,
    Contraction,
}

/// Isomorphism type of a minor, as a named member of the `U_{m,d}(rho)` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MinorType {
    Uniform { m: usize, d: usize },
    RhoUniform { m: usize, d: usize, rho: usize },
}

impl MinorType {
    pub fn build(&self) -> Result<Matroid> {
        match *self {
            MinorType::Uniform { m, d } => Ok(Matroid::uniform(m, d)),
            MinorType::RhoUniform { m, d, rho } => build_rho_uniform(RhoUniformParams::new(m, d, rho)?),
        }
    }
}

impl fmt::Display for MinorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorType::Uniform { m, d } => write!(f, "U_{{{m},{d}}}"),
            MinorType::RhoUniform { m, d, rho } => write!(f, "U_{{{m},{d}}}({rho})"),
        }
    }
}

/// Reads off the isomorphism type of `M^F` or `M_F` for `M = U_{m,d}(rho)` from
/// how `F` sits relative to the removed blocks. The result is a claim; it is not
/// checked against the actual minor.
pub fn classify_minor(p: RhoUniformParams, flat: GroundSubset, kind: MinorKind) -> Result<MinorType> {
    let m = build_rho_uniform(p)?;
    if !m.is_flat(flat) {
        return Err(Error::NotAFlat(flat));
    }
    let RhoUniformParams { m, d, .. } = p;
    let full = flat.len() == m + d;
    let blocks: Vec<GroundSubset> = (0..p.removed()).map(|l| shifted_block(d, l)).collect();
    let is_block = blocks.contains(&flat);
    let inside_block = !flat.is_empty() && blocks.iter().any(|&b| flat.is_subset(b) && flat != b);
    let rho_self = MinorType::RhoUniform { m, d, rho: p.removed() };
    let t = match kind {
        MinorKind::Localization if full => rho_self,
        MinorKind::Localization if is_block => MinorType::Uniform { m: 1, d: d - 1 },
        MinorKind::Localization => MinorType::Uniform { m: 0, d: flat.len() },
        MinorKind::Contraction if flat.is_empty() => rho_self,
        MinorKind::Contraction if full => MinorType::Uniform { m: 0, d: 0 },
        MinorKind::Contraction if is_block => MinorType::Uniform { m: m - 1, d: 1 },
        MinorKind::Contraction if inside_block => MinorType::RhoUniform { m, d: d - flat.len(), rho: 1 },
        MinorKind::Contraction => MinorType::Uniform { m, d: d - flat.len() },
    };
    Ok(t)
}

/// The flats of `U_{m,d}(rho)` as described combinatorially: every set of size
/// at most `d - 2`, the `(d - 1)`-sets inside no removed block, the removed
/// blocks themselves, and the ground set. Sorted by `(size, bits)`.
pub fn expected_flats(p: RhoUniformParams) -> Result<Vec<GroundSubset>> {
    p.validate()?;
    let n = p.ground_size();
    let ground = GroundSubset::full(n);
    if p.d == 0 {
        return Ok(vec![ground]);
    }
    let blocks: Vec<GroundSubset> = (0..p.removed()).map(|l| shifted_block(p.d, l)).collect();
    let mut out: Vec<GroundSubset> = (0u32..1 << n)
        .map(GroundSubset::from_bits)
        .filter(|s| {
            let k = s.len();
            k + 2 <= p.d
                || (k + 1 == p.d && !blocks.iter().any(|&b| s.is_subset(b)))
                || blocks.contains(s)
                || *s == ground
        })
        .collect();
    out.sort_by_key(|s| (s.len(), s.bits()));
    out.dedup();
    Ok(out)
}
