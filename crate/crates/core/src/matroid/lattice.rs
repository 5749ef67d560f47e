use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{GroundSubset, Matroid};
use crate::arith::IntPoly;
use crate::error::{Error, Result};

/// The lattice of flats with ranks and `mu(0, F)` for every flat.
///
/// Flats are sorted by cardinality, then by bitmask, so the bottom
/// (closure of the empty set) comes first and the ground set last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatLattice {
    pub flats: Vec<GroundSubset>,
    pub ranks: Vec<usize>,
    pub mobius: Vec<BigInt>,
}

impl FlatLattice {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn bottom(&self) -> GroundSubset {
        self.flats[0]
    }

    pub fn top(&self) -> GroundSubset {
        *self.flats.last().unwrap()
    }

    pub fn iter(&self) -> impl Iterator<Item = (GroundSubset, usize, &BigInt)> {
        self.flats
            .iter()
            .zip(&self.ranks)
            .zip(&self.mobius)
            .map(|((&f, &r), mu)| (f, r, mu))
    }

    pub fn position(&self, f: GroundSubset) -> Option<usize> {
        self.flats.iter().position(|&g| g == f)
    }
}

/// Enumerates flats by testing every subset for closedness (a `2^n` sweep).
pub fn flats(m: &Matroid) -> FlatLattice {
    let n = m.ground_size();
    let mut found: Vec<GroundSubset> = (0u32..1 << n)
        .map(GroundSubset::from_bits)
        .filter(|&s| {
            let r = m.rank_of(s);
            (1..=n).all(|x| s.contains(x) || m.rank_of(s.with(x)) > r)
        })
        .collect();
    found.sort_by_key(|s| (s.len(), *s));

    let ranks: Vec<usize> = found.iter().map(|&f| m.rank_of(f)).collect();
    let mut mobius: Vec<BigInt> = Vec::with_capacity(found.len());
    for (k, &f) in found.iter().enumerate() {
        let mu = if k == 0 {
            BigInt::one()
        } else {
            // Strict subflats all precede f in the cardinality order.
            let below: BigInt = found[..k]
                .iter()
                .zip(&mobius)
                .filter(|(g, _)| g.is_subset(f))
                .map(|(_, mu)| mu)
                .sum();
            -below
        };
        mobius.push(mu);
    }
    FlatLattice {
        flats: found,
        ranks,
        mobius,
    }
}

/// `chi_M(t) = sum over flats F of mu(0, F) t^(rk M - rk F)`; defined for loopless matroids.
pub fn char_poly(m: &Matroid) -> Result<IntPoly> {
    if !m.is_loopless() {
        return Err(Error::HasLoops);
    }
    Ok(char_poly_of_lattice(&flats(m), m.rank()))
}

pub(crate) fn char_poly_of_lattice(lattice: &FlatLattice, rank: usize) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); rank + 1];
    for (_, r, mu) in lattice.iter() {
        coeffs[rank - r] += mu;
    }
    IntPoly::new(coeffs)
}
