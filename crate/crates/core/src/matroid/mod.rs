//! Matroids given by explicit basis systems.
//!
//! Ranks are precomputed for all `2^n` subsets at construction time, so the
//! engine is meant for small ground sets (`n <= 20`, in practice `n <= 12`).

mod iso;
mod kl;
mod lattice;
mod subset;

use std::collections::HashSet;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use iso::{is_isomorphic, MAX_ISO_GROUND};
pub use kl::{clear_caches, kl_defining_residual, kl_poly};
pub use lattice::{char_poly, flats, FlatLattice};
pub use subset::{GroundSubset, MAX_GROUND};

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<GroundSubset>,
    rank_table: Arc<Vec<u8>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl Hash for Matroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bases.hash(state);
    }
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("bases", &self.bases)
            .finish()
    }
}

/// Validating constructor: checks cardinalities and the basis-exchange axiom
/// for every ordered pair of bases.
pub fn matroid_from_bases(
    n: usize,
    bases: impl IntoIterator<Item = GroundSubset>,
) -> Result<Matroid> {
    if n > MAX_GROUND {
        return Err(Error::GroundSetTooLarge { n, limit: MAX_GROUND });
    }
    let mut bases: Vec<GroundSubset> = bases.into_iter().collect();
    bases.sort();
    bases.dedup();
    let first = bases.first().ok_or(Error::EmptyBases)?.len();
    for &b in &bases {
        if !b.within(n) {
            return Err(Error::OutOfGroundSet { basis: b, n });
        }
        if b.len() != first {
            return Err(Error::MixedCardinality { first, other: b.len() });
        }
    }
    check_exchange(&bases)?;
    Ok(Matroid::from_sorted_bases(n, bases))
}

fn check_exchange(bases: &[GroundSubset]) -> Result<()> {
    let set: HashSet<GroundSubset> = bases.iter().copied().collect();
    for &b in bases {
        for &other in bases {
            let gain = other.difference(b);
            for e in b.difference(other).elements() {
                let rest = b.without(e);
                if !gain.elements().any(|x| set.contains(&rest.with(x))) {
                    return Err(Error::ExchangeAxiomViolation {
                        basis: b,
                        other,
                        element: e,
                    });
                }
            }
        }
    }
    Ok(())
}

impl Matroid {
    /// Trusted constructor for bases already known to form a matroid (minors, uniform matroids).
    fn from_sorted_bases(n: usize, bases: Vec<GroundSubset>) -> Self {
        let rank = bases[0].len();
        let size = 1usize << n;
        // independent[S] iff S lies inside some basis; fill downward from the bases.
        let mut independent = vec![false; size];
        for b in &bases {
            independent[b.bits() as usize] = true;
        }
        for s in (0..size).rev() {
            if independent[s] {
                continue;
            }
            let mut rest = !s & (size - 1);
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if independent[s | bit] {
                    independent[s] = true;
                    break;
                }
                rest &= rest - 1;
            }
        }
        let mut rank_table = vec![0u8; size];
        for s in 1..size {
            rank_table[s] = if independent[s] {
                s.count_ones() as u8
            } else {
                let mut best = 0;
                let mut bits = s;
                while bits != 0 {
                    let bit = bits & bits.wrapping_neg();
                    best = best.max(rank_table[s ^ bit]);
                    bits &= bits - 1;
                }
                best
            };
        }
        Self {
            n,
            rank,
            bases,
            rank_table: Arc::new(rank_table),
        }
    }

    /// `U_{m,d}`: all `d`-subsets of an `(m + d)`-element ground set.
    pub fn uniform(m: usize, d: usize) -> Self {
        let n = m + d;
        assert!(n <= MAX_GROUND);
        let bases = (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == d)
            .map(GroundSubset::from_bits)
            .collect();
        Self::from_sorted_bases(n, bases)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> GroundSubset {
        GroundSubset::full(self.n)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[GroundSubset] {
        &self.bases
    }

    pub fn rank_of(&self, s: GroundSubset) -> usize {
        debug_assert!(s.within(self.n));
        self.rank_table[s.bits() as usize] as usize
    }

    pub fn is_independent(&self, s: GroundSubset) -> bool {
        self.rank_of(s) == s.len()
    }

    pub fn closure(&self, s: GroundSubset) -> GroundSubset {
        let r = self.rank_of(s);
        (1..=self.n)
            .filter(|&x| s.contains(x) || self.rank_of(s.with(x)) == r)
            .collect()
    }

    pub fn is_flat(&self, s: GroundSubset) -> bool {
        s.within(self.n) && self.closure(s) == s
    }

    pub fn loops(&self) -> GroundSubset {
        self.closure(GroundSubset::EMPTY)
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// `M^F`: the restriction to the flat `F`, relabeled onto `1..=|F|`.
    pub fn localization(&self, flat: GroundSubset) -> Result<Matroid> {
        if !self.is_flat(flat) {
            return Err(Error::NotAFlat(flat));
        }
        Ok(self.restriction_unchecked(flat))
    }

    fn restriction_unchecked(&self, onto: GroundSubset) -> Matroid {
        let r = self.rank_of(onto);
        let mut bases: Vec<GroundSubset> = self
            .bases
            .iter()
            .map(|b| b.intersection(onto))
            .filter(|b| b.len() == r)
            .map(|b| b.compress(onto))
            .collect();
        bases.sort();
        bases.dedup();
        Matroid::from_sorted_bases(onto.len(), bases)
    }

    /// `M_F`: the contraction by the flat `F`, on the complement relabeled onto `1..=n-|F|`.
    pub fn contraction(&self, flat: GroundSubset) -> Result<Matroid> {
        if !self.is_flat(flat) {
            return Err(Error::NotAFlat(flat));
        }
        let r = self.rank_of(flat);
        let rest = self.ground().difference(flat);
        let mut bases: Vec<GroundSubset> = self
            .bases
            .iter()
            .filter(|b| b.intersection(flat).len() == r)
            .map(|b| b.difference(flat).compress(rest))
            .collect();
        bases.sort();
        bases.dedup();
        Ok(Matroid::from_sorted_bases(rest.len(), bases))
    }

    /// Deletes all loops; the lattice of flats is unchanged up to isomorphism.
    pub fn simplify_loops(&self) -> Matroid {
        let loops = self.loops();
        if loops.is_empty() {
            return self.clone();
        }
        self.restriction_unchecked(self.ground().difference(loops))
    }
}

pub fn rank(m: &Matroid, s: GroundSubset) -> usize {
    m.rank_of(s)
}

pub fn closure(m: &Matroid, s: GroundSubset) -> GroundSubset {
    m.closure(s)
}

pub fn localization(m: &Matroid, flat: GroundSubset) -> Result<Matroid> {
    m.localization(flat)
}

pub fn contraction(m: &Matroid, flat: GroundSubset) -> Result<Matroid> {
    m.contraction(flat)
}

#[cfg(test)]
pub(crate) fn set(elems: &[usize]) -> GroundSubset {
    elems.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(list: &[&[usize]]) -> Vec<GroundSubset> {
        list.iter().map(|s| set(s)).collect()
    }

    /// Rank by the definition: the largest intersection with a basis.
    fn rank_oracle(m: &Matroid, s: GroundSubset) -> usize {
        m.bases().iter().map(|b| b.intersection(s).len()).max().unwrap()
    }

    fn u12_minus_12() -> Matroid {
        matroid_from_bases(3, sets(&[&[1, 3], &[2, 3]])).unwrap()
    }

    #[test]
    fn from_bases_examples() {
        let u12 = matroid_from_bases(3, sets(&[&[1, 2], &[1, 3], &[2, 3]])).unwrap();
        assert_eq!(u12, Matroid::uniform(1, 2));
        assert_eq!(u12_minus_12().bases().len(), 2);
    }

    #[test]
    fn exchange_violation_reported_with_witness() {
        // {12, 34}: dropping 1 from {1,2} admits neither {2,3} nor {2,4}.
        let err = matroid_from_bases(4, sets(&[&[1, 2], &[3, 4]])).unwrap_err();
        match err {
            Error::ExchangeAxiomViolation { basis, other, element } => {
                assert_eq!(basis, set(&[1, 2]));
                assert_eq!(other, set(&[3, 4]));
                assert_eq!(element, 1);
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn two_bases_sharing_an_element_form_a_matroid() {
        // {12, 13} on 4 elements: 2 and 3 are parallel and 4 is a loop.
        let m = matroid_from_bases(4, sets(&[&[1, 2], &[1, 3]])).unwrap();
        assert_eq!(m.loops(), set(&[4]));
        assert_eq!(m.closure(set(&[2])), set(&[2, 3, 4]));
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(matroid_from_bases(3, vec![]), Err(Error::EmptyBases));
        assert_eq!(
            matroid_from_bases(3, sets(&[&[1, 2], &[3]])),
            Err(Error::MixedCardinality { first: 2, other: 1 })
        );
        assert!(matches!(
            matroid_from_bases(2, sets(&[&[1, 3]])),
            Err(Error::OutOfGroundSet { .. })
        ));
    }

    #[test]
    fn rank_examples() {
        let u12 = Matroid::uniform(1, 2);
        assert_eq!(rank(&u12, set(&[1, 2, 3])), 2);
        assert_eq!(rank(&u12_minus_12(), set(&[1, 2])), 1);
        assert_eq!(rank(&u12, GroundSubset::EMPTY), 0);
    }

    #[test]
    fn rank_table_matches_definition() {
        let ms = [
            Matroid::uniform(2, 3),
            u12_minus_12(),
            matroid_from_bases(5, sets(&[&[1, 2], &[1, 3], &[2, 4], &[3, 4], &[1, 4], &[2, 3]]))
                .unwrap(),
        ];
        for m in &ms {
            for bits in 0..1u32 << m.ground_size() {
                let s = GroundSubset::from_bits(bits);
                assert_eq!(m.rank_of(s), rank_oracle(m, s), "{m:?} {s}");
            }
        }
    }

    #[test]
    fn closure_examples() {
        let u12 = Matroid::uniform(1, 2);
        assert_eq!(closure(&u12, set(&[1])), set(&[1]));
        assert_eq!(closure(&u12_minus_12(), set(&[1])), set(&[1, 2]));
        assert_eq!(closure(&u12, u12.ground()), u12.ground());
    }

    #[test]
    fn localization_examples() {
        let u12 = Matroid::uniform(1, 2);
        assert_eq!(localization(&u12, u12.ground()).unwrap(), u12);
        assert_eq!(localization(&u12, set(&[3])).unwrap(), Matroid::uniform(0, 1));
        assert_eq!(
            localization(&u12_minus_12(), set(&[1])),
            Err(Error::NotAFlat(set(&[1])))
        );
    }

    #[test]
    fn contraction_examples() {
        let u23 = Matroid::uniform(2, 3);
        assert_eq!(contraction(&u23, GroundSubset::EMPTY).unwrap(), u23);
        let c = contraction(&u23, set(&[2])).unwrap();
        assert_eq!(c, Matroid::uniform(2, 2));
        let top = contraction(&u23, u23.ground()).unwrap();
        assert_eq!(top.ground_size(), 0);
        assert_eq!(top.bases(), &[GroundSubset::EMPTY]);
        assert!(contraction(&u23, set(&[1, 2, 3])).is_err());
    }

    #[test]
    fn rank_zero_matroid() {
        let m = matroid_from_bases(0, [GroundSubset::EMPTY]).unwrap();
        assert_eq!(m.rank(), 0);
        let m3 = matroid_from_bases(3, [GroundSubset::EMPTY]).unwrap();
        assert_eq!(m3.loops(), m3.ground());
        assert_eq!(m3.simplify_loops().ground_size(), 0);
    }
}
