use std::fmt;

use serde::{Serialize, Serializer};

/// Subset of a ground set `{1, ..., n}` as a bitmask; element `e` lives at bit `e - 1`.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSubset(u32);

pub const MAX_GROUND: usize = 20;

impl GroundSubset {
    pub const EMPTY: GroundSubset = GroundSubset(0);

    pub fn from_bits(bits: u32) -> Self {
        Self(bits)
    }

    /// `{1, ..., n}`
    pub fn full(n: usize) -> Self {
        assert!(n <= 32);
        if n == 32 {
            Self(u32::MAX)
        } else {
            Self((1u32 << n) - 1)
        }
    }

    /// Interval `{lo, ..., hi}` (1-based, inclusive); empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        (lo..=hi).collect()
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e >= 1 && e <= 32 && self.0 & (1 << (e - 1)) != 0
    }

    pub fn with(self, e: usize) -> Self {
        Self(self.0 | (1 << (e - 1)))
    }

    pub fn without(self, e: usize) -> Self {
        Self(self.0 & !(1 << (e - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        Self(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn within(self, n: usize) -> bool {
        self.is_subset(Self::full(n))
    }

    /// Elements in increasing order, 1-based.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let tz = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(tz + 1)
        })
    }

    /// Renumbers the elements of `self` that lie in `onto` as `1..=|onto|`, keeping their order.
    pub fn compress(self, onto: Self) -> Self {
        let mut out = 0u32;
        for (k, e) in onto.elements().enumerate() {
            if self.contains(e) {
                out |= 1 << k;
            }
        }
        Self(out)
    }
}

impl FromIterator<usize> for GroundSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Self::EMPTY, |s, e| s.with(e))
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GroundSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.elements())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_round_trip() {
        let s: GroundSubset = [1, 3, 5].into_iter().collect();
        assert_eq!(s.bits(), 0b10101);
        assert_eq!(s.elements().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.to_string(), "{1,3,5}");
        assert_eq!(GroundSubset::EMPTY.to_string(), "{}");
    }

    #[test]
    fn compress_keeps_order() {
        let s: GroundSubset = [2, 5].into_iter().collect();
        let onto: GroundSubset = [2, 4, 5, 7].into_iter().collect();
        assert_eq!(s.compress(onto), [1, 3].into_iter().collect());
    }

    #[test]
    fn interval_and_full() {
        assert_eq!(GroundSubset::interval(2, 4), [2, 3, 4].into_iter().collect());
        assert!(GroundSubset::interval(3, 2).is_empty());
        assert_eq!(GroundSubset::full(3).len(), 3);
        assert!(GroundSubset::interval(1, 3).within(3));
        assert!(!GroundSubset::interval(1, 4).within(3));
    }
}
