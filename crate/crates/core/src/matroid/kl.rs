//! Brute-force Kazhdan-Lusztig oracle over the lattice of flats.
//!
//! With `d = rk M`, the defining relation
//! `t^d P(1/t) = sum over flats F of chi(M^F) P(M_F)` is split as
//! `t^d P(1/t) - P(t) = Q(t)` where `Q` sums over the non-bottom flats only.
//! Every monomial of `t^d P(1/t)` has degree above `d/2`, so below `d/2` the
//! relation reads `P = -Q`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::lattice::{char_poly_of_lattice, flats};
use super::Matroid;
use crate::arith::IntPoly;
use crate::error::{Error, Result};

type Memo = RwLock<HashMap<Matroid, IntPoly>>;

// Keyed on the exact (n, bases) representation, never on isomorphism class.
fn kl_memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn chi_memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn cached(memo: &Memo, key: &Matroid, compute: impl FnOnce() -> IntPoly) -> IntPoly {
    if let Some(p) = memo.read().unwrap().get(key) {
        return p.clone();
    }
    let p = compute();
    memo.write().unwrap().insert(key.clone(), p.clone());
    p
}

/// Drops both memo tables.
pub fn clear_caches() {
    kl_memo().write().unwrap().clear();
    chi_memo().write().unwrap().clear();
}

fn chi_loopless(m: &Matroid) -> IntPoly {
    cached(chi_memo(), m, || char_poly_of_lattice(&flats(m), m.rank()))
}

/// `P_M(t)`. Loops are deleted first; they do not change the lattice of flats.
pub fn kl_poly(m: &Matroid) -> IntPoly {
    let m = m.simplify_loops();
    kl_loopless(&m)
}

fn kl_loopless(m: &Matroid) -> IntPoly {
    if m.rank() == 0 {
        return IntPoly::one();
    }
    cached(kl_memo(), m, || {
        let d = m.rank();
        let q = non_bottom_sum(m);
        // Degree bound deg P < d/2, i.e. 2j < d.
        -&q.truncate(d.div_ceil(2))
    })
}

fn non_bottom_sum(m: &Matroid) -> IntPoly {
    let lattice = flats(m);
    lattice
        .flats
        .iter()
        .skip(1)
        .map(|&f| {
            let local = m.localization(f).expect("lattice element is a flat");
            let quotient = m.contraction(f).expect("lattice element is a flat");
            &chi_loopless(&local) * &kl_loopless(&quotient)
        })
        .fold(IntPoly::zero(), |acc, term| &acc + &term)
}

/// `t^d P(1/t) - sum over all flats F of chi(M^F) P(M_F)` for a loopless matroid,
/// evaluated with `P = kl_poly`. Zero exactly when the defining relation holds.
pub fn kl_defining_residual(m: &Matroid) -> Result<IntPoly> {
    if !m.is_loopless() {
        return Err(Error::HasLoops);
    }
    let d = m.rank();
    let lhs = kl_poly(m).reverse(d)?;
    let rhs = flats(m)
        .flats
        .iter()
        .map(|&f| {
            let local = m.localization(f).expect("flat");
            let quotient = m.contraction(f).expect("flat");
            &chi_loopless(&local) * &kl_poly(&quotient)
        })
        .fold(IntPoly::zero(), |acc, term| &acc + &term);
    Ok(&lhs - &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{matroid_from_bases, set, GroundSubset};
    use num_bigint::BigInt;
    use num_traits::One;

    #[test]
    fn rank_zero_is_one() {
        let m = matroid_from_bases(0, [GroundSubset::EMPTY]).unwrap();
        assert_eq!(kl_poly(&m), IntPoly::one());
        let loops = matroid_from_bases(4, [GroundSubset::EMPTY]).unwrap();
        assert_eq!(kl_poly(&loops), IntPoly::one());
    }

    #[test]
    fn small_uniform_values() {
        assert_eq!(kl_poly(&Matroid::uniform(1, 2)), IntPoly::one());
        assert_eq!(kl_poly(&Matroid::uniform(1, 3)), IntPoly::from_i64s(&[1, 2]));
        // U_{2,3}: 1 + 5t.
        assert_eq!(kl_poly(&Matroid::uniform(2, 3)), IntPoly::from_i64s(&[1, 5]));
    }

    #[test]
    fn loops_do_not_change_the_answer() {
        // U_{1,3} with an extra loop at element 5.
        let base = Matroid::uniform(1, 3);
        let with_loop = matroid_from_bases(5, base.bases().iter().copied()).unwrap();
        assert_eq!(with_loop.loops(), set(&[5]));
        assert_eq!(kl_poly(&with_loop), kl_poly(&base));
    }

    #[test]
    fn residual_vanishes_on_small_matroids() {
        let ms = [
            Matroid::uniform(1, 3),
            Matroid::uniform(2, 4),
            Matroid::uniform(3, 2),
            matroid_from_bases(3, [set(&[1, 3]), set(&[2, 3])]).unwrap(),
        ];
        for m in &ms {
            assert!(kl_defining_residual(m).unwrap().is_zero(), "{m:?}");
            let p = kl_poly(m);
            assert_eq!(p.coeff(0), BigInt::one());
            assert!(2 * p.degree().unwrap() < m.rank().max(1));
        }
    }

    #[test]
    fn concurrent_use_is_deterministic() {
        use rayon::prelude::*;
        let results: Vec<IntPoly> = (0..16)
            .into_par_iter()
            .map(|k| kl_poly(&Matroid::uniform(1 + k % 3, 4)))
            .collect();
        for (k, p) in results.iter().enumerate() {
            assert_eq!(p, &kl_poly(&Matroid::uniform(1 + k % 3, 4)));
        }
    }
}
