//! Exact integer and rational primitives shared by every other module.

mod poly;
mod series;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
pub use poly::{poly_reverse, IntPoly};
pub use series::{series_div_truncated, BiSeries};

use num_traits::{One, Zero};

/// `C(n, k)`, extended by zero outside `0 <= k <= n` (negative `n` included).
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 1..=k {
        // acc = C(n - k + j, j) after this step, so the division is exact.
        acc *= n - k + j;
        acc /= j;
    }
    acc
}

/// `n!`; zero for negative `n` is never meaningful so it panics instead.
pub fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative number {n}");
    (2..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// Rising product `lo * (lo + 1) * ... * hi`, empty product being 1.
pub fn rising(lo: i64, hi: i64) -> BigInt {
    (lo..=hi).fold(BigInt::one(), |acc, j| acc * j)
}

/// `(-1)^e` as a small integer.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rat_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pascal(n: usize) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for r in 1..=n {
            let prev = &rows[r - 1];
            let mut row = vec![BigInt::one(); r + 1];
            for k in 1..r {
                row[k] = &prev[k - 1] + &prev[k];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 1), BigInt::from(5));
        assert_eq!(binomial(4, 7), BigInt::zero());
        // Pascal-triangle oracle.
        let tri = pascal(11);
        assert_eq!(tri[11][5], BigInt::from(462));
        assert_eq!(binomial(11, 5), tri[11][5]);
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let tri = pascal(60);
        for (n, row) in tri.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n as i64, k as i64), v, "C({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert!(binomial(-1, 0).is_zero());
        assert!(binomial(-3, -5).is_zero());
        assert!(binomial(3, -1).is_zero());
        assert!(binomial(0, 1).is_zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn large_binomial_does_not_overflow() {
        // C(200, 100) has 59 decimal digits.
        let v = binomial(200, 100);
        assert_eq!(
            v.to_string(),
            "90548514656103281165404177077484163874504589675413336841320"
        );
        assert_eq!(v, factorial(200) / (factorial(100) * factorial(100)));
    }

    #[test]
    fn rising_and_sign() {
        assert_eq!(rising(3, 5), BigInt::from(60));
        assert_eq!(rising(4, 3), BigInt::one());
        assert_eq!(sign(3), -1);
        assert_eq!(sign(-2), 1);
        assert_eq!(sign(-1), -1);
    }

    proptest! {
        #[test]
        fn pascal_rule(n in 1i64..80, k in 0i64..80) {
            prop_assume!(k <= n);
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}
