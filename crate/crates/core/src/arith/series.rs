use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Bivariate power series in `x`, `y` truncated at total degree `order`.
///
/// Coefficients are stored densely for every `(p, q)` with `p + q <= order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

fn index(p: usize, q: usize) -> usize {
    // Diagonal-major layout: all terms of total degree s precede degree s + 1.
    let s = p + q;
    s * (s + 1) / 2 + q
}

impl BiSeries {
    pub fn zero(order: usize) -> Self {
        let len = (order + 1) * (order + 2) / 2;
        Self {
            order,
            coeffs: vec![BigRational::zero(); len],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 0, BigRational::one())
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(order, 1, 0, BigRational::one())
    }

    pub fn y(order: usize) -> Self {
        Self::monomial(order, 0, 1, BigRational::one())
    }

    /// `c * x^p * y^q`, or zero when the term lies beyond the truncation.
    pub fn monomial(order: usize, p: usize, q: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        s.set(p, q, c);
        s
    }

    /// Builds a series from a coefficient function evaluated at every stored index.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut s = Self::zero(order);
        for (p, q) in s.indices() {
            s.coeffs[index(p, q)] = f(p, q);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn indices(&self) -> impl Iterator<Item = (usize, usize)> {
        let order = self.order;
        (0..=order).flat_map(move |s| (0..=s).map(move |q| (s - q, q)))
    }

    pub fn coeff(&self, p: usize, q: usize) -> BigRational {
        if p + q > self.order {
            BigRational::zero()
        } else {
            self.coeffs[index(p, q)].clone()
        }
    }

    /// Silently drops terms beyond the truncation order.
    pub fn set(&mut self, p: usize, q: usize, c: BigRational) {
        if p + q <= self.order {
            self.coeffs[index(p, q)] = c;
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order), |acc, _| &acc * self)
    }

    /// Truncated quotient `q` with `q * den == self` through total degree `order`.
    pub fn div_truncated(&self, den: &BiSeries) -> Result<Self> {
        assert_eq!(self.order, den.order, "series orders differ");
        let c0 = den.coeff(0, 0);
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut out = Self::zero(self.order);
        // Degree-by-degree back substitution; every term used is of lower total degree.
        for (p, q) in self.indices() {
            let mut acc = self.coeff(p, q);
            for r in 0..=p {
                for s in 0..=q {
                    if r == 0 && s == 0 {
                        continue;
                    }
                    let d = &den.coeffs[index(r, s)];
                    if d.is_zero() {
                        continue;
                    }
                    acc -= d * &out.coeffs[index(p - r, q - s)];
                }
            }
            out.coeffs[index(p, q)] = acc / &c0;
        }
        Ok(out)
    }
}

pub fn series_div_truncated(num: &BiSeries, den: &BiSeries) -> Result<BiSeries> {
    num.div_truncated(den)
}

impl Add for &BiSeries {
    type Output = BiSeries;

    fn add(self, rhs: &BiSeries) -> BiSeries {
        assert_eq!(self.order, rhs.order, "series orders differ");
        BiSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;

    fn sub(self, rhs: &BiSeries) -> BiSeries {
        assert_eq!(self.order, rhs.order, "series orders differ");
        BiSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &BiSeries {
    type Output = BiSeries;

    fn neg(self) -> BiSeries {
        BiSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;

    fn mul(self, rhs: &BiSeries) -> BiSeries {
        assert_eq!(self.order, rhs.order, "series orders differ");
        let mut out = BiSeries::zero(self.order);
        for (p, q) in self.indices() {
            let a = &self.coeffs[index(p, q)];
            if a.is_zero() {
                continue;
            }
            let rest = self.order - p - q;
            for s in 0..=rest {
                for r in 0..=s {
                    let (rp, rq) = (s - r, r);
                    let b = &rhs.coeffs[index(rp, rq)];
                    if !b.is_zero() {
                        out.coeffs[index(p + rp, q + rq)] += a * b;
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, rat_int};
    use proptest::prelude::*;

    fn int(c: i64) -> BigRational {
        rat_int(c)
    }

    #[test]
    fn geometric_series() {
        let n = 3;
        let den = &BiSeries::one(n) - &BiSeries::x(n);
        let q = BiSeries::one(n).div_truncated(&den).unwrap();
        for (p, r) in q.indices() {
            let want = if r == 0 { 1 } else { 0 };
            assert_eq!(q.coeff(p, r), int(want), "({p},{r})");
        }
    }

    #[test]
    fn identity_denominator() {
        let x = BiSeries::x(4);
        assert_eq!(x.div_truncated(&BiSeries::one(4)).unwrap(), x);
    }

    #[test]
    fn one_over_one_minus_x_minus_y() {
        // Multinomial oracle: [x^p y^q] 1/(1-x-y) = C(p+q, p).
        let n = 6;
        let den = &(&BiSeries::one(n) - &BiSeries::x(n)) - &BiSeries::y(n);
        let q = BiSeries::one(n).div_truncated(&den).unwrap();
        for (p, r) in q.indices() {
            assert_eq!(
                q.coeff(p, r),
                BigRational::from_integer(binomial((p + r) as i64, p as i64))
            );
        }
        // The N = 2 example written out.
        let q2 = BiSeries::one(2)
            .div_truncated(&(&(&BiSeries::one(2) - &BiSeries::x(2)) - &BiSeries::y(2)))
            .unwrap();
        let want = [((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((2, 0), 1), ((1, 1), 2), ((0, 2), 1)];
        for ((p, r), c) in want {
            assert_eq!(q2.coeff(p, r), int(c));
        }
    }

    #[test]
    fn zero_constant_term_rejected() {
        let n = 3;
        assert_eq!(
            BiSeries::one(n).div_truncated(&BiSeries::x(n)),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn truncation_drops_high_terms() {
        let n = 3;
        let x = BiSeries::x(n);
        assert!(x.pow(4).coeff(4, 0).is_zero());
        assert_eq!(x.pow(3).coeff(3, 0), int(1));
        let mut s = BiSeries::zero(n);
        s.set(2, 2, int(5));
        assert_eq!(s, BiSeries::zero(n));
    }

    fn series(order: usize) -> impl Strategy<Value = BiSeries> {
        let len = (order + 1) * (order + 2) / 2;
        prop::collection::vec(-6i64..6, len).prop_map(move |v| {
            let mut it = v.into_iter();
            BiSeries::from_fn(order, |_, _| int(it.next().unwrap()))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn multiplication_is_associative(a in series(5), b in series(5), c in series(5)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn division_undoes_multiplication(a in series(5), mut b in series(5), c0 in 1i64..5) {
            b.set(0, 0, int(c0));
            let prod = &a * &b;
            prop_assert_eq!(prod.div_truncated(&b).unwrap(), a);
        }
    }
}
