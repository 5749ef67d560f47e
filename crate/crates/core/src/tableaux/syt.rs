use num_bigint::BigInt;
use num_traits::One;

use super::poset::CellPoset;
use crate::arith::factorial;
use crate::error::{Error, Result};

/// Straight shape with column heights `a`, then `i` columns of height 2, then `k` of height 1;
/// as a partition, `(1 + i + k, 1 + i, 1^(a - 2))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SytShape {
    pub a: usize,
    pub i: usize,
    pub k: usize,
}

impl SytShape {
    pub fn new(a: usize, i: usize, k: usize) -> Result<Self> {
        let ok = a >= 1 && (i == 0 || a >= 2);
        if !ok {
            return Err(Error::InvalidShape(format!(
                "SYT({a},{i},{k}) is not a partition shape"
            )));
        }
        Ok(Self { a, i, k })
    }

    pub fn column_heights(&self) -> Vec<usize> {
        let mut h = vec![self.a];
        h.extend(std::iter::repeat_n(2, self.i));
        h.extend(std::iter::repeat_n(1, self.k));
        h
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        let cols = self.column_heights();
        (0..self.a)
            .map(|r| cols.iter().take_while(|&&h| h > r).count())
            .collect()
    }

    pub fn cell_count(&self) -> usize {
        self.a + 2 * self.i + self.k
    }
}

/// Number of standard Young tableaux of `SytShape(a, i, k)` by the hook-length formula.
pub fn count_syt(a: usize, i: usize, k: usize) -> Result<BigInt> {
    let shape = SytShape::new(a, i, k)?;
    let rows = shape.row_lengths();
    let cols = shape.column_heights();
    let mut hooks = BigInt::one();
    for (r, &len) in rows.iter().enumerate() {
        for (c, &height) in cols.iter().enumerate().take(len) {
            let arm = len - c - 1;
            let leg = height - r - 1;
            hooks *= arm + leg + 1;
        }
    }
    Ok(factorial(shape.cell_count() as i64) / hooks)
}

/// Same count by exhaustive backtracking over legal fillings.
pub fn count_syt_backtracking(a: usize, i: usize, k: usize) -> Result<BigInt> {
    let shape = SytShape::new(a, i, k)?;
    let columns: Vec<(i64, usize)> = shape.column_heights().into_iter().map(|h| (0, h)).collect();
    Ok(BigInt::from(CellPoset::from_columns(&columns).count_extensions()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_length_examples() {
        // (2,2,1): hooks 4,2,3,1,1.
        assert_eq!(count_syt(3, 1, 0).unwrap(), BigInt::from(5));
        assert_eq!(count_syt(2, 0, 0).unwrap(), BigInt::from(1));
        // (3,2): hooks 4,3,1 / 2,1, so 120 / 24.
        assert_eq!(count_syt(2, 1, 1).unwrap(), BigInt::from(5));
        assert_eq!(count_syt_backtracking(2, 1, 1).unwrap(), BigInt::from(5));
    }

    #[test]
    fn invalid_shapes() {
        assert!(count_syt(1, 1, 0).is_err());
        assert!(count_syt(0, 0, 3).is_err());
        assert!(count_syt(1, 0, 3).is_ok());
    }

    #[test]
    fn row_lengths_form_a_partition() {
        let s = SytShape::new(4, 2, 3).unwrap();
        assert_eq!(s.row_lengths(), vec![6, 3, 1, 1]);
        assert_eq!(s.row_lengths().iter().sum::<usize>(), s.cell_count());
    }

    #[test]
    fn hook_length_agrees_with_backtracking() {
        for a in 1..=7 {
            for i in 0..=4 {
                for k in 0..=6 {
                    let Ok(shape) = SytShape::new(a, i, k) else { continue };
                    if shape.cell_count() > 11 {
                        continue;
                    }
                    assert_eq!(
                        count_syt(a, i, k).unwrap(),
                        count_syt_backtracking(a, i, k).unwrap(),
                        "SYT({a},{i},{k})"
                    );
                }
            }
        }
    }
}
