//! Skew tableaux on the three-part shape `(a, i, b)`.
//!
//! The shape has a left column of height `a`, then `i - 1` columns of height
//! 2, then a right column of height `b` that sticks out `b - 2` cells above
//! the two-row strip. Rows grow downward and the strip occupies rows 0 and 1:
//!
//! ```text
//!              col i
//!   row -1          [ ]
//!   row  0  [ ][ ][ ][ ]
//!   row  1  [ ][ ][ ][ ]
//!   row  2  [ ]
//!   row  3  [ ]
//!          col 0
//! ```
//!
//! A legal filling uses `1..=a + 2i + b - 2` once each, increasing down every
//! column and rightward along every row.

mod poset;
mod syt;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::params::RhoUniformParams;
use poset::CellPoset;

pub use syt::{count_syt, count_syt_backtracking, SytShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    pub a: usize,
    pub i: usize,
    pub b: usize,
}

impl SkewShape {
    /// Cell-level shapes need `i >= 1`; `i = 0` only exists as a counting convention.
    pub fn new(a: usize, i: usize, b: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::InvalidShape(format!(
                "SkYT({a},0,{b}) has no cell-level shape"
            )));
        }
        Ok(Self { a, i, b })
    }

    /// True when the shape admits legal fillings at all (`a, b >= 2`).
    pub fn is_fillable(&self) -> bool {
        self.a >= 2 && self.b >= 2
    }

    pub fn column_heights(&self) -> Vec<usize> {
        let mut h = vec![self.a];
        h.extend(std::iter::repeat_n(2, self.i - 1));
        h.push(self.b);
        h
    }

    /// Row of the top cell of column `c`.
    pub fn column_top(&self, c: usize) -> i64 {
        if c == self.i {
            2 - self.b as i64
        } else {
            0
        }
    }

    pub fn cell_count(&self) -> usize {
        self.a + 2 * self.i + self.b - 2
    }

    fn poset(&self) -> CellPoset {
        let cols: Vec<(i64, usize)> = self
            .column_heights()
            .into_iter()
            .enumerate()
            .map(|(c, h)| (self.column_top(c), h))
            .collect();
        CellPoset::from_columns(&cols)
    }

    /// The 180-degree rotation `(b, i, a)`.
    pub fn rotated(&self) -> Self {
        Self {
            a: self.b,
            i: self.i,
            b: self.a,
        }
    }
}

/// A filling stored column by column, each column top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Filling {
    #[serde(flatten)]
    shape: SkewShape,
    columns: Vec<Vec<u32>>,
}

impl Filling {
    /// Checks that `columns` fits `shape`, uses every entry once and is legal.
    pub fn new(shape: SkewShape, columns: Vec<Vec<u32>>) -> Result<Self> {
        let f = Self { shape, columns };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidShape(format!("filling {:?}: {why}", self.columns)));
        let heights = self.shape.column_heights();
        if heights.len() != self.columns.len()
            || heights.iter().zip(&self.columns).any(|(&h, c)| h != c.len())
        {
            return bad("column heights do not match the shape");
        }
        let n = self.shape.cell_count();
        let mut seen = vec![false; n + 1];
        for &v in self.columns.iter().flatten() {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return bad("entries are not a permutation of 1..n");
            }
            seen[v] = true;
        }
        if !self.is_legal() {
            return bad("rows or columns are not increasing");
        }
        Ok(())
    }

    pub fn shape(&self) -> SkewShape {
        self.shape
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// Largest entry, `a + 2i + b - 2`.
    pub fn size(&self) -> u32 {
        self.shape.cell_count() as u32
    }

    /// Entry at `(row, column)`, if that cell exists.
    pub fn entry(&self, row: i64, col: usize) -> Option<u32> {
        let column = self.columns.get(col)?;
        let offset = row - self.shape.column_top(col);
        usize::try_from(offset).ok().and_then(|k| column.get(k).copied())
    }

    pub fn is_legal(&self) -> bool {
        for (c, column) in self.columns.iter().enumerate() {
            if column.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if c == 0 {
                continue;
            }
            let top = self.shape.column_top(c);
            for (k, &v) in column.iter().enumerate() {
                if let Some(left) = self.entry(top + k as i64, c - 1) {
                    if left >= v {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn flat(&self) -> impl Iterator<Item = u32> + '_ {
        self.columns.iter().flatten().copied()
    }

    fn from_values(shape: SkewShape, values: &[u32]) -> Self {
        let mut it = values.iter().copied();
        let columns = shape
            .column_heights()
            .into_iter()
            .map(|h| it.by_ref().take(h).collect())
            .collect();
        Self { shape, columns }
    }

    /// Entry 1 at the top of the left column, and the `a - 2` largest entries
    /// filling the left column below row 1.
    pub fn is_overline(&self) -> bool {
        let n = self.size();
        let left = &self.columns[0];
        let tail = &left[2.min(left.len())..];
        left.first() == Some(&1)
            && tail
                .iter()
                .enumerate()
                .all(|(k, &v)| v == n - tail.len() as u32 + 1 + k as u32)
    }
}

/// Column-major order of cells, matching the storage order of `Filling`.
fn visit_fillings(shape: SkewShape, mut visit: impl FnMut(&Filling)) {
    if !shape.is_fillable() {
        return;
    }
    shape
        .poset()
        .for_each_extension(|values| visit(&Filling::from_values(shape, values)));
}

/// All legal fillings of `(a, i, b)`, sorted lexicographically by the
/// column-major entry sequence. Empty when `a < 2` or `b < 2`.
pub fn enumerate_skyt(a: usize, i: usize, b: usize) -> Result<Vec<Filling>> {
    let shape = SkewShape::new(a, i, b)?;
    let mut out = Vec::new();
    visit_fillings(shape, |f| out.push(f.clone()));
    out.sort_by(|x, y| x.flat().cmp(y.flat()));
    Ok(out)
}

/// Backtracking count of legal fillings without materializing them.
pub fn count_skyt_backtracking(a: usize, i: usize, b: usize) -> Result<BigInt> {
    let shape = SkewShape::new(a, i, b)?;
    if !shape.is_fillable() {
        return Ok(BigInt::zero());
    }
    Ok(BigInt::from(shape.poset().count_extensions()))
}

/// `#SkYT(a, i, b)` by inclusion-exclusion over straight shapes:
/// `sum_{k=0}^{b-2} (-1)^k C(a + 2i + b - 2, b - k - 2) #SYT(a, i, k)`.
///
/// Conventions: 1 when `i = 0`; 0 when `i > 0` and `min(a, b) < 2`.
/// Negative arguments count as out of range and give 0.
pub fn count_skyt(a: i64, i: i64, b: i64) -> BigInt {
    if i < 0 || a < 0 || b < 0 && i != 0 {
        return BigInt::zero();
    }
    if i == 0 {
        return BigInt::one();
    }
    if a < 2 || b < 2 {
        return BigInt::zero();
    }
    let n = a + 2 * i + b - 2;
    (0..=b - 2)
        .map(|k| {
            let syt = count_syt(a as usize, i as usize, k as usize).expect("a >= 2");
            let term = binomial(n, b - k - 2) * syt;
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// The 180-degree rotation with entries `v -> n + 1 - v`; maps `SkYT(a,i,b)` to `SkYT(b,i,a)`.
pub fn involution_rotate(f: &Filling) -> Filling {
    let n = f.size();
    let columns = f
        .columns
        .iter()
        .rev()
        .map(|col| col.iter().rev().map(|&v| n + 1 - v).collect())
        .collect();
    Filling {
        shape: f.shape.rotated(),
        columns,
    }
}

fn overline_cache() -> &'static Mutex<HashMap<(i64, i64), BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), BigInt>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `#overline-SkYT(i, b)`: fillings of `SkYT(2, i, b)` with 1 in the top-left
/// cell. Zero for `i = 0` by convention and whenever `b < 2`.
pub fn count_overline_skyt(i: i64, b: i64) -> BigInt {
    if i <= 0 || b < 2 {
        return BigInt::zero();
    }
    if let Some(v) = overline_cache().lock().unwrap().get(&(i, b)) {
        return v.clone();
    }
    let shape = SkewShape::new(2, i as usize, b as usize).expect("i >= 1");
    let mut n = 0u64;
    visit_fillings(shape, |f| {
        if f.columns[0][0] == 1 {
            n += 1;
        }
    });
    let v = BigInt::from(n);
    overline_cache().lock().unwrap().insert((i, b), v.clone());
    v
}

/// The three boundary conditions defining `SkYT_rho(m + 1, i, d - 2i + 1)`.
pub fn in_skyt_rho(f: &Filling, d: usize, rho: usize) -> bool {
    let right = f.columns.last().expect("nonempty shape");
    let left = &f.columns[0];
    right[0] == 1
        || *right.last().unwrap() as usize > d + rho
        || left.get(2).is_some_and(|&v| (v as usize) < d + 1)
}

/// `#SkYT_rho(m + 1, i, d - 2i + 1)` by filtered enumeration.
///
/// 1 for `i = 0` (any `d`); 0 for `i >= 1` with `2i >= d`.
pub fn count_skyt_rho_direct(m: usize, d: usize, i: usize, rho: usize) -> Result<BigInt> {
    let p = RhoUniformParams::new(m, d, rho)?;
    if i == 0 {
        return Ok(BigInt::one());
    }
    if 2 * i >= d {
        return Ok(BigInt::zero());
    }
    let shape = SkewShape::new(m + 1, i, d - 2 * i + 1)?;
    let mut n = 0u64;
    visit_fillings(shape, |f| {
        if in_skyt_rho(f, p.d, p.removed()) {
            n += 1;
        }
    });
    Ok(BigInt::from(n))
}

/// The map `(j, f) -> j . f-bar` from `{0..m-1} x SkYT(2, i, b)` into `SkYT(m + 1, i, b)`.
///
/// `f-bar` appends `n + 1, ..., n + m - 1` below the left column (`n = 2i + b`);
/// for `j >= 1` the entry `n + j` then swaps into the bottom-right cell and
/// `n` joins the tail, which stays sorted.
pub fn iota_action(j: usize, f: &Filling, m: usize) -> Result<Filling> {
    if f.shape.a != 2 {
        return Err(Error::InvalidShape(format!(
            "iota acts on SkYT(2, i, b), got a = {}",
            f.shape.a
        )));
    }
    if j >= m {
        return Err(Error::IndexOutOfRange { index: j, bound: m });
    }
    let n = f.size();
    let mut columns = f.columns.clone();
    let mut tail: Vec<u32> = (n + 1..n + m as u32).collect();
    if j >= 1 {
        let moved = n + j as u32;
        tail.retain(|&v| v != moved);
        tail.insert(0, n);
        *columns.last_mut().unwrap().last_mut().unwrap() = moved;
    }
    columns[0].extend(tail);
    Ok(Filling {
        shape: SkewShape {
            a: m + 1,
            i: f.shape.i,
            b: f.shape.b,
        },
        columns,
    })
}
