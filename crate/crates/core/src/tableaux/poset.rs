//! Linear extensions of a diagram of cells, ordered by "above" and "left of".

/// Cells of a diagram listed column-major (left to right, top to bottom),
/// each with a bitmask of the cells that must hold smaller entries.
#[derive(Debug, Clone)]
pub(crate) struct CellPoset {
    preds: Vec<u64>,
}

impl CellPoset {
    /// `columns[c] = (top_row, height)`; rows grow downward.
    pub fn from_columns(columns: &[(i64, usize)]) -> Self {
        let mut cells: Vec<(i64, usize)> = Vec::new();
        for (c, &(top, h)) in columns.iter().enumerate() {
            for r in 0..h as i64 {
                cells.push((top + r, c));
            }
        }
        assert!(cells.len() <= 64, "diagram too large");
        let index_of = |row: i64, col: usize| cells.iter().position(|&x| x == (row, col));
        let preds = cells
            .iter()
            .map(|&(row, col)| {
                let mut mask = 0u64;
                if let Some(k) = index_of(row - 1, col) {
                    mask |= 1 << k;
                }
                if col > 0 {
                    if let Some(k) = index_of(row, col - 1) {
                        mask |= 1 << k;
                    }
                }
                mask
            })
            .collect();
        Self { preds }
    }

    pub fn len(&self) -> usize {
        self.preds.len()
    }

    /// Calls `visit` with the entry of every cell (1-based) for each legal filling.
    ///
    /// Entries are placed in increasing order, each into a cell whose
    /// required predecessors are already filled.
    pub fn for_each_extension(&self, mut visit: impl FnMut(&[u32])) {
        let mut values = vec![0u32; self.len()];
        self.place(1, 0, &mut values, &mut visit);
    }

    fn place(&self, v: u32, filled: u64, values: &mut [u32], visit: &mut impl FnMut(&[u32])) {
        if v as usize > self.len() {
            visit(values);
            return;
        }
        for (k, &pred) in self.preds.iter().enumerate() {
            if filled & (1 << k) == 0 && pred & !filled == 0 {
                values[k] = v;
                self.place(v + 1, filled | (1 << k), values, visit);
            }
        }
    }

    pub fn count_extensions(&self) -> u64 {
        let mut n = 0u64;
        self.count_from(0, &mut n);
        n
    }

    fn count_from(&self, filled: u64, n: &mut u64) {
        if filled.count_ones() as usize == self.len() {
            *n += 1;
            return;
        }
        for (k, &pred) in self.preds.iter().enumerate() {
            if filled & (1 << k) == 0 && pred & !filled == 0 {
                self.count_from(filled | (1 << k), n);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_square() {
        let p = CellPoset::from_columns(&[(0, 2), (0, 2)]);
        assert_eq!(p.count_extensions(), 2);
        let mut seen = Vec::new();
        p.for_each_extension(|v| seen.push(v.to_vec()));
        seen.sort();
        assert_eq!(seen, vec![vec![1, 2, 3, 4], vec![1, 3, 2, 4]]);
    }

    #[test]
    fn single_chain_and_antichain() {
        assert_eq!(CellPoset::from_columns(&[(0, 5)]).count_extensions(), 1);
        // Separate columns with no shared rows are incomparable.
        assert_eq!(CellPoset::from_columns(&[(0, 1), (3, 1), (6, 1)]).count_extensions(), 6);
    }
}
