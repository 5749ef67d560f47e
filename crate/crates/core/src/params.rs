use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters of `U_{m,d}(rho)`: rank `d` on `m + d` elements with `rho`
/// pairwise-disjoint bases `[d]_0, ..., [d]_{rho-1}` removed, where
/// `[d]_l = {l*d + 1, ..., l*d + d}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RhoUniformParams {
    pub m: usize,
    pub d: usize,
    pub rho: usize,
}

impl RhoUniformParams {
    pub fn new(m: usize, d: usize, rho: usize) -> Result<Self> {
        let p = Self { m, d, rho };
        p.validate()?;
        Ok(p)
    }

    pub fn uniform(m: usize, d: usize) -> Result<Self> {
        Self::new(m, d, 0)
    }

    pub fn validate(&self) -> Result<()> {
        let Self { m, d, rho } = *self;
        let fail = |why: String| Err(Error::InvalidParameters(format!("U_{{{m},{d}}}({rho}): {why}")));
        if m == 0 {
            return fail("m must be at least 1".into());
        }
        if d == 0 {
            // U_{m,0}(rho) is U_{m,0} whatever rho is.
            return Ok(());
        }
        if rho >= 1 && d == 1 {
            return fail("removing bases needs rank at least 2".into());
        }
        if rho > 1 && m < d * (rho - 1) {
            return fail(format!("need m >= d(rho - 1) = {}", d * (rho - 1)));
        }
        Ok(())
    }

    /// Number of ground-set elements, `m + d`.
    pub fn ground_size(&self) -> usize {
        self.m + self.d
    }

    /// Bases actually removed; zero for rank 0 by convention.
    pub fn removed(&self) -> usize {
        if self.d == 0 {
            0
        } else {
            self.rho
        }
    }

    /// Coefficient indices `i` with `2i < d`.
    pub fn coefficient_range(&self) -> std::ops::Range<usize> {
        0..self.d.div_ceil(2)
    }

    /// All valid parameter triples with `m + d <= max_n`, in lexicographic `(m, d, rho)` order.
    pub fn all_up_to(max_n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for m in 1..=max_n {
            for d in 0..=max_n - m {
                let rho_max = if d == 0 { 0 } else { (m + d) / d };
                for rho in 0..=rho_max {
                    if let Ok(p) = Self::new(m, d, rho) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for RhoUniformParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "U_{{{},{}}}({})", self.m, self.d, self.rho)
    }
}
