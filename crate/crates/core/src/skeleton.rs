use std::collections::BTreeSet;

use crate::array::Cell;
use crate::residue::{gcd, lcm};
use crate::{Error, Result};

/// A filling pattern with `h` cells per row and `k` per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    pub m: usize,
    pub n: usize,
    pub h: usize,
    pub k: usize,
    pub filled: BTreeSet<Cell>,
}

impl Skeleton {
    pub fn row_count(&self, i: usize) -> usize {
        self.filled.iter().filter(|c| c.row == i).count()
    }

    pub fn column_count(&self, j: usize) -> usize {
        self.filled.iter().filter(|c| c.col == j).count()
    }
}

/// Union of the cosets `S + (0, j)`, `j = 0..r`, of `S = <(1,1)>` in
/// `Z_m x Z_n`, where `r = nk / lcm(m, n)`.
///
/// Distinct `j < r` give distinct cosets: `(0, d)` lies in `S` only when
/// `gcd(m, n)` divides `d`, and `r <= gcd(m, n)` because `k <= m`.
pub fn build_skeleton(m: usize, n: usize, h: usize, k: usize) -> Result<Skeleton> {
    if m == 0 || n == 0 || h == 0 || h > n || k == 0 || k > m || m * h != n * k {
        return Err(Error::InvalidParameters(format!(
            "skeleton needs m*h = n*k, 1 <= h <= n, 1 <= k <= m; got m={m} n={n} h={h} k={k}"
        )));
    }
    let order = lcm(m as u64, n as u64) as usize;
    let r = n * k / order;
    debug_assert!(r <= gcd(m as u64, n as u64) as usize);
    let mut filled = BTreeSet::new();
    for j in 0..r {
        for s in 0..order {
            filled.insert(Cell::new(s % m + 1, (s + j) % n + 1));
        }
    }
    Ok(Skeleton { m, n, h, k, filled })
}
