use std::fmt;

use serde::{Deserialize, Serialize};

use crate::residue::Residue;
use crate::{Error, Result};

/// Shape and group parameters of a non-zero sum Heffter array with
/// pairwise distinct entries.
///
/// The array has `m` rows and `n` columns, `h` filled cells per row and
/// `k` per column. Entries live in `Z_v` with `v = 2nk + t`, avoiding the
/// subgroup `J` of order `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArrayParams {
    pub m: usize,
    pub n: usize,
    pub h: usize,
    pub k: usize,
    pub t: u64,
    pub v: u64,
}

impl ArrayParams {
    pub fn new(m: usize, n: usize, h: usize, k: usize, t: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameters(format!(
                "array must have at least one row and column, got {m}x{n}"
            )));
        }
        if h == 0 || h > n {
            return Err(Error::InvalidParameters(format!(
                "need 1 <= h <= n, got h={h}, n={n}"
            )));
        }
        if k == 0 || k > m {
            return Err(Error::InvalidParameters(format!(
                "need 1 <= k <= m, got k={k}, m={m}"
            )));
        }
        if m * h != n * k {
            return Err(Error::InvalidParameters(format!(
                "need m*h = n*k, got {m}*{h} != {n}*{k}"
            )));
        }
        let cells = 2 * (n * k) as u64;
        if t == 0 || !cells.is_multiple_of(t) {
            return Err(Error::InvalidParameters(format!(
                "t={t} must divide 2nk={cells}"
            )));
        }
        Ok(ArrayParams {
            m,
            n,
            h,
            k,
            t,
            v: cells + t,
        })
    }

    /// Square parameters `(n, n, k, k, 1)`.
    pub fn square(n: usize, k: usize) -> Result<Self> {
        ArrayParams::new(n, n, k, k, 1)
    }

    pub fn is_square(&self) -> bool {
        self.m == self.n
    }

    /// Number of filled cells, `nk`.
    pub fn filled(&self) -> usize {
        self.n * self.k
    }

    pub fn residue(&self, value: i64) -> Residue {
        Residue::new(value, self.v)
    }

    /// Whether `x` lies in the subgroup of order `t`.
    pub fn in_subgroup(&self, x: Residue) -> bool {
        x.value().is_multiple_of(self.v / self.t)
    }

    pub fn subgroup_j(&self) -> Vec<Residue> {
        subgroup_j(self.t, self.v)
    }
}

impl fmt::Display for ArrayParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={} n={} h={} k={} t={} v={}",
            self.m, self.n, self.h, self.k, self.t, self.v
        )
    }
}

/// The `t` multiples of `v/t` in `Z_v`.
pub fn subgroup_j(t: u64, v: u64) -> Vec<Residue> {
    assert!(t >= 1 && v.is_multiple_of(t), "t must divide v");
    let step = v / t;
    (0..t)
        .map(|i| Residue::from_canonical(i * step, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(xs: Vec<Residue>) -> Vec<u64> {
        xs.into_iter().map(Residue::value).collect()
    }

    #[test]
    fn subgroup_examples() {
        assert_eq!(values(subgroup_j(1, 25)), vec![0]);
        assert_eq!(values(subgroup_j(2, 26)), vec![0, 13]);
        // multiples of 27/3 enumerated directly
        let expected: Vec<u64> = (0..27).filter(|x| (x * 3) % 27 == 0).collect();
        assert_eq!(values(subgroup_j(3, 27)), expected);
        assert_eq!(expected, vec![0, 9, 18]);
    }

    #[test]
    fn modulus_and_validation() {
        let p = ArrayParams::new(3, 4, 4, 3, 1).unwrap();
        assert_eq!(p.v, 25);
        assert_eq!(ArrayParams::new(2, 3, 3, 2, 3).unwrap().v, 15);
        assert!(ArrayParams::new(3, 4, 3, 3, 1).is_err());
        assert!(ArrayParams::new(3, 3, 4, 4, 1).is_err());
        assert!(ArrayParams::new(3, 3, 2, 2, 5).is_err());
        assert!(ArrayParams::new(0, 3, 2, 2, 1).is_err());
    }

    #[test]
    fn subgroup_membership() {
        let p = ArrayParams::new(2, 3, 3, 2, 2).unwrap();
        assert_eq!(p.v, 14);
        assert!(p.in_subgroup(p.residue(7)));
        assert!(p.in_subgroup(p.residue(0)));
        assert!(!p.in_subgroup(p.residue(3)));
    }
}
