//! Constructions of non-zero sum Heffter arrays.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::array::{Cell, PFArray};
use crate::params::ArrayParams;
use crate::residue::Residue;
use crate::skeleton::build_skeleton;
use crate::transversal::{find_transversal, Transversal};
use crate::verify::{verify_heffter, verify_nh, OrderingPair};
use crate::{Error, Result};

pub const DEFAULT_MAX_ATTEMPTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    K1,
    K2,
    Diagonal,
    Rectangular,
    FromHeffter,
    Random,
}

impl Method {
    /// The result the construction comes from.
    pub fn label(self) -> &'static str {
        match self {
            Method::K1 => "diagonal NH(n;1), a_{i,i} = i",
            Method::K2 => "NH(n;2), a_{i,i} = i and a_{i,i+1} = n+i",
            Method::Diagonal => "cyclically k-diagonal globally simple NH(n;k)",
            Method::Rectangular => "globally simple NH(m,n;n,m) with no empty cells",
            Method::FromHeffter => {
                "sign flip of a transversal of a relative Heffter array H_t(n;k)"
            }
            Method::Random => "random filling of a coset skeleton (probabilistic existence)",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::K1 => "k1",
            Method::K2 => "k2",
            Method::Diagonal => "diagonal",
            Method::Rectangular => "rectangular",
            Method::FromHeffter => "from-heffter",
            Method::Random => "random",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub array: PFArray,
    pub method: Method,
    /// Fillings tried (randomized method only).
    pub attempts: Option<usize>,
    /// Seed used (randomized method only).
    pub seed: Option<u64>,
}

impl ConstructionReport {
    fn direct(array: PFArray, method: Method) -> Self {
        ConstructionReport {
            array,
            method,
            attempts: None,
            seed: None,
        }
    }
}

pub fn nh_k1(n: usize) -> Result<PFArray> {
    let p = ArrayParams::square(n, 1)?;
    PFArray::from_entries(p, (1..=n).map(|i| (Cell::new(i, i), p.residue(i as i64))))
}

pub fn nh_k2(n: usize) -> Result<PFArray> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "NH(n;2) needs n >= 2, got {n}"
        )));
    }
    let p = ArrayParams::square(n, 2)?;
    let entries = (1..=n).flat_map(|i| {
        [
            (Cell::new(i, i), p.residue(i as i64)),
            (Cell::new(i, i % n + 1), p.residue((n + i) as i64)),
        ]
    });
    PFArray::from_entries(p, entries)
}

/// `a_{i,i+r} = (-1)^r (r + 1 + (i-1)k)` for `0 <= r < k`, columns mod `n`.
pub fn nh_diagonal(n: usize, k: usize) -> Result<PFArray> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "cyclically k-diagonal arrays need n >= k >= 1, got n={n} k={k}"
        )));
    }
    let p = ArrayParams::square(n, k)?;
    let entries = (1..=n).flat_map(|i| {
        (0..k).map(move |r| {
            let magnitude = (r + 1 + (i - 1) * k) as i64;
            let value = if r % 2 == 0 { magnitude } else { -magnitude };
            (Cell::new(i, (i - 1 + r) % n + 1), p.residue(value))
        })
    });
    PFArray::from_entries(p, entries)
}

/// Orderings that read each line of a band array cyclically from the start
/// of its band: row `i` from `a_{i,i}`, column `j` from `a_{j-k+1,j}`.
///
/// The left-to-right orderings of `nh_diagonal` are not always simple (odd
/// `k >= 5` has failures), but these band orderings are.
pub fn band_orderings(array: &PFArray) -> Result<OrderingPair> {
    let p = array.params();
    if !p.is_square() {
        return Err(Error::Shape(format!(
            "need a square array, got {}x{}",
            p.m, p.n
        )));
    }
    let (n, k) = (p.n, p.k);
    let at = |i: usize, j: usize| {
        array
            .get(i, j)
            .ok_or_else(|| Error::Shape(format!("cell ({i},{j}) is empty, not a band array")))
    };
    let rows = (1..=n)
        .map(|i| {
            (0..k)
                .map(|r| at(i, (i - 1 + r) % n + 1))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let columns = (1..=n)
        .map(|j| {
            (0..k)
                .map(|s| at((j - 1 + n + s + 1 - k) % n + 1, j))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OrderingPair { rows, columns })
}

/// `a_{i,j} = (-1)^{i+j} (j + (i-1)n)` on a fully filled `m x n` array.
pub fn nh_rectangular(m: usize, n: usize) -> Result<PFArray> {
    let p = ArrayParams::new(m, n, n, m, 1)?;
    let entries = (1..=m).flat_map(|i| {
        (1..=n).map(move |j| {
            let magnitude = (j + (i - 1) * n) as i64;
            let value = if (i + j) % 2 == 0 {
                magnitude
            } else {
                -magnitude
            };
            (Cell::new(i, j), p.residue(value))
        })
    });
    PFArray::from_entries(p, entries)
}

/// Negates one transversal of a square relative Heffter array.
///
/// Every line of the input sums to zero, so flipping exactly one entry `x`
/// per line leaves the sum `-2x`, which is nonzero because the entries avoid
/// the involution.
pub fn nh_from_heffter(array: &PFArray, transversal: Option<&Transversal>) -> Result<PFArray> {
    let p = array.params();
    if !p.is_square() {
        return Err(Error::Shape(format!(
            "need a square array, got {}x{}",
            p.m, p.n
        )));
    }
    let verdict = verify_heffter(array);
    if !verdict.is_valid() {
        let first: Vec<String> = verdict
            .violations
            .iter()
            .take(3)
            .map(|v| v.to_string())
            .collect();
        return Err(Error::NotHeffter(first.join("; ")));
    }
    let chosen = match transversal {
        Some(t) => {
            t.validate(array)?;
            t.clone()
        }
        None => find_transversal(array)?,
    };
    array.with_negated(&chosen.cells)
}

/// Parameters for the randomized construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub m: usize,
    pub n: usize,
    pub h: usize,
    pub k: usize,
    pub t: u64,
    pub seed: u64,
    pub max_attempts: usize,
}

/// Fills the coset skeleton with one random sign of each pair `{x, -x}` of
/// `Z_v \ J`, in random positions, until every line sum is nonzero.
///
/// Single-row and single-column arrays are repaired instead of resampled:
/// a zero line sum becomes nonzero by negating its first entry.
pub fn nh_random(spec: RandomSpec) -> Result<ConstructionReport> {
    let p = ArrayParams::new(spec.m, spec.n, spec.h, spec.k, spec.t)?;
    if spec.max_attempts == 0 {
        return Err(Error::InvalidParameters(
            "max_attempts must be positive".into(),
        ));
    }
    let skeleton = build_skeleton(p.m, p.n, p.h, p.k)?;
    let cells: Vec<Cell> = skeleton.filled.iter().copied().collect();
    let pairs: Vec<u64> = (1..p.v)
        .filter(|&x| 2 * x < p.v && !p.in_subgroup(Residue::from_canonical(x, p.v)))
        .collect();
    debug_assert_eq!(pairs.len(), cells.len());

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for attempt in 1..=spec.max_attempts {
        let mut values: Vec<Residue> = pairs
            .iter()
            .map(|&x| {
                let r = Residue::from_canonical(x, p.v);
                if rng.random_bool(0.5) {
                    r
                } else {
                    -r
                }
            })
            .collect();
        values.shuffle(&mut rng);
        let mut array = PFArray::from_entries(p, cells.iter().copied().zip(values))?;
        if p.m == 1 || p.n == 1 {
            array = repair_single_line(&array)?;
        }
        if verify_nh(&array).is_valid() {
            return Ok(ConstructionReport {
                array,
                method: Method::Random,
                attempts: Some(attempt),
                seed: Some(spec.seed),
            });
        }
    }
    Err(Error::Exhausted {
        attempts: spec.max_attempts,
        seed: spec.seed,
    })
}

fn repair_single_line(array: &PFArray) -> Result<PFArray> {
    let p = array.params();
    let zero = if p.m == 1 {
        array.row_sum(1).is_zero()
    } else {
        array.column_sum(1).is_zero()
    };
    if !zero {
        return Ok(array.clone());
    }
    // cells come back in row-major order, which is lexicographic
    for (cell, x) in array.entries() {
        // negating x moves the sum from 0 to -2x
        if !(x * 2).is_zero() {
            return array.with_negated(&[cell]);
        }
    }
    Ok(array.clone())
}

/// Dispatches to the construction named by `method`.
pub fn construct(
    method: Method,
    m: Option<usize>,
    n: Option<usize>,
    k: Option<usize>,
) -> Result<ConstructionReport> {
    let need = |x: Option<usize>, name: &str| {
        x.ok_or_else(|| Error::InvalidParameters(format!("method {method} needs -{name}")))
    };
    let array = match method {
        Method::K1 => nh_k1(need(n, "n")?)?,
        Method::K2 => nh_k2(need(n, "n")?)?,
        Method::Diagonal => nh_diagonal(need(n, "n")?, need(k, "k")?)?,
        Method::Rectangular => nh_rectangular(need(m, "m")?, need(n, "n")?)?,
        Method::FromHeffter | Method::Random => {
            return Err(Error::InvalidParameters(format!(
                "method {method} needs its dedicated entry point"
            )))
        }
    };
    Ok(ConstructionReport::direct(array, method))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::is_globally_simple;

    fn rows(a: &PFArray) -> Vec<Vec<Option<i64>>> {
        let p = a.params();
        (1..=p.m)
            .map(|i| (1..=p.n).map(|j| a.get(i, j).map(|x| x.signed())).collect())
            .collect()
    }

    #[test]
    fn k1_examples() {
        let a = nh_k1(1).unwrap();
        assert_eq!(a.params().v, 3);
        assert_eq!(rows(&a), vec![vec![Some(1)]]);
        let a = nh_k1(3).unwrap();
        assert_eq!(a.params().v, 7);
        assert_eq!(
            rows(&a),
            vec![
                vec![Some(1), None, None],
                vec![None, Some(2), None],
                vec![None, None, Some(3)]
            ]
        );
        assert_eq!(nh_k1(5).unwrap().params().v, 11);
        assert!(verify_nh(&nh_k1(5).unwrap()).is_valid());
    }

    #[test]
    fn k2_examples() {
        let a = nh_k2(2).unwrap();
        assert_eq!(a.params().v, 9);
        assert_eq!(
            rows(&a),
            vec![vec![Some(1), Some(3)], vec![Some(4), Some(2)]]
        );
        let a = nh_k2(3).unwrap();
        assert_eq!(a.params().v, 13);
        assert_eq!(
            rows(&a),
            vec![
                vec![Some(1), Some(4), None],
                vec![None, Some(2), Some(5)],
                vec![Some(6), None, Some(3)]
            ]
        );
        let rs: Vec<i64> = (1..=3).map(|i| a.row_sum(i).signed()).collect();
        let cs: Vec<i64> = (1..=3).map(|j| a.column_sum(j).signed()).collect();
        assert_eq!(rs, vec![5, -6, -4]); // 5, 7, 9 mod 13
        assert_eq!(cs, vec![-6, 6, -5]); // 7, 6, 8 mod 13
        let a = nh_k2(4).unwrap();
        assert_eq!(a.params().v, 17);
        let mut abs: Vec<i64> = a.entries().map(|(_, x)| x.signed().abs()).collect();
        abs.sort();
        assert_eq!(abs, (1..=8).collect::<Vec<_>>());
        assert!(verify_nh(&a).is_valid());
        assert!(nh_k2(1).is_err());
    }

    #[test]
    fn diagonal_degenerates_to_k1() {
        assert_eq!(nh_diagonal(3, 1).unwrap(), nh_k1(3).unwrap());
        assert!(nh_diagonal(3, 4).is_err());
    }

    #[test]
    fn diagonal_first_rows() {
        let a = nh_diagonal(11, 8).unwrap();
        let r1: Vec<Option<i64>> = rows(&a)[0].clone();
        let mut expected: Vec<Option<i64>> = (1..=8)
            .map(|x| Some(if x % 2 == 1 { x } else { -x }))
            .collect();
        expected.extend([None, None, None]);
        assert_eq!(r1, expected);
        let b = nh_diagonal(11, 9).unwrap();
        let r4 = &rows(&b)[3];
        assert_eq!(r4[0], Some(36));
        let stretch: Vec<i64> = r4[3..].iter().map(|x| x.unwrap()).collect();
        assert_eq!(stretch, vec![28, -29, 30, -31, 32, -33, 34, -35]);
    }

    #[test]
    fn diagonal_is_cyclically_k_diagonal() {
        for n in 1..=12 {
            for k in 1..=n {
                let a = nh_diagonal(n, k).unwrap();
                assert!(a.is_cyclically_k_diagonal(), "n={n} k={k}");
                let p = a.params();
                // filled cells: column - row in {0, .., k-1} mod n
                for (c, _) in a.entries() {
                    assert!((c.col + n - c.row) % n < k);
                }
                assert_eq!(p.filled(), n * k);
            }
        }
    }

    #[test]
    fn rectangular_examples() {
        let a = nh_rectangular(8, 5).unwrap();
        let r = rows(&a);
        assert_eq!(r[0], vec![Some(1), Some(-2), Some(3), Some(-4), Some(5)]);
        assert_eq!(r[1], vec![Some(-6), Some(7), Some(-8), Some(9), Some(-10)]);
        let b = nh_rectangular(9, 4).unwrap();
        assert_eq!(rows(&b)[8], vec![Some(33), Some(-34), Some(35), Some(-36)]);
        let c = nh_rectangular(1, 1).unwrap();
        assert_eq!(c.params().v, 3);
        assert_eq!(rows(&c), vec![vec![Some(1)]]);
    }

    #[test]
    fn small_constructions_are_simple() {
        for n in 1..=10 {
            for k in 1..=n {
                let a = nh_diagonal(n, k).unwrap();
                assert!(verify_nh(&a).is_valid());
                let band = band_orderings(&a).unwrap();
                band.validate(&a).unwrap();
                assert!(band.is_simple(), "diagonal {n} {k}");
                if k % 2 == 0 || k <= 3 {
                    assert!(is_globally_simple(&a).is_valid(), "diagonal {n} {k}");
                }
            }
            for m in 1..=10 {
                let a = nh_rectangular(m, n).unwrap();
                assert!(verify_nh(&a).is_valid());
                assert!(is_globally_simple(&a).is_valid(), "rectangular {m} {n}");
            }
        }
    }

    #[test]
    fn natural_rows_of_diagonal_5_5_are_not_all_simple() {
        // row 3 reads -14, 15, 11, -12, 13 and its first four entries sum to 0
        let a = nh_diagonal(5, 5).unwrap();
        let verdict = is_globally_simple(&a);
        assert!(verdict
            .violations
            .iter()
            .any(|v| v.to_string().starts_with("row 3")));
    }

    fn spec(m: usize, n: usize, h: usize, k: usize, t: u64, seed: u64) -> RandomSpec {
        RandomSpec {
            m,
            n,
            h,
            k,
            t,
            seed,
            max_attempts: DEFAULT_MAX_ATTEMPTS,
        }
    }

    #[test]
    fn random_examples() {
        for seed in 0..20 {
            let r = nh_random(spec(2, 3, 3, 2, 1, seed)).unwrap();
            assert_eq!(r.array.params().v, 13);
            assert!(verify_nh(&r.array).is_valid());

            let r = nh_random(spec(1, 4, 4, 1, 2, seed)).unwrap();
            assert_eq!(r.array.params().v, 10);
            assert!(verify_nh(&r.array).is_valid());
            assert_eq!(r.attempts, Some(1));

            let r = nh_random(spec(2, 2, 1, 1, 1, seed)).unwrap();
            assert_eq!(r.array.params().v, 5);
            assert_eq!(r.attempts, Some(1));
        }
    }

    #[test]
    fn random_is_deterministic() {
        let a = nh_random(spec(4, 6, 3, 2, 3, 7)).unwrap();
        let b = nh_random(spec(4, 6, 3, 2, 3, 7)).unwrap();
        assert_eq!(a.array, b.array);
        assert_eq!(a.attempts, b.attempts);
    }

    #[test]
    fn random_mean_attempts() {
        let total: usize = (0..1000)
            .map(|seed| {
                nh_random(spec(4, 6, 3, 2, 1, seed))
                    .unwrap()
                    .attempts
                    .unwrap()
            })
            .sum();
        assert!(
            total as f64 / 1000.0 <= 2.0,
            "mean attempts {}",
            total as f64 / 1000.0
        );
    }

    #[test]
    fn random_exhaustion_reports_seed() {
        // a single attempt cannot always succeed at (3, 3, 3, 3)
        let failing = (0..200).find_map(|seed| {
            let mut s = spec(3, 3, 3, 3, 1, seed);
            s.max_attempts = 1;
            nh_random(s).err()
        });
        match failing {
            Some(Error::Exhausted { attempts: 1, .. }) => {}
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn single_line_repair_flips_first_entry() {
        let p = ArrayParams::new(1, 3, 3, 1, 1).unwrap();
        let a = PFArray::from_rows(p, &[vec![Some(1), Some(2), Some(-3)]]).unwrap();
        let fixed = repair_single_line(&a).unwrap();
        assert_eq!(rows(&fixed), vec![vec![Some(-1), Some(2), Some(-3)]]);
    }

    #[test]
    fn from_heffter_rejects_non_heffter_input() {
        let a = nh_k1(3).unwrap();
        assert!(matches!(
            nh_from_heffter(&a, None),
            Err(Error::NotHeffter(_))
        ));
    }
}
