use std::collections::{BTreeSet, VecDeque};

use crate::array::{Cell, PFArray};
use crate::{Error, Result};

/// `n` filled cells of a square array, one in each row and each column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    pub cells: Vec<Cell>,
}

impl Transversal {
    pub fn new(mut cells: Vec<Cell>) -> Self {
        cells.sort();
        Transversal { cells }
    }

    pub fn validate(&self, array: &PFArray) -> Result<()> {
        let p = array.params();
        if !p.is_square() {
            return Err(Error::Shape(format!(
                "transversals need a square array, got {}x{}",
                p.m, p.n
            )));
        }
        if self.cells.len() != p.n {
            return Err(Error::Transversal(format!(
                "expected {} cells, got {}",
                p.n,
                self.cells.len()
            )));
        }
        let mut rows = BTreeSet::new();
        let mut cols = BTreeSet::new();
        for &c in &self.cells {
            if c.row == 0 || c.row > p.m || c.col == 0 || c.col > p.n {
                return Err(Error::Transversal(format!("cell {c} is outside the array")));
            }
            if array.get_cell(c).is_none() {
                return Err(Error::Transversal(format!("cell {c} is empty")));
            }
            if !rows.insert(c.row) {
                return Err(Error::Transversal(format!("row {} used twice", c.row)));
            }
            if !cols.insert(c.col) {
                return Err(Error::Transversal(format!("column {} used twice", c.col)));
            }
        }
        Ok(())
    }
}

/// A perfect matching of the bipartite row/column graph whose edges are the
/// filled cells, found with Hopcroft-Karp.
pub fn find_transversal(array: &PFArray) -> Result<Transversal> {
    let p = array.params();
    if !p.is_square() {
        return Err(Error::Shape(format!(
            "transversals need a square array, got {}x{}",
            p.m, p.n
        )));
    }
    let n = p.n;
    let adj: Vec<Vec<usize>> = (1..=n)
        .map(|i| array.row(i).into_iter().map(|(c, _)| c.col - 1).collect())
        .collect();
    let matching = hopcroft_karp(n, n, &adj);
    let cells: Option<Vec<Cell>> = matching
        .iter()
        .enumerate()
        .map(|(r, c)| c.map(|c| Cell::new(r + 1, c + 1)))
        .collect();
    let t =
        Transversal::new(cells.ok_or_else(|| {
            Error::Transversal("the filled cells admit no perfect matching".into())
        })?);
    t.validate(array)?;
    Ok(t)
}

/// Maximum matching from the left side; `adj[u]` lists right vertices.
/// Returns the partner of each left vertex.
pub fn hopcroft_karp(left: usize, right: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    const INF: usize = usize::MAX;
    let mut match_l: Vec<Option<usize>> = vec![None; left];
    let mut match_r: Vec<Option<usize>> = vec![None; right];
    let mut dist = vec![INF; left];

    loop {
        // layer free left vertices
        let mut queue = VecDeque::new();
        for u in 0..left {
            if match_l[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                match match_r[w] {
                    None => found = true,
                    Some(u2) if dist[u2] == INF => {
                        dist[u2] = dist[u] + 1;
                        queue.push_back(u2);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; left];
        for u in 0..left {
            if match_l[u].is_none() {
                augment(u, adj, &mut match_l, &mut match_r, &mut dist, &mut next);
            }
        }
    }
    match_l
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    match_l: &mut [Option<usize>],
    match_r: &mut [Option<usize>],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    while next[u] < adj[u].len() {
        let w = adj[u][next[u]];
        next[u] += 1;
        let ok = match match_r[w] {
            None => true,
            Some(u2) => {
                dist[u2] == dist[u].wrapping_add(1)
                    && augment(u2, adj, match_l, match_r, dist, next)
            }
        };
        if ok {
            match_l[u] = Some(w);
            match_r[w] = Some(u);
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ArrayParams;
    use crate::residue::Residue;
    use crate::skeleton::build_skeleton;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fill(n: usize, k: usize, cells: &[Cell]) -> PFArray {
        let p = ArrayParams::square(n, k).unwrap();
        PFArray::from_entries(
            p,
            cells
                .iter()
                .enumerate()
                .map(|(i, &c)| (c, Residue::new(i as i64 + 1, p.v))),
        )
        .unwrap()
    }

    #[test]
    fn diagonal_pattern_gives_main_diagonal() {
        let cells: Vec<Cell> = (1..=5).map(|i| Cell::new(i, i)).collect();
        let a = fill(5, 1, &cells);
        assert_eq!(find_transversal(&a).unwrap().cells, cells);
    }

    #[test]
    fn full_array() {
        let cells: Vec<Cell> = (1..=3)
            .flat_map(|i| (1..=3).map(move |j| Cell::new(i, j)))
            .collect();
        let a = fill(3, 3, &cells);
        let t = find_transversal(&a).unwrap();
        t.validate(&a).unwrap();
    }

    #[test]
    fn rejects_non_square() {
        let p = ArrayParams::new(1, 2, 2, 1, 1).unwrap();
        let a = PFArray::from_rows(p, &[vec![Some(1), Some(2)]]).unwrap();
        assert!(matches!(find_transversal(&a), Err(Error::Shape(_))));
    }

    #[test]
    fn invalid_transversals_rejected() {
        let cells: Vec<Cell> = (1..=3).map(|i| Cell::new(i, i)).collect();
        let a = fill(3, 1, &cells);
        let dup = Transversal::new(vec![Cell::new(1, 1), Cell::new(1, 1), Cell::new(3, 3)]);
        assert!(dup.validate(&a).is_err());
        let empty = Transversal::new(vec![Cell::new(1, 2), Cell::new(2, 1), Cell::new(3, 3)]);
        assert!(empty.validate(&a).is_err());
    }

    /// Random square skeletons with rows and columns shuffled.
    #[test]
    fn random_regular_patterns_always_match() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..200 {
            let n = rng.random_range(1..=12);
            let k = rng.random_range(1..=n);
            let s = build_skeleton(n, n, k, k).unwrap();
            let mut pr: Vec<usize> = (1..=n).collect();
            let mut pc: Vec<usize> = (1..=n).collect();
            pr.shuffle(&mut rng);
            pc.shuffle(&mut rng);
            let cells: Vec<Cell> = s
                .filled
                .iter()
                .map(|c| Cell::new(pr[c.row - 1], pc[c.col - 1]))
                .collect();
            let a = fill(n, k, &cells);
            let t = find_transversal(&a).unwrap();
            t.validate(&a).unwrap();
        }
    }
}
