//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use heffter::embed::Embedding;
use heffter::format::parse_array;
use heffter::{FaceColor, PFArray, Residue};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.txt"))
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

pub fn fixture(name: &str) -> PFArray {
    parse_array(&fixture_text(name)).unwrap()
}

/// The bold cells of the H(7;5) example, 1-based.
pub const H75_TRANSVERSAL: &str = "1,1;2,2;3,3;4,4;5,6;6,5;7,7";

pub fn res(xs: &[i64], v: u64) -> Vec<Residue> {
    xs.iter().map(|&x| Residue::new(x, v)).collect()
}

/// No contiguous block other than the whole list sums to 0 mod `v`.
pub fn oracle_simple(xs: &[i64], v: i64) -> bool {
    let k = xs.len();
    for b in 0..k {
        let mut s = 0i64;
        for (c, x) in xs.iter().enumerate().skip(b) {
            s = (s + x).rem_euclid(v);
            if s == 0 && !(b == 0 && c == k - 1) {
                return false;
            }
        }
    }
    true
}

/// Partial sums pairwise distinct and all nonzero.
pub fn oracle_distinct_nonzero(xs: &[i64], v: i64) -> bool {
    let mut seen = vec![false; v as usize];
    let mut s = 0i64;
    for x in xs {
        s = (s + x).rem_euclid(v);
        if s == 0 || seen[s as usize] {
            return false;
        }
        seen[s as usize] = true;
    }
    true
}

/// Row `i` of the diagonal construction, read from `a_{i,i}`: odd positions
/// `2l+1` hold `(i-1)k + l + 1`, even positions `2l` hold `-l`.
pub fn diagonal_row_sums_closed_form(i: usize, k: usize) -> Vec<i64> {
    (1..=k)
        .map(|p| {
            if p % 2 == 1 {
                ((i - 1) * k + (p - 1) / 2 + 1) as i64
            } else {
                -((p / 2) as i64)
            }
        })
        .collect()
}

/// Column `j` of the rectangular construction, read top to bottom:
/// `±(j, -n, n+j, -2n, 2n+j, ...)` with `+` for odd `j`.
pub fn rectangular_column_sums_closed_form(j: usize, m: usize, n: usize) -> Vec<i64> {
    let sign = if j % 2 == 1 { 1 } else { -1 };
    (1..=m)
        .map(|p| {
            let l = (p / 2) as i64;
            let x = if p % 2 == 1 {
                l * n as i64 + j as i64
            } else {
                -l * n as i64
            };
            sign * x
        })
        .collect()
}

/// Every undirected edge lies on exactly two faces of different colors,
/// face lengths add up to `2E` and Euler's formula gives the reported genus.
pub fn embedding_invariants(emb: &Embedding) -> Result<(), String> {
    let v = emb.vertices;
    let mut seen: HashMap<(u64, u64), Vec<FaceColor>> = HashMap::new();
    let mut total = 0u64;
    for f in &emb.faces {
        let w = &f.circuit.vertices;
        total += w.len() as u64;
        for i in 0..w.len() {
            let (a, b) = (w[i].value(), w[(i + 1) % w.len()].value());
            seen.entry((a.min(b), a.max(b))).or_default().push(f.color);
        }
    }
    let edges = v * (v - 1) / 2;
    if seen.len() as u64 != edges || emb.edges != edges {
        return Err(format!("{} edges on faces, K_{v} has {edges}", seen.len()));
    }
    for (e, colors) in &seen {
        if colors.len() != 2 || colors[0] == colors[1] {
            return Err(format!("edge {e:?} lies on faces {colors:?}"));
        }
    }
    if total != 2 * edges {
        return Err(format!(
            "face lengths add to {total}, expected {}",
            2 * edges
        ));
    }
    let chi = v as i64 - edges as i64 + emb.faces.len() as i64;
    if chi != 2 - 2 * emb.genus as i64 {
        return Err(format!("chi = {chi} but genus = {}", emb.genus));
    }
    Ok(())
}
