//! The Archdeacon embedding of `K_v` built from a simple non-zero sum
//! Heffter array with compatible orderings.
//!
//! Directed edges are stored as `(tail, difference)`; the rotation acts on
//! the difference only.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::array::PFArray;
use crate::decomp::{circuit_set, Circuit, Decomposition};
use crate::params::ArrayParams;
use crate::residue::{gcd, is_prime, Residue};
use crate::verify::{is_simple_ordering, verify_nh, OrderingPair, SearchOutcome};
use crate::{Error, Result};

const NONE: u64 = u64::MAX;

/// Largest number of cyclic orders enumerated per line in the full search.
pub const MAX_CYCLIC_ORDERS_PER_LINE: usize = 5040;

/// Cyclic successor map `x -> next` over residue values (`NONE` elsewhere).
fn successor_map(lines: &[Vec<Residue>], v: u64) -> Vec<u64> {
    let mut next = vec![NONE; v as usize];
    for line in lines {
        for (i, x) in line.iter().enumerate() {
            next[x.value() as usize] = line[(i + 1) % line.len()].value();
        }
    }
    next
}

/// Whether `omega_c ∘ omega_r` is a single cycle through every filled cell.
pub fn compatible(orderings: &OrderingPair, array: &PFArray) -> bool {
    if orderings.validate(array).is_err() {
        return false;
    }
    let v = array.modulus();
    let row_next = successor_map(&orderings.rows, v);
    let col_next = successor_map(&orderings.columns, v);
    let total = array.params().filled();
    let Some((_, start)) = array.entries().next() else {
        return false;
    };
    let start = start.value();
    let mut x = start;
    let mut len = 0usize;
    loop {
        x = col_next[row_next[x as usize] as usize];
        len += 1;
        if x == start || len > total {
            break;
        }
    }
    len == total
}

/// Candidate orderings of one line: one simple representative per cyclic
/// order, natural and reversed first. `complete` is false when the list was
/// truncated.
struct LineDomain {
    orderings: Vec<Vec<Residue>>,
    complete: bool,
}

fn simple_rotation(cyclic: &[Residue]) -> Option<Vec<Residue>> {
    let n = cyclic.len();
    (0..n)
        .map(|r| {
            cyclic[r..]
                .iter()
                .chain(&cyclic[..r])
                .copied()
                .collect::<Vec<_>>()
        })
        .find(|o| is_simple_ordering(o))
}

fn cyclic_key(cyclic: &[Residue]) -> Vec<u64> {
    // rotate so the least element leads
    let pos = (0..cyclic.len()).min_by_key(|&i| cyclic[i]).unwrap_or(0);
    cyclic[pos..]
        .iter()
        .chain(&cyclic[..pos])
        .map(|x| x.value())
        .collect()
}

fn line_domain(line: &[Residue], full: bool) -> LineDomain {
    let mut seen = HashSet::new();
    let mut orderings = Vec::new();
    let mut push = |cyclic: Vec<Residue>, orderings: &mut Vec<Vec<Residue>>| {
        if seen.insert(cyclic_key(&cyclic)) {
            if let Some(o) = simple_rotation(&cyclic) {
                orderings.push(o);
            }
        }
    };
    push(line.to_vec(), &mut orderings);
    push(line.iter().rev().copied().collect(), &mut orderings);
    if !full || line.len() <= 3 {
        return LineDomain {
            orderings,
            complete: line.len() <= 3,
        };
    }
    // every cyclic order has a rotation starting at line[0]
    let rest: Vec<Residue> = line[1..].to_vec();
    let mut idx: Vec<usize> = (0..rest.len()).collect();
    let mut produced = 0usize;
    let mut complete = true;
    loop {
        let mut cyclic = vec![line[0]];
        cyclic.extend(idx.iter().map(|&i| rest[i]));
        push(cyclic, &mut orderings);
        produced += 1;
        if produced >= MAX_CYCLIC_ORDERS_PER_LINE {
            complete = !next_permutation(&mut idx);
            break;
        }
        if !next_permutation(&mut idx) {
            break;
        }
    }
    LineDomain {
        orderings,
        complete,
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

struct CompatSearch<'a> {
    rows: &'a [LineDomain],
    cols: &'a [LineDomain],
    v: u64,
    total: usize,
    row_choice: Vec<usize>,
    col_choice: Vec<usize>,
    row_next: Vec<u64>,
    row_prev: Vec<u64>,
    col_next: Vec<u64>,
    nodes: u64,
    budget: u64,
}

impl CompatSearch<'_> {
    fn run(&mut self, line: usize) -> Option<bool> {
        let m = self.rows.len();
        if line == m + self.cols.len() {
            return Some(true);
        }
        let (domain, is_row) = if line < m {
            (&self.rows[line], true)
        } else {
            (&self.cols[line - m], false)
        };
        for choice in 0..domain.orderings.len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let ordering = &domain.orderings[choice];
            let len = ordering.len();
            for (i, x) in ordering.iter().enumerate() {
                let y = ordering[(i + 1) % len].value();
                if is_row {
                    self.row_next[x.value() as usize] = y;
                    self.row_prev[y as usize] = x.value();
                } else {
                    self.col_next[x.value() as usize] = y;
                }
            }
            if !is_row && self.premature_cycle(ordering) {
                continue;
            }
            if is_row {
                self.row_choice[line] = choice;
            } else {
                self.col_choice[line - m] = choice;
            }
            match self.run(line + 1) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
        }
        if !is_row {
            for x in &domain.orderings[0] {
                self.col_next[x.value() as usize] = NONE;
            }
        }
        Some(false)
    }

    /// Follows `sigma = col_next ∘ row_next` from the cells whose image was
    /// just fixed; a closed orbit shorter than the cell count is fatal.
    fn premature_cycle(&self, column: &[Residue]) -> bool {
        for b in column {
            let start = self.row_prev[b.value() as usize];
            let mut x = start;
            let mut len = 0usize;
            loop {
                let y = self.col_next[self.row_next[x as usize] as usize];
                if y == NONE {
                    break;
                }
                len += 1;
                x = y;
                if x == start {
                    if len < self.total {
                        return true;
                    }
                    break;
                }
            }
        }
        false
    }

    fn pair(&self) -> OrderingPair {
        OrderingPair {
            rows: self
                .rows
                .iter()
                .zip(&self.row_choice)
                .map(|(d, &c)| d.orderings[c].clone())
                .collect(),
            columns: self
                .cols
                .iter()
                .zip(&self.col_choice)
                .map(|(d, &c)| d.orderings[c].clone())
                .collect(),
        }
    }
}

/// A line of `h` cells is a cycle of sign `(-1)^(h-1)`, so `omega_c ∘ omega_r`
/// has sign `(-1)^(m+n)` while a cycle through all `nk` cells has sign
/// `(-1)^(nk-1)`.
pub fn parity_allows_compatibility(p: &ArrayParams) -> bool {
    (p.m + p.n) % 2 == (p.filled() - 1) % 2
}

/// Searches simple orderings for a compatible pair.
///
/// Stage one only uses each line's natural cyclic order and its reverse
/// (with a simple rotation of each); stage two enumerates every cyclic order
/// per line. Budget counts assignment attempts across both stages.
/// `NotFound` is returned only when stage two covered every cyclic order.
pub fn compatible_search(array: &PFArray, budget: u64) -> Result<SearchOutcome<OrderingPair>> {
    let verdict = verify_nh(array);
    if !verdict.is_valid() {
        return Err(Error::InvalidInput(format!(
            "array is not a non-zero sum Heffter array: {}",
            verdict.violations[0]
        )));
    }
    let p = array.params();
    if !parity_allows_compatibility(p) {
        return Ok(SearchOutcome::NotFound);
    }
    let natural = OrderingPair::natural(array);
    let mut nodes = 0u64;
    for full in [false, true] {
        let rows: Vec<LineDomain> = natural.rows.iter().map(|l| line_domain(l, full)).collect();
        let cols: Vec<LineDomain> = natural
            .columns
            .iter()
            .map(|l| line_domain(l, full))
            .collect();
        let complete = rows.iter().chain(&cols).all(|d| d.complete);
        if rows.iter().chain(&cols).any(|d| d.orderings.is_empty()) {
            if complete {
                return Ok(SearchOutcome::NotFound);
            }
            continue;
        }
        let mut search = CompatSearch {
            rows: &rows,
            cols: &cols,
            v: p.v,
            total: p.filled(),
            row_choice: vec![0; rows.len()],
            col_choice: vec![0; cols.len()],
            row_next: vec![NONE; p.v as usize + 1],
            row_prev: vec![NONE; p.v as usize + 1],
            col_next: vec![NONE; p.v as usize + 1],
            nodes,
            budget,
        };
        debug_assert!(search.v == p.v);
        match search.run(0) {
            Some(true) => {
                let pair = search.pair();
                debug_assert!(compatible(&pair, array));
                return Ok(SearchOutcome::Found(pair));
            }
            Some(false) if complete => return Ok(SearchOutcome::NotFound),
            Some(false) => nodes = search.nodes,
            None => return Ok(SearchOutcome::Exhausted),
        }
    }
    Ok(SearchOutcome::Exhausted)
}

/// The rotation template on `±E(A) = Z_v \ {0}`:
/// `a -> -omega_r(a)` for entries `a`, `a -> omega_c(-a)` for their negatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub v: u64,
    rho0: Vec<u64>,
    in_array: Vec<bool>,
}

impl RotationSystem {
    pub fn rho0(&self, a: Residue) -> Residue {
        Residue::from_canonical(self.rho0[a.value() as usize], self.v)
    }

    pub fn is_entry(&self, a: Residue) -> bool {
        self.in_array[a.value() as usize]
    }

    /// The cycle of `rho0` starting at 1.
    pub fn cycle(&self) -> Vec<Residue> {
        let mut out = Vec::with_capacity(self.v as usize - 1);
        let mut x = 1u64;
        loop {
            out.push(Residue::from_canonical(x, self.v));
            x = self.rho0[x as usize];
            if x == 1 || out.len() >= self.v as usize {
                break;
            }
        }
        out
    }

    /// Directed edge `(x, x+a)` → `rho((x, x+a)) = (x, x + rho0(a))`.
    pub fn rotate(&self, tail: Residue, diff: Residue) -> (Residue, Residue) {
        (tail, self.rho0(diff))
    }
}

pub fn build_rotation(array: &PFArray, orderings: &OrderingPair) -> Result<RotationSystem> {
    let p = array.params();
    if p.t != 1 {
        return Err(Error::NotApplicable(format!(
            "embeddings of K_v need t = 1, got t = {}",
            p.t
        )));
    }
    orderings.validate(array)?;
    if !orderings.is_simple() {
        return Err(Error::Collision("orderings are not simple".into()));
    }
    let v = p.v;
    let row_next = successor_map(&orderings.rows, v);
    let col_next = successor_map(&orderings.columns, v);
    let mut in_array = vec![false; v as usize];
    for (_, x) in array.entries() {
        in_array[x.value() as usize] = true;
    }
    let mut rho0 = vec![NONE; v as usize];
    for a in 1..v {
        rho0[a as usize] = if in_array[a as usize] {
            (v - row_next[a as usize]) % v
        } else {
            col_next[(v - a) as usize]
        };
    }
    let rot = RotationSystem { v, rho0, in_array };
    let cycle = rot.cycle();
    if cycle.len() as u64 != v - 1 {
        return Err(Error::Incompatible(format!(
            "rho0 has a cycle of length {} on {} elements",
            cycle.len(),
            v - 1
        )));
    }
    Ok(rot)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceColor {
    /// Faces following the row orderings backwards.
    Row,
    /// Faces following the column orderings.
    Column,
}

impl fmt::Display for FaceColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FaceColor::Row => "row",
            FaceColor::Column => "column",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Face {
    pub color: FaceColor,
    pub circuit: Circuit,
}

#[derive(Clone, Debug)]
pub struct Embedding {
    pub vertices: u64,
    pub edges: u64,
    pub faces: Vec<Face>,
    pub genus: u64,
}

impl Embedding {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces_of(&self, color: FaceColor) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.color == color)
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces.len() as i64
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} {} {}",
            self.vertices,
            self.edges,
            self.faces.len(),
            self.genus
        )?;
        for face in &self.faces {
            writeln!(f, "{} {} {}", face.color, face.circuit.len(), face.circuit)?;
        }
        Ok(())
    }
}

/// Faces are the orbits of `rho ∘ tau` on directed edges, where
/// `tau((x, x+a)) = (x+a, x)`.
pub fn trace_faces(rot: &RotationSystem) -> Result<Embedding> {
    let v = rot.v;
    let idx = |x: u64, a: u64| (x * v + a) as usize;
    let mut face_of = vec![usize::MAX; (v * v) as usize];
    let mut faces = Vec::new();
    for x0 in 0..v {
        for a0 in 1..v {
            if face_of[idx(x0, a0)] != usize::MAX {
                continue;
            }
            let color = if rot.in_array[a0 as usize] {
                FaceColor::Column
            } else {
                FaceColor::Row
            };
            let id = faces.len();
            let mut walk = Vec::new();
            let (mut x, mut a) = (x0, a0);
            loop {
                if rot.in_array[a as usize] != (color == FaceColor::Column) {
                    return Err(Error::Coloring(format!(
                        "face through ({x0},{}) mixes entry and non-entry differences",
                        (x0 + a0) % v
                    )));
                }
                face_of[idx(x, a)] = id;
                walk.push(Residue::from_canonical(x, v));
                let head = (x + a) % v;
                let next = rot.rho0[(v - a) as usize];
                x = head;
                a = next;
                if (x, a) == (x0, a0) {
                    break;
                }
                if face_of[idx(x, a)] != usize::MAX {
                    return Err(Error::Inconsistency(
                        "rho ∘ tau is not a permutation".into(),
                    ));
                }
            }
            let circuit = Circuit::new(walk, None)?;
            faces.push(Face { color, circuit });
        }
    }
    for x in 0..v {
        for a in 1..v {
            let here = face_of[idx(x, a)];
            let there = face_of[idx((x + a) % v, v - a)];
            if faces[here].color == faces[there].color {
                return Err(Error::Coloring(format!(
                    "edge {{{x},{}}} lies on two {} faces",
                    (x + a) % v,
                    faces[here].color
                )));
            }
        }
    }
    let edges = v * (v - 1) / 2;
    let chi = v as i64 - edges as i64 + faces.len() as i64;
    if chi > 2 || (2 - chi) % 2 != 0 {
        return Err(Error::Inconsistency(format!(
            "Euler characteristic {chi} is not 2 - 2g"
        )));
    }
    Ok(Embedding {
        vertices: v,
        edges,
        faces,
        genus: ((2 - chi) / 2) as u64,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Square,
    Rectangular,
}

/// Closed-form genus when `2nk + 1` is prime and compatible orderings are
/// known to exist.
pub fn genus_closed_form(params: &ArrayParams, shape: Shape) -> Result<u64> {
    if params.t != 1 {
        return Err(Error::NotApplicable("closed forms need t = 1".into()));
    }
    let v = params.v;
    if !is_prime(v) {
        return Err(Error::NotApplicable(format!("{v} is not prime")));
    }
    let (faces, nk) = match shape {
        Shape::Square => {
            let (n, k) = (params.n as u64, params.k as u64);
            if !params.is_square() {
                return Err(Error::NotApplicable("array is not square".into()));
            }
            if n % 2 == 0 || k % 2 == 0 || n < k {
                return Err(Error::NotApplicable("need odd n >= k with k odd".into()));
            }
            if k == 1 && n > 1 {
                // singleton lines compose to the identity
                return Err(Error::NotApplicable(format!(
                    "no compatible orderings exist for k=1, n={n}"
                )));
            }
            let (ni, ki) = (n as i64, k as i64);
            let hypotheses = gcd(n, k - 1) == 1 || (3 < k && k < 200) || ni >= (ki - 2) * (ki - 1);
            if !hypotheses {
                return Err(Error::NotApplicable(format!(
                    "no compatible-ordering existence result covers n={n} k={k}"
                )));
            }
            (2 * n, n * k)
        }
        Shape::Rectangular => {
            let (m, n) = (params.m as u64, params.n as u64);
            if params.h != params.n || params.k != params.m {
                return Err(Error::NotApplicable("array is not fully filled".into()));
            }
            if !parity_allows_compatibility(params) {
                return Err(Error::NotApplicable(format!(
                    "m={m} and n={n} are both even, no compatible orderings exist"
                )));
            }
            (m + n, m * n)
        }
    };
    // g = (2 - v + v*nk - F) / 2
    let twice = 2 + v * nk - v - faces;
    Ok(twice / 2)
}

/// Whether the face color classes equal the circuit sets of the row and
/// column decompositions (rows built from the reversed row orderings).
pub fn faces_match_circuits(emb: &Embedding, rows: &Decomposition, cols: &Decomposition) -> bool {
    let key_set = |d: &Decomposition| -> Option<HashSet<Vec<u64>>> {
        Some(circuit_set(d).ok()?.iter().map(|c| c.canonical()).collect())
    };
    let faces = |color| -> HashSet<Vec<u64>> {
        emb.faces_of(color).map(|f| f.circuit.canonical()).collect()
    };
    if rows.host().v != emb.vertices || cols.host().v != emb.vertices {
        return false;
    }
    match (key_set(rows), key_set(cols)) {
        (Some(r), Some(c)) => {
            let fr = faces(FaceColor::Row);
            let fc = faces(FaceColor::Column);
            fr.len() == emb.faces_of(FaceColor::Row).count()
                && fc.len() == emb.faces_of(FaceColor::Column).count()
                && fr == r
                && fc == c
        }
        _ => false,
    }
}

/// Everything produced by the embedding pipeline.
#[derive(Clone, Debug)]
pub struct EmbeddingRun {
    pub orderings: OrderingPair,
    pub rotation: RotationSystem,
    pub embedding: Embedding,
    pub faces_match: bool,
}

pub fn archdeacon_embedding(array: &PFArray, orderings: &OrderingPair) -> Result<EmbeddingRun> {
    use crate::decomp::{develop, df_from_array, Axis};
    let rotation = build_rotation(array, orderings)?;
    let embedding = trace_faces(&rotation)?;
    let rows = develop(&df_from_array(
        array,
        &orderings.reversed_rows(),
        Axis::Rows,
    )?)?;
    let cols = develop(&df_from_array(array, orderings, Axis::Columns)?)?;
    let faces_match = faces_match_circuits(&embedding, &rows, &cols);
    Ok(EmbeddingRun {
        orderings: orderings.clone(),
        rotation,
        embedding,
        faces_match,
    })
}
