//! Relative difference families of paths, their cyclic developments, and
//! the circuits obtained by closing paths under translation.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::array::PFArray;
use crate::residue::Residue;
use crate::sums::partial_sums;
use crate::verify::{is_simple_ordering, OrderingPair};
use crate::{Error, Result};

/// Hosts with more edges than this are checked for orthogonality through
/// base-block differences instead of translate by translate.
pub const EXHAUSTIVE_ORTHOGONALITY_LIMIT: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Rows,
    Columns,
}

/// Anything with an undirected edge list over `Z_v`.
pub trait EdgeList {
    fn edges(&self) -> Vec<(Residue, Residue)>;
}

fn edge_key(a: Residue, b: Residue) -> (u64, u64) {
    let (x, y) = (a.value(), b.value());
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

/// A path on pairwise distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathBlock {
    vertices: Vec<Residue>,
}

impl PathBlock {
    pub fn new(vertices: Vec<Residue>) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::InvalidInput(
                "a path needs at least one vertex".into(),
            ));
        };
        let v = first.modulus();
        if vertices.iter().any(|x| x.modulus() != v) {
            return Err(Error::InvalidInput("vertices from different groups".into()));
        }
        let mut seen = HashSet::with_capacity(vertices.len());
        if let Some(dup) = vertices.iter().find(|x| !seen.insert(**x)) {
            return Err(Error::Collision(format!(
                "vertex {dup} repeats in the path"
            )));
        }
        Ok(PathBlock { vertices })
    }

    pub fn vertices(&self) -> &[Residue] {
        &self.vertices
    }

    pub fn modulus(&self) -> u64 {
        self.vertices[0].modulus()
    }

    /// Path length (number of edges).
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn translate(&self, g: Residue) -> PathBlock {
        PathBlock {
            vertices: self.vertices.iter().map(|&x| x + g).collect(),
        }
    }

    /// `x_last - x_first`.
    pub fn displacement(&self) -> Residue {
        self.vertices[self.vertices.len() - 1] - self.vertices[0]
    }

    fn values(&self) -> Vec<u64> {
        self.vertices.iter().map(|x| x.value()).collect()
    }
}

impl EdgeList for PathBlock {
    fn edges(&self) -> Vec<(Residue, Residue)> {
        self.vertices.windows(2).map(|w| (w[0], w[1])).collect()
    }
}

impl fmt::Display for PathBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_vertices(f, &self.vertices)
    }
}

fn write_vertices(f: &mut fmt::Formatter<'_>, xs: &[Residue]) -> fmt::Result {
    let s: Vec<String> = xs.iter().map(|x| x.value().to_string()).collect();
    f.write_str(&s.join(","))
}

/// Signed edge differences `{+-(x - y)}` as a multiset (sorted).
pub fn delta_list<G: EdgeList + ?Sized>(graph: &G) -> Vec<Residue> {
    let mut out: Vec<Residue> = graph
        .edges()
        .into_iter()
        .flat_map(|(x, y)| [x - y, y - x])
        .collect();
    out.sort();
    out
}

/// `[0, s_1, ..., s_len]` for the partial sums `s_i` of `ordering`.
pub fn path_from_ordering(ordering: &[Residue]) -> Result<PathBlock> {
    let Some(first) = ordering.first() else {
        return Err(Error::InvalidInput("empty ordering".into()));
    };
    let mut vertices = vec![Residue::zero(first.modulus())];
    vertices.extend(partial_sums(ordering));
    PathBlock::new(vertices).map_err(|e| match e {
        Error::Collision(msg) => Error::Collision(format!(
            "{msg}; ordering ({}) has repeated or zero partial sums",
            ordering
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )),
        other => other,
    })
}

/// The host `K_{q x r}` of a development over `Z_v` relative to the order-`t`
/// subgroup, with `q = v/t` parts of size `r = t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Host {
    pub v: u64,
    pub t: u64,
}

impl Host {
    pub fn parts(&self) -> u64 {
        self.v / self.t
    }

    pub fn part_size(&self) -> u64 {
        self.t
    }

    pub fn edge_count(&self) -> u64 {
        self.v * (self.v - self.t) / 2
    }

    fn in_subgroup(&self, x: Residue) -> bool {
        x.value().is_multiple_of(self.v / self.t)
    }
}

impl fmt::Display for Host {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {}",
            self.v,
            self.t,
            self.parts(),
            self.part_size()
        )
    }
}

/// Paths whose differences cover `Z_v \ J` exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceFamily {
    pub blocks: Vec<PathBlock>,
    pub v: u64,
    pub t: u64,
}

impl DifferenceFamily {
    pub fn new(blocks: Vec<PathBlock>, v: u64, t: u64) -> Result<Self> {
        let df = DifferenceFamily { blocks, v, t };
        df.certify()?;
        Ok(df)
    }

    pub fn host(&self) -> Host {
        Host {
            v: self.v,
            t: self.t,
        }
    }

    /// Checks that the difference multiset equals `Z_v \ J`.
    pub fn certify(&self) -> Result<()> {
        if self.t == 0 || !self.v.is_multiple_of(self.t) {
            return Err(Error::InvalidInput(format!(
                "t={} does not divide v={}",
                self.t, self.v
            )));
        }
        let host = self.host();
        let mut count = vec![0u32; self.v as usize];
        for b in &self.blocks {
            if b.modulus() != self.v {
                return Err(Error::Inconsistency(format!(
                    "block {b} is not over Z_{}",
                    self.v
                )));
            }
            for d in delta_list(b) {
                count[d.value() as usize] += 1;
            }
        }
        for (x, &c) in count.iter().enumerate() {
            let r = Residue::from_canonical(x as u64, self.v);
            let expected = if host.in_subgroup(r) { 0 } else { 1 };
            if c != expected {
                return Err(Error::Inconsistency(format!(
                    "difference {} appears {c} times, expected {expected}",
                    r.signed()
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for DifferenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.host())?;
        for b in &self.blocks {
            writeln!(f, "{b}")?;
        }
        Ok(())
    }
}

/// One path per row (or column), read from the given orderings.
pub fn df_from_array(
    array: &PFArray,
    orderings: &OrderingPair,
    axis: Axis,
) -> Result<DifferenceFamily> {
    orderings.validate(array)?;
    let lines = match axis {
        Axis::Rows => &orderings.rows,
        Axis::Columns => &orderings.columns,
    };
    let mut blocks = Vec::with_capacity(lines.len());
    for line in lines {
        if !is_simple_ordering(line) {
            return Err(Error::Collision(format!(
                "ordering ({}) is not simple",
                line.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )));
        }
        blocks.push(path_from_ordering(line)?);
    }
    let p = array.params();
    DifferenceFamily::new(blocks, p.v, p.t)
}

/// All translates `B + g`, `g in Z_v`, of a family's base blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub base: DifferenceFamily,
    /// Block `b * v + g` is `base.blocks[b] + g`.
    pub blocks: Vec<PathBlock>,
}

impl Decomposition {
    pub fn host(&self) -> Host {
        self.base.host()
    }

    pub fn edge_count(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.host())?;
        for b in &self.blocks {
            writeln!(f, "{b}")?;
        }
        Ok(())
    }
}

pub fn develop(family: &DifferenceFamily) -> Result<Decomposition> {
    family.certify()?;
    let v = family.v;
    let blocks: Vec<PathBlock> = family
        .blocks
        .iter()
        .flat_map(|b| (0..v).map(move |g| b.translate(Residue::from_canonical(g, v))))
        .collect();
    let host = family.host();
    let mut seen = HashSet::with_capacity(host.edge_count() as usize);
    for b in &blocks {
        for (x, y) in b.edges() {
            if host.in_subgroup(x - y) {
                return Err(Error::Inconsistency(format!(
                    "edge {{{x},{y}}} joins vertices of the same part"
                )));
            }
            if !seen.insert(edge_key(x, y)) {
                return Err(Error::Inconsistency(format!(
                    "edge {{{x},{y}}} covered twice"
                )));
            }
        }
    }
    if seen.len() as u64 != host.edge_count() {
        return Err(Error::Inconsistency(format!(
            "{} edges covered, host has {}",
            seen.len(),
            host.edge_count()
        )));
    }
    Ok(Decomposition {
        base: family.clone(),
        blocks,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthogonalityCheck {
    /// Compare every block of one decomposition with every block of the other.
    Exhaustive,
    /// Compare base-block difference lists only.
    BaseDifferences,
}

/// True iff no block of `d1` shares two or more edges with a distinct block
/// of `d2`. Identical blocks are not compared, so `orthogonal(d, d)` holds
/// for any decomposition.
pub fn orthogonal(d1: &Decomposition, d2: &Decomposition) -> Result<bool> {
    let mode = if d1.host().edge_count() <= EXHAUSTIVE_ORTHOGONALITY_LIMIT {
        OrthogonalityCheck::Exhaustive
    } else {
        OrthogonalityCheck::BaseDifferences
    };
    orthogonal_with(d1, d2, mode)
}

pub fn orthogonal_with(
    d1: &Decomposition,
    d2: &Decomposition,
    mode: OrthogonalityCheck,
) -> Result<bool> {
    if d1.host() != d2.host() {
        return Err(Error::HostMismatch(format!(
            "{} vs {}",
            d1.host(),
            d2.host()
        )));
    }
    match mode {
        OrthogonalityCheck::Exhaustive => Ok(orthogonal_exhaustive(d1, d2)),
        OrthogonalityCheck::BaseDifferences => Ok(orthogonal_by_differences(d1, d2)),
    }
}

fn orthogonal_exhaustive(d1: &Decomposition, d2: &Decomposition) -> bool {
    let mut owner: HashMap<(u64, u64), Vec<usize>> = HashMap::new();
    for (i, b) in d2.blocks.iter().enumerate() {
        for (x, y) in b.edges() {
            owner.entry(edge_key(x, y)).or_default().push(i);
        }
    }
    let edge_set = |b: &PathBlock| {
        let mut e: Vec<(u64, u64)> = b.edges().into_iter().map(|(x, y)| edge_key(x, y)).collect();
        e.sort();
        e
    };
    for b in &d1.blocks {
        let mut shared: HashMap<usize, usize> = HashMap::new();
        for (x, y) in b.edges() {
            if let Some(list) = owner.get(&edge_key(x, y)) {
                for &i in list {
                    *shared.entry(i).or_default() += 1;
                }
            }
        }
        let mine = edge_set(b);
        for (i, c) in shared {
            if c >= 2 && edge_set(&d2.blocks[i]) != mine {
                return false;
            }
        }
    }
    true
}

/// Translates `P + g` and `Q + g'` can only share edges whose differences lie
/// in `dP ∩ dQ`, and each block has one edge per difference pair. At most one
/// shared `+-d` pair per base pair bounds every intersection by one edge.
/// The test is sufficient, not necessary.
fn orthogonal_by_differences(d1: &Decomposition, d2: &Decomposition) -> bool {
    for p in &d1.base.blocks {
        let dp: HashSet<Residue> = delta_list(p).into_iter().collect();
        if dp.len() != 2 * p.len() {
            return false;
        }
        for q in &d2.base.blocks {
            if p.len() == q.len() && q.translate(p.vertices()[0] - q.vertices()[0]) == *p {
                continue;
            }
            let dq: HashSet<Residue> = delta_list(q).into_iter().collect();
            if dq.len() != 2 * q.len() {
                return false;
            }
            if dp.intersection(&dq).count() > 2 {
                return false;
            }
        }
    }
    true
}

/// The path and multiplier a circuit was closed from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub path: PathBlock,
    pub multiplier: u64,
}

/// A closed walk with no repeated edge. The last vertex is joined back to
/// the first.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Circuit {
    pub vertices: Vec<Residue>,
    pub generator: Option<Generator>,
}

impl Circuit {
    pub fn new(vertices: Vec<Residue>, generator: Option<Generator>) -> Result<Self> {
        let c = Circuit {
            vertices,
            generator,
        };
        if c.vertices.len() < 3 {
            return Err(Error::DegenerateCircuit(format!(
                "closed walk of length {} repeats an edge",
                c.vertices.len()
            )));
        }
        let mut seen = HashSet::with_capacity(c.vertices.len());
        for (x, y) in c.edges() {
            if x == y {
                return Err(Error::DegenerateCircuit(format!("loop at {x}")));
            }
            if !seen.insert(edge_key(x, y)) {
                return Err(Error::DegenerateCircuit(format!(
                    "edge {{{x},{y}}} repeats"
                )));
            }
        }
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Least rotation of the walk or of its reverse, whichever is smaller.
    pub fn canonical(&self) -> Vec<u64> {
        canonical_walk(&self.vertices.iter().map(|x| x.value()).collect::<Vec<_>>())
    }

    pub fn same_circuit(&self, other: &Circuit) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }
}

impl EdgeList for Circuit {
    fn edges(&self) -> Vec<(Residue, Residue)> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| (self.vertices[i], self.vertices[(i + 1) % n]))
            .collect()
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_vertices(f, &self.vertices)
    }
}

pub fn canonical_walk(walk: &[u64]) -> Vec<u64> {
    let rotate = |w: &[u64]| {
        let r = least_rotation(w);
        w[r..].iter().chain(&w[..r]).copied().collect::<Vec<u64>>()
    };
    let forward = rotate(walk);
    let rev: Vec<u64> = walk.iter().rev().copied().collect();
    let backward = rotate(&rev);
    forward.min(backward)
}

/// Start index of the lexicographically least rotation.
fn least_rotation(s: &[u64]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Union of the translates `P + i (x_last - x_first)` for
/// `i = 0..order(x_last - x_first)`, spliced into one closed walk.
pub fn circuit_closure(path: &PathBlock) -> Result<Circuit> {
    let shift = path.displacement();
    if shift.is_zero() {
        return Err(Error::InvalidInput("path endpoints coincide".into()));
    }
    let multiplier = shift.additive_order();
    let k = path.len();
    let mut walk = Vec::with_capacity(multiplier as usize * k);
    for i in 0..multiplier {
        let g = shift * i;
        walk.extend(path.vertices()[..k].iter().map(|&x| x + g));
    }
    Circuit::new(
        walk,
        Some(Generator {
            path: path.clone(),
            multiplier,
        }),
    )
}

/// The distinct circuits `C_P` for `P` in a cyclic path decomposition.
///
/// Each circuit is generated by the lexicographically least of the
/// translates it is made of.
pub fn circuit_set(d: &Decomposition) -> Result<Vec<Circuit>> {
    let v = d.host().v;
    let mut used = vec![false; d.blocks.len()];
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (b, base) in d.base.blocks.iter().enumerate() {
        let shift = base.displacement();
        let lambda = shift.additive_order();
        for g in 0..v {
            let idx = b as u64 * v + g;
            if used[idx as usize] {
                continue;
            }
            let members: Vec<usize> = (0..lambda)
                .map(|i| (b as u64 * v + (g + (shift * i).value()) % v) as usize)
                .collect();
            for &m in &members {
                used[m] = true;
            }
            let generator = members
                .iter()
                .map(|&m| &d.blocks[m])
                .min_by_key(|p| p.values())
                .expect("at least one member");
            let c = circuit_closure(generator)?;
            if seen.insert(c.canonical()) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn res(xs: &[i64], v: u64) -> Vec<Residue> {
        xs.iter().map(|&x| Residue::new(x, v)).collect()
    }

    fn vals(xs: &[Residue]) -> Vec<u64> {
        xs.iter().map(|x| x.value()).collect()
    }

    fn path(xs: &[i64], v: u64) -> PathBlock {
        PathBlock::new(res(xs, v)).unwrap()
    }

    #[test]
    fn paths_from_orderings() {
        let p = path_from_ordering(&res(&[1, 2, 10, -11], 25)).unwrap();
        assert_eq!(vals(p.vertices()), vec![0, 1, 3, 13, 2]);
        let p = path_from_ordering(&res(&[2, 5, 4], 25)).unwrap();
        assert_eq!(vals(p.vertices()), vec![0, 2, 7, 11]);
        let p = path_from_ordering(&res(&[7], 25)).unwrap();
        assert_eq!(vals(p.vertices()), vec![0, 7]);
        assert!(matches!(
            path_from_ordering(&res(&[1, 10, -11, 2], 25)),
            Err(Error::Collision(_))
        ));
    }

    #[test]
    fn delta_examples() {
        let d = delta_list(&path(&[0, 1, 3, 13, 2], 25));
        let mut expected = res(&[1, -1, 2, -2, 10, -10, 11, -11], 25);
        expected.sort();
        assert_eq!(d, expected);
        let d = delta_list(&path(&[0, 4], 9));
        assert_eq!(vals(&d), vec![4, 5]);
    }

    #[test]
    fn develop_k3() {
        let df = DifferenceFamily::new(vec![path(&[0, 1], 3)], 3, 1).unwrap();
        let d = develop(&df).unwrap();
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.edge_count(), 3);
    }

    #[test]
    fn develop_relative_family() {
        // Z_10 relative to J = {0, 5}: differences +-1..4 cover Z_10 \ J.
        let df =
            DifferenceFamily::new(vec![path(&[0, 1, 3], 10), path(&[0, 3, 7], 10)], 10, 2).unwrap();
        let d = develop(&df).unwrap();
        assert_eq!(d.host().edge_count(), 40);
        assert_eq!(d.edge_count(), 40);
        for b in &d.blocks {
            for (x, y) in b.edges() {
                assert_ne!((x - y).value() % 5, 0);
            }
        }
        assert!(
            DifferenceFamily::new(vec![path(&[0, 1, 3], 10), path(&[0, 3, 8], 10)], 10, 2).is_err()
        );
    }

    #[test]
    fn closure_examples() {
        let c = circuit_closure(&path(&[0, 1, 3], 5)).unwrap();
        assert_eq!(vals(&c.vertices), vec![0, 1, 3, 4, 1, 2, 4, 0, 2, 3]);
        assert_eq!(c.generator.as_ref().unwrap().multiplier, 5);
        assert_eq!(c.edges().len(), 10);

        let c = circuit_closure(&path(&[0, 2], 7)).unwrap();
        assert_eq!(c.len(), 7);
        let mut vs = vals(&c.vertices);
        vs.sort();
        assert_eq!(vs, (0..7).collect::<Vec<_>>());

        let c = circuit_closure(&path(&[0, 1, 3, 13, 2], 25)).unwrap();
        assert_eq!(c.generator.as_ref().unwrap().multiplier, 25);
        assert_eq!(c.edges().len(), 100);
    }

    #[test]
    fn closure_flags_repeated_edges() {
        // [0,1] mod 2 closes into the walk 0,1,0
        assert!(matches!(
            circuit_closure(&path(&[0, 1], 2)),
            Err(Error::DegenerateCircuit(_))
        ));
        // translates of [0,2,1] mod 4 (shift 1) reuse the edge {1,2}
        assert!(matches!(
            circuit_closure(&path(&[0, 2, 1], 4)),
            Err(Error::DegenerateCircuit(_))
        ));
    }

    #[test]
    fn canonical_form_ignores_rotation_and_reversal() {
        let a = Circuit::new(res(&[0, 1, 3, 4, 1, 2, 4, 0, 2, 3], 5), None).unwrap();
        let rotated = Circuit::new(res(&[4, 0, 2, 3, 0, 1, 3, 4, 1, 2], 5), None).unwrap();
        let mut rev = a.vertices.clone();
        rev.reverse();
        let reversed = Circuit::new(rev, None).unwrap();
        assert!(a.same_circuit(&rotated));
        assert!(a.same_circuit(&reversed));
        let other = Circuit::new(res(&[0, 2, 4, 1, 3], 5), None).unwrap();
        assert!(!a.same_circuit(&other));
        assert_eq!(least_rotation(&[3, 1, 2, 1, 2]), 1);
        assert_eq!(least_rotation(&[1, 1, 1]), 0);
    }

    #[test]
    fn circuit_set_of_k3() {
        let df = DifferenceFamily::new(vec![path(&[0, 1], 3)], 3, 1).unwrap();
        let cs = circuit_set(&develop(&df).unwrap()).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].len(), 3);
    }

    #[test]
    fn orthogonal_host_mismatch() {
        let a = develop(&DifferenceFamily::new(vec![path(&[0, 1], 3)], 3, 1).unwrap()).unwrap();
        let b = develop(
            &DifferenceFamily::new(vec![path(&[0, 1], 5), path(&[0, 2], 5)], 5, 1).unwrap(),
        )
        .unwrap();
        assert!(matches!(orthogonal(&a, &b), Err(Error::HostMismatch(_))));
        assert!(orthogonal(&a, &a).unwrap());
    }

    #[test]
    fn non_orthogonal_pair_detected() {
        let d1 =
            develop(&DifferenceFamily::new(vec![path(&[0, 1, 3, 6], 7)], 7, 1).unwrap()).unwrap();
        let d2 =
            develop(&DifferenceFamily::new(vec![path(&[4, 0, 1, 3], 7)], 7, 1).unwrap()).unwrap();
        // [4,0,1,3] shares {0,1} and {1,3} with [0,1,3,6]
        assert!(!orthogonal_with(&d1, &d2, OrthogonalityCheck::Exhaustive).unwrap());
        assert!(!orthogonal_with(&d1, &d2, OrthogonalityCheck::BaseDifferences).unwrap());
        assert!(orthogonal(&d1, &d1).unwrap());
    }

    #[test]
    fn difference_check_is_only_sufficient() {
        // [0,1,3] and [0,2,3] use the same differences, yet translates never
        // share two edges
        let d1 = develop(&DifferenceFamily::new(vec![path(&[0, 1, 3], 5)], 5, 1).unwrap()).unwrap();
        let d2 = develop(&DifferenceFamily::new(vec![path(&[0, 2, 3], 5)], 5, 1).unwrap()).unwrap();
        assert!(orthogonal_with(&d1, &d2, OrthogonalityCheck::Exhaustive).unwrap());
        assert!(!orthogonal_with(&d1, &d2, OrthogonalityCheck::BaseDifferences).unwrap());
    }
}
