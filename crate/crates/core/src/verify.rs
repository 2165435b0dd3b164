//! Certification of the defining conditions and of simplicity.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::array::PFArray;
use crate::residue::Residue;
use crate::sums::partial_sums;
use crate::{Error, Result};

/// Default node budget per line for ordering searches.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    Array,
    Row(usize),
    Column(usize),
    Element(i64),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Array => write!(f, "array"),
            Location::Row(i) => write!(f, "row {i}"),
            Location::Column(j) => write!(f, "column {j}"),
            Location::Element(x) => write!(f, "element {x}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Filled-cell counts per row and column.
    Shape,
    /// Each element outside `J` represented exactly once up to sign.
    Covering,
    /// Line sums must be nonzero.
    NonZeroSum,
    /// Line sums must vanish.
    ZeroSum,
    /// Natural ordering must be simple.
    Simple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub location: Location,
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, location: Location, rule: Rule, detail: String) {
        self.violations.push(Violation {
            location,
            rule,
            detail,
        });
    }

    pub fn merge(mut self, other: Verdict) -> Verdict {
        self.violations.extend(other.violations);
        self
    }

    pub fn with_rule(&self, rule: Rule) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.rule == rule)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

fn check_shape(array: &PFArray, verdict: &mut Verdict) {
    let p = array.params();
    for i in 1..=p.m {
        let c = array.row(i).len();
        if c != p.h {
            verdict.push(
                Location::Row(i),
                Rule::Shape,
                format!("filled={c} expected={}", p.h),
            );
        }
    }
    for j in 1..=p.n {
        let c = array.column(j).len();
        if c != p.k {
            verdict.push(
                Location::Column(j),
                Rule::Shape,
                format!("filled={c} expected={}", p.k),
            );
        }
    }
}

fn check_covering(array: &PFArray, verdict: &mut Verdict) {
    let p = array.params();
    let v = p.v as usize;
    // hits[x] counts entries equal to x or -x
    let mut hits = vec![0usize; v];
    for (_, x) in array.entries() {
        if p.in_subgroup(x) {
            verdict.push(
                Location::Element(x.signed()),
                Rule::Covering,
                "lies in the subgroup J".into(),
            );
            continue;
        }
        hits[x.value() as usize] += 1;
        let neg = (-x).value() as usize;
        if neg != x.value() as usize {
            hits[neg] += 1;
        }
    }
    for (x, &count) in hits.iter().enumerate().skip(1) {
        let r = Residue::from_canonical(x as u64, p.v);
        if p.in_subgroup(r) || 2 * x > v {
            continue;
        }
        match count {
            1 => {}
            0 => verdict.push(
                Location::Element(r.signed()),
                Rule::Covering,
                format!("neither {} nor {} appears", r.signed(), (-r).signed()),
            ),
            c => verdict.push(
                Location::Element(r.signed()),
                Rule::Covering,
                format!("represented {c} times up to sign"),
            ),
        }
    }
}

fn check_sums(array: &PFArray, verdict: &mut Verdict, want_zero: bool) {
    let p = array.params();
    let lines = (1..=p.m)
        .map(|i| (Location::Row(i), array.row_sum(i)))
        .chain((1..=p.n).map(|j| (Location::Column(j), array.column_sum(j))));
    for (loc, s) in lines {
        if s.is_zero() != want_zero {
            let rule = if want_zero {
                Rule::ZeroSum
            } else {
                Rule::NonZeroSum
            };
            verdict.push(loc, rule, format!("sum={}", s.signed()));
        }
    }
}

/// Checks shape, covering and nonzero line sums.
pub fn verify_nh(array: &PFArray) -> Verdict {
    let mut verdict = Verdict::default();
    check_shape(array, &mut verdict);
    check_covering(array, &mut verdict);
    check_sums(array, &mut verdict, false);
    verdict
}

/// Checks shape, covering and vanishing line sums (relative Heffter array).
pub fn verify_heffter(array: &PFArray) -> Verdict {
    let mut verdict = Verdict::default();
    check_shape(array, &mut verdict);
    check_covering(array, &mut verdict);
    check_sums(array, &mut verdict, true);
    verdict
}

/// True when no proper contiguous subsequence sums to zero.
///
/// With `s_0 = 0`, the sums `s_0, ..., s_len` must be pairwise distinct,
/// except that `s_len = s_0` (the whole list summing to zero) is allowed.
pub fn is_simple_ordering(elements: &[Residue]) -> bool {
    let Some(first) = elements.first() else {
        return true;
    };
    let mut seen = HashSet::with_capacity(elements.len() + 1);
    seen.insert(Residue::zero(first.modulus()));
    let sums = partial_sums(elements);
    let last = sums.len() - 1;
    for (i, s) in sums.into_iter().enumerate() {
        if i == last && s.is_zero() {
            return true;
        }
        if !seen.insert(s) {
            return false;
        }
    }
    true
}

/// Natural orderings of every row and column must be simple.
pub fn is_globally_simple(array: &PFArray) -> Verdict {
    let p = array.params();
    let mut verdict = Verdict::default();
    for i in 1..=p.m {
        if !is_simple_ordering(&array.row_entries(i)) {
            verdict.push(
                Location::Row(i),
                Rule::Simple,
                "natural ordering not simple".into(),
            );
        }
    }
    for j in 1..=p.n {
        if !is_simple_ordering(&array.column_entries(j)) {
            verdict.push(
                Location::Column(j),
                Rule::Simple,
                "natural ordering not simple".into(),
            );
        }
    }
    verdict
}

/// Result of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The search space was exhausted without a hit.
    NotFound,
    /// The node budget ran out first.
    Exhausted,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

/// Backtracking search for an ordering with pairwise distinct partial sums.
///
/// With `require_nonzero_sums` every partial sum must also be nonzero (the
/// form in Alspach's partial sums conjecture); otherwise the ordering only
/// has to be simple. Elements are tried in increasing canonical order, so a
/// hit is the lexicographically least valid ordering.
pub fn find_simple_ordering(
    elements: &[Residue],
    require_nonzero_sums: bool,
    budget: u64,
) -> Result<SearchOutcome<Vec<Residue>>> {
    let Some(first) = elements.first() else {
        return Ok(SearchOutcome::Found(Vec::new()));
    };
    let v = first.modulus();
    let mut sorted = elements.to_vec();
    sorted.sort();
    if sorted.iter().any(|x| x.modulus() != v) {
        return Err(Error::InvalidInput("elements from different groups".into()));
    }
    if sorted.iter().any(|x| x.is_zero()) {
        return Err(Error::InvalidInput("elements must be nonzero".into()));
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput("elements must be distinct".into()));
    }
    let total = sorted.iter().fold(Residue::zero(v), |a, &x| a + x);
    if require_nonzero_sums && total.is_zero() {
        return Err(Error::InvalidInput("elements sum to zero".into()));
    }

    struct Search {
        elems: Vec<u64>,
        v: u64,
        allow_zero_total: bool,
        used: Vec<bool>,
        seen: Vec<bool>,
        order: Vec<usize>,
        nodes: u64,
        budget: u64,
    }

    impl Search {
        // Some(true) found, Some(false) subtree exhausted, None budget hit
        fn dfs(&mut self, sum: u64) -> Option<bool> {
            let len = self.elems.len();
            if self.order.len() == len {
                return Some(true);
            }
            let last = self.order.len() + 1 == len;
            for i in 0..len {
                if self.used[i] {
                    continue;
                }
                self.nodes += 1;
                if self.nodes > self.budget {
                    return None;
                }
                let s = (sum + self.elems[i]) % self.v;
                if last && s == 0 && self.allow_zero_total {
                    self.order.push(i);
                    return Some(true);
                }
                if self.seen[s as usize] {
                    continue;
                }
                self.used[i] = true;
                self.seen[s as usize] = true;
                self.order.push(i);
                match self.dfs(s) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
                self.order.pop();
                self.seen[s as usize] = false;
                self.used[i] = false;
            }
            Some(false)
        }
    }

    let mut search = Search {
        elems: sorted.iter().map(|x| x.value()).collect(),
        v,
        allow_zero_total: !require_nonzero_sums,
        used: vec![false; sorted.len()],
        seen: vec![false; v as usize],
        order: Vec::with_capacity(sorted.len()),
        nodes: 0,
        budget,
    };
    search.seen[0] = true;
    Ok(match search.dfs(0) {
        Some(true) => SearchOutcome::Found(search.order.iter().map(|&i| sorted[i]).collect()),
        Some(false) => SearchOutcome::NotFound,
        None => SearchOutcome::Exhausted,
    })
}

/// Per-row and per-column orderings of the filled entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingPair {
    pub rows: Vec<Vec<Residue>>,
    pub columns: Vec<Vec<Residue>>,
}

impl OrderingPair {
    /// Left-to-right rows and top-to-bottom columns.
    pub fn natural(array: &PFArray) -> Self {
        let p = array.params();
        OrderingPair {
            rows: (1..=p.m).map(|i| array.row_entries(i)).collect(),
            columns: (1..=p.n).map(|j| array.column_entries(j)).collect(),
        }
    }

    /// Each ordering must be a permutation of its line's entries.
    pub fn validate(&self, array: &PFArray) -> Result<()> {
        let p = array.params();
        if self.rows.len() != p.m || self.columns.len() != p.n {
            return Err(Error::InvalidInput(format!(
                "ordering pair has {} rows and {} columns, array is {}x{}",
                self.rows.len(),
                self.columns.len(),
                p.m,
                p.n
            )));
        }
        let same = |given: &[Residue], line: Vec<Residue>| {
            let mut a = given.to_vec();
            let mut b = line;
            a.sort();
            b.sort();
            a == b
        };
        for (i, r) in self.rows.iter().enumerate() {
            if !same(r, array.row_entries(i + 1)) {
                return Err(Error::InvalidInput(format!(
                    "ordering of row {} is not a permutation of its entries",
                    i + 1
                )));
            }
        }
        for (j, c) in self.columns.iter().enumerate() {
            if !same(c, array.column_entries(j + 1)) {
                return Err(Error::InvalidInput(format!(
                    "ordering of column {} is not a permutation of its entries",
                    j + 1
                )));
            }
        }
        Ok(())
    }

    pub fn is_simple(&self) -> bool {
        self.rows
            .iter()
            .chain(&self.columns)
            .all(|l| is_simple_ordering(l))
    }

    /// The pair with every row ordering reversed.
    pub fn reversed_rows(&self) -> OrderingPair {
        OrderingPair {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
            columns: self.columns.clone(),
        }
    }
}

/// Simple orderings for every line: natural ones where they work, searched
/// ones elsewhere.
pub fn make_simple_pair(array: &PFArray, budget: u64) -> Result<OrderingPair> {
    let verdict = verify_nh(array);
    if !verdict.is_valid() {
        return Err(Error::InvalidInput(format!(
            "array is not a non-zero sum Heffter array: {}",
            verdict.violations[0]
        )));
    }
    let mut pair = OrderingPair::natural(array);
    let mut exhausted = Vec::new();
    let mut missing = Vec::new();
    let lines = pair
        .rows
        .iter_mut()
        .enumerate()
        .map(|(i, l)| (format!("row {}", i + 1), l))
        .chain(
            pair.columns
                .iter_mut()
                .enumerate()
                .map(|(j, l)| (format!("column {}", j + 1), l)),
        );
    for (name, line) in lines {
        if is_simple_ordering(line) {
            continue;
        }
        match find_simple_ordering(line, true, budget)? {
            SearchOutcome::Found(o) => *line = o,
            SearchOutcome::NotFound => missing.push(name),
            SearchOutcome::Exhausted => exhausted.push(name),
        }
    }
    if !missing.is_empty() {
        return Err(Error::NoOrdering(missing.join(", ")));
    }
    if !exhausted.is_empty() {
        return Err(Error::BudgetExhausted(exhausted.join(", ")));
    }
    Ok(pair)
}
