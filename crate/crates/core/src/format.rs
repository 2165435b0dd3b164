//! Text formats for arrays and ordering pairs.
//!
//! Array format: a header line `m n h k t`, then `m` lines of `n`
//! whitespace-separated tokens. Each token is a signed integer in
//! `(-v/2, v/2]` or `.` for an empty cell. Output uses single spaces and a
//! trailing newline on every line.
//!
//! Ordering format: one line per row (`row i: a,b,c`) followed by one line
//! per column (`col j: a,b,c`), entries written as signed representatives.

use std::fmt;
use std::str::FromStr;

use crate::array::PFArray;
use crate::params::ArrayParams;
use crate::verify::OrderingPair;
use crate::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_array(text: &str) -> Result<PFArray> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 5 {
        return Err(parse_err(hline, "header must be `m n h k t`"));
    }
    let mut nums = [0u64; 5];
    for (slot, f) in nums.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| parse_err(hline, format!("bad header field `{f}`")))?;
    }
    let [m, n, h, k, t] = nums;
    let params = ArrayParams::new(m as usize, n as usize, h as usize, k as usize, t)
        .map_err(|e| parse_err(hline, e.to_string()))?;
    let half = params.v as i64;
    let mut rows = Vec::with_capacity(params.m);
    for (lineno, line) in lines.by_ref().take(params.m) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != params.n {
            return Err(parse_err(
                lineno,
                format!("expected {} tokens, got {}", params.n, tokens.len()),
            ));
        }
        let mut row = Vec::with_capacity(params.n);
        for tok in tokens {
            if tok == "." {
                row.push(None);
                continue;
            }
            let x: i64 = tok
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad token `{tok}`")))?;
            if 2 * x <= -half || 2 * x > half {
                return Err(parse_err(
                    lineno,
                    format!("{x} is outside (-v/2, v/2] for v={}", params.v),
                ));
            }
            let r = params.residue(x);
            if params.in_subgroup(r) {
                return Err(parse_err(
                    lineno,
                    format!("{x} is zero or lies in the subgroup of order {}", params.t),
                ));
            }
            row.push(Some(x));
        }
        rows.push(row);
    }
    if rows.len() != params.m {
        return Err(parse_err(
            hline,
            format!("expected {} rows, got {}", params.m, rows.len()),
        ));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(parse_err(lineno, "trailing content after the last row"));
    }
    PFArray::from_rows(params, &rows).map_err(|e| parse_err(hline, e.to_string()))
}

pub fn write_array(array: &PFArray) -> String {
    array.to_string()
}

impl fmt::Display for PFArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params();
        writeln!(f, "{} {} {} {} {}", p.m, p.n, p.h, p.k, p.t)?;
        for i in 1..=p.m {
            let tokens: Vec<String> = (1..=p.n)
                .map(|j| match self.get(i, j) {
                    Some(x) => x.signed().to_string(),
                    None => ".".to_string(),
                })
                .collect();
            writeln!(f, "{}", tokens.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for PFArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_array(s)
    }
}

/// Parses an ordering pair and checks it against `array`.
pub fn parse_orderings(text: &str, array: &PFArray) -> Result<OrderingPair> {
    let p = array.params();
    let mut rows = vec![None; p.m];
    let mut cols = vec![None; p.n];
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| parse_err(lineno, "expected `row i: ...` or `col j: ...`"))?;
        let mut head = head.split_whitespace();
        let kind = head.next().unwrap_or("");
        let index: usize = head
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(lineno, "missing line index"))?;
        let entries = body
            .split(',')
            .map(|s| s.trim())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<i64>()
                    .map(|x| p.residue(x))
                    .map_err(|_| parse_err(lineno, format!("bad entry `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let slot = match kind {
            "row" if (1..=p.m).contains(&index) => &mut rows[index - 1],
            "col" if (1..=p.n).contains(&index) => &mut cols[index - 1],
            _ => return Err(parse_err(lineno, format!("unknown line `{kind} {index}`"))),
        };
        if slot.is_some() {
            return Err(parse_err(lineno, "line given twice"));
        }
        *slot = Some(entries);
    }
    let rows = rows
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| parse_err(0, format!("missing ordering for row {}", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let columns = cols
        .into_iter()
        .enumerate()
        .map(|(j, c)| {
            c.ok_or_else(|| parse_err(0, format!("missing ordering for column {}", j + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    let pair = OrderingPair { rows, columns };
    pair.validate(array)?;
    Ok(pair)
}

pub fn write_orderings(pair: &OrderingPair) -> String {
    pair.to_string()
}

impl fmt::Display for OrderingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[crate::Residue]| {
            xs.iter()
                .map(|x| x.signed().to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        for (i, r) in self.rows.iter().enumerate() {
            writeln!(f, "row {}: {}", i + 1, join(r))?;
        }
        for (j, c) in self.columns.iter().enumerate() {
            writeln!(f, "col {}: {}", j + 1, join(c))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NH34: &str = "3 4 4 3 1\n1 10 -11 2\n8 6 -3 5\n-7 12 9 4\n";

    #[test]
    fn parse_and_write_are_inverse() {
        let a = parse_array(NH34).unwrap();
        assert_eq!(a.params().v, 25);
        assert_eq!(write_array(&a), NH34);
    }

    #[test]
    fn accepts_loose_whitespace() {
        let a = parse_array("1 2 2 1 1\n 1   -2 \n").unwrap();
        assert_eq!(a.to_string(), "1 2 2 1 1\n1 -2\n");
    }

    #[test]
    fn rejects_zero_and_subgroup_tokens() {
        assert!(parse_array("1 1 1 1 1\n0\n").is_err());
        // J = {0, 2} in Z_4
        assert!(parse_array("1 1 1 1 2\n2\n").is_err());
        assert!(parse_array("1 1 1 1 2\n1\n").is_ok());
    }

    #[test]
    fn rejects_out_of_range_and_malformed() {
        assert!(parse_array("1 1 1 1 1\n2\n").is_err()); // 2 > 3/2
        assert!(parse_array("1 1 1 1 1\n-1\n").is_ok());
        assert!(parse_array("1 1 1 1 1\nx\n").is_err());
        assert!(parse_array("1 1 1 1\n1\n").is_err());
        assert!(parse_array("1 1 1 1 1\n1\n1\n").is_err());
        assert!(parse_array("2 2 1 1 1\n1 .\n").is_err());
        assert!(parse_array("2 2 1 1 1\n1 2\n. .\n").is_err());
    }

    #[test]
    fn orderings_round_trip() {
        let a = parse_array(NH34).unwrap();
        let text = "row 1: 1,2,10,-11\nrow 2: 8,6,-3,5\nrow 3: 4,-7,12,9\n\
                    col 1: 1,8,-7\ncol 2: 10,6,12\ncol 3: -11,-3,9\ncol 4: 2,5,4\n";
        let pair = parse_orderings(text, &a).unwrap();
        assert_eq!(pair.to_string(), text.replace("                    ", ""));
        assert!(parse_orderings("row 1: 1,2,10,-11\n", &a).is_err());
        let wrong = text.replace("row 2: 8,6,-3,5", "row 2: 8,6,3,5");
        assert!(parse_orderings(&wrong, &a).is_err());
    }
}
