//! Classification statements and first-order tables as data.
//!
//! Statement lines read `condition | expected_row | reduction_set | source_item`.
//! A condition is a conjunction of clauses joined by `&`, optionally an
//! equivalence `lhs <=> rhs`; a clause may offer alternatives joined by `or`.
//! Rows hold five entries, each a number or a free symbol `qk`/`-qk`.
//! Sources read `list.item`, optionally followed by `@ op; op; ...`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{FqError, Result};
use crate::hyperscaling::{parse_clause, residual, Coefficients, Cond};
use crate::mixedbase::{Component, IndexTable};

pub const FILES: [(&str, &str); 9] = [
    ("scalar", include_str!("../data/statements/scalar.txt")),
    ("scalar-oi", include_str!("../data/statements/scalar-oi.txt")),
    ("vectorial", include_str!("../data/statements/vectorial.txt")),
    ("vectorial-oi", include_str!("../data/statements/vectorial-oi.txt")),
    ("pseudoscalar", include_str!("../data/statements/pseudoscalar.txt")),
    ("pseudoscalar-oi", include_str!("../data/statements/pseudoscalar-oi.txt")),
    ("combined", include_str!("../data/statements/combined.txt")),
    ("conjugation", include_str!("../data/statements/conjugation.txt")),
    ("remarks", include_str!("../data/statements/remarks.txt")),
];

pub const TABLES: &str = include_str!("../data/tables.txt");

fn bad(what: &str, s: &str) -> FqError {
    FqError::ConfigInvalid(format!("malformed {what} `{s}`"))
}

/// Alternatives, each a conjunction of conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct Clause(pub Vec<Vec<Cond>>);

#[derive(Debug, Clone, PartialEq)]
pub struct Formula {
    pub lhs: Vec<Clause>,
    pub rhs: Option<Vec<Clause>>,
}

fn parse_side(s: &str) -> Result<Vec<Clause>> {
    s.split('&')
        .map(|c| {
            let c = c.trim().trim_start_matches('(').trim_end_matches(')');
            Ok(Clause(c.split(" or ").map(parse_clause).collect::<Result<_>>()?))
        })
        .collect()
}

impl FromStr for Formula {
    type Err = FqError;
    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.split("<=>");
        let lhs = parse_side(it.next().unwrap_or(""))?;
        let rhs = it.next().map(parse_side).transpose()?;
        if it.next().is_some() {
            return Err(bad("formula", s));
        }
        Ok(Formula { lhs, rhs })
    }
}

/// Residual of a side: worst clause, each clause at its best alternative.
pub fn side_residual(side: &[Clause], c: &Coefficients, t: &IndexTable) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for cl in side {
        let mut best = f64::INFINITY;
        for alt in &cl.0 {
            let mut r: f64 = 0.0;
            for cond in alt {
                r = r.max(residual(cond, c, t)?);
            }
            best = best.min(r);
        }
        worst = worst.max(best);
    }
    Ok(worst)
}

impl Formula {
    pub fn conds(&self) -> impl Iterator<Item = &Cond> {
        self.lhs.iter().chain(self.rhs.iter().flatten()).flat_map(|c| c.0.iter().flatten())
    }

    pub fn component(&self) -> Option<Component> {
        self.conds().next().map(|c| c.component())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RowEntry {
    Num(f64),
    Free { index: usize, sign: f64 },
}

impl FromStr for RowEntry {
    type Err = FqError;
    fn from_str(s: &str) -> Result<Self> {
        let (sign, rest) = match s.strip_prefix('-') {
            Some(r) if r.starts_with('q') => (-1.0, r),
            _ => (1.0, s),
        };
        if let Some(k) = rest.strip_prefix('q') {
            let index = k.parse().map_err(|_| bad("row entry", s))?;
            return Ok(RowEntry::Free { index, sign });
        }
        s.parse().map(RowEntry::Num).map_err(|_| bad("row entry", s))
    }
}

impl fmt::Display for RowEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RowEntry::Num(v) => write!(f, "{v}"),
            RowEntry::Free { index, sign } => write!(f, "{}q{index}", if sign < 0.0 { "-" } else { "" }),
        }
    }
}

/// Distance of `p1[..n]` from a row pattern.  Numbers scale with `p0`;
/// each free symbol must take one value (up to its sign) wherever it occurs.
pub fn row_residual(pattern: &[RowEntry], p0: f64, p1: &[f64; 8]) -> f64 {
    let mut seen: BTreeMap<usize, f64> = BTreeMap::new();
    let mut r: f64 = 0.0;
    for (k, e) in pattern.iter().enumerate() {
        match *e {
            RowEntry::Num(v) => r = r.max((p1[k] - v * p0).abs()),
            RowEntry::Free { index, sign } => {
                let v = sign * p1[k];
                match seen.get(&index) {
                    Some(&w) => r = r.max((v - w).abs()),
                    None => {
                        seen.insert(index, v);
                    }
                }
            }
        }
    }
    r
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionSet {
    pub negated: bool,
    pub indices: Vec<usize>,
}

impl FromStr for ReductionSet {
    type Err = FqError;
    fn from_str(s: &str) -> Result<Self> {
        let (negated, rest) = match s.strip_prefix("ne") {
            Some(r) => (true, r),
            None => (false, s.strip_prefix('e').ok_or_else(|| bad("reduction set", s))?),
        };
        let inner = rest.strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(|| bad("reduction set", s))?;
        let indices = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(|k| k.trim().parse().map_err(|_| bad("reduction set", s))).collect::<Result<_>>()?
        };
        Ok(ReductionSet { negated, indices })
    }
}

impl fmt::Display for ReductionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.indices.iter().map(|k| k.to_string()).collect();
        write!(f, "{}{{{}}}", if self.negated { "ne" } else { "e" }, v.join(","))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub list: String,
    pub item: String,
    pub text: String,
    pub formula: Formula,
    pub row: Option<Vec<RowEntry>>,
    pub reduction: Option<ReductionSet>,
    pub ops: Vec<String>,
}

impl Statement {
    /// `list.item`
    pub fn source(&self) -> String {
        format!("{}.{}", self.list, self.item)
    }
}

pub fn parse_line(line: &str) -> Result<Statement> {
    let f: Vec<&str> = line.split(" | ").map(str::trim).collect();
    if f.len() != 4 {
        return Err(bad("statement line", line));
    }
    let formula: Formula = f[0].parse()?;
    let row = match f[1] {
        "-" => None,
        r => Some(r.split_whitespace().map(str::parse).collect::<Result<Vec<RowEntry>>>()?),
    };
    let reduction = match f[2] {
        "-" => None,
        r => Some(r.parse()?),
    };
    let (src, ops) = match f[3].split_once(" @ ") {
        Some((s, o)) => (s, o.split(';').map(|x| x.trim().to_string()).collect()),
        None => (f[3], Vec::new()),
    };
    let (list, item) = src.split_once('.').ok_or_else(|| bad("source item", src))?;
    Ok(Statement { list: list.into(), item: item.into(), text: f[0].into(), formula, row, reduction, ops })
}

pub fn parse_file(text: &str) -> Result<Vec<Statement>> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(parse_line).collect()
}

pub fn all() -> Result<Vec<Statement>> {
    let mut v = Vec::new();
    for (_, text) in FILES {
        v.extend(parse_file(text)?);
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub op: String,
    pub component: Component,
    pub row: [f64; 8],
}

pub fn tables() -> Result<Vec<TableRow>> {
    TABLES
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split(" | ").collect();
            if f.len() != 3 {
                return Err(bad("table line", l));
            }
            let v: Vec<f64> = f[2].split_whitespace().map(|x| x.parse().map_err(|_| bad("table row", l))).collect::<Result<_>>()?;
            let row: [f64; 8] = v.try_into().map_err(|_| bad("table row", l))?;
            Ok(TableRow { op: f[0].trim().into(), component: f[1].parse()?, row })
        })
        .collect()
}

/// Outcome of one statement on one coefficient set.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub lhs: f64,
    pub rhs: Option<f64>,
    pub row: Option<f64>,
}

impl Evaluation {
    pub fn lhs_holds(&self, tol: f64) -> bool {
        self.lhs <= tol
    }

    pub fn rhs_holds(&self, tol: f64) -> Option<bool> {
        self.rhs.map(|r| r <= tol)
    }

    /// Both sides hold (an example of the statement).
    pub fn holds(&self, tol: f64) -> bool {
        self.lhs_holds(tol) && self.rhs_holds(tol).unwrap_or(true)
    }

    /// The equivalence is respected and, under the hypothesis, the row fits.
    pub fn consistent(&self, tol: f64, row_tol: f64) -> bool {
        let eq = self.rhs_holds(tol).is_none_or(|r| r == self.lhs_holds(tol));
        let row = !self.lhs_holds(tol) || self.row.is_none_or(|r| r <= row_tol);
        eq && row
    }
}

pub fn evaluate(s: &Statement, c: &Coefficients, t: &IndexTable) -> Result<Evaluation> {
    Ok(Evaluation {
        lhs: side_residual(&s.formula.lhs, c, t)?,
        rhs: s.formula.rhs.as_deref().map(|r| side_residual(r, c, t)).transpose()?,
        row: s.row.as_deref().map(|r| row_residual(r, c.p0, &c.p1)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_parses() {
        let all = all().unwrap();
        assert_eq!(all.iter().filter(|s| s.list == "scalar").count(), 40);
        assert_eq!(all.iter().filter(|s| s.list == "pseudoscalar").count(), 32);
        assert_eq!(tables().unwrap().len(), 19);
        for s in &all {
            assert!(s.formula.conds().all(|c| Some(c.component()) == s.formula.component()), "{}", s.source());
            if let Some(r) = &s.row {
                assert_eq!(r.len(), 5, "{}", s.source());
            }
        }
    }

    #[test]
    fn free_symbols_match_reduction_sets() {
        for s in all().unwrap() {
            let (Some(row), Some(set)) = (&s.row, &s.reduction) else { continue };
            if set.negated || !s.ops.is_empty() {
                continue;
            }
            let mut q: Vec<usize> = row
                .iter()
                .filter_map(|e| match e {
                    RowEntry::Free { index, .. } => Some(*index),
                    _ => None,
                })
                .collect();
            q.sort();
            q.dedup();
            assert_eq!(q, set.indices, "{}", s.source());
        }
    }

    #[test]
    fn formula_shapes() {
        let f: Formula = "(6[0]2 or 6[0]5) & 7[0]2 & 8[0]5".parse().unwrap();
        assert_eq!(f.lhs.len(), 3);
        assert_eq!(f.lhs[0].0.len(), 2);
        let f: Formula = "1,4[0]2 & 2,4[0]5 <=> 5[0]<+1>".parse().unwrap();
        assert_eq!(f.lhs[0].0[0].len(), 2);
        assert!(f.rhs.is_some());
        assert!("1[0]1 <=> 2[0]1 <=> 3[0]1".parse::<Formula>().is_err());
    }

    #[test]
    fn rows() {
        let pat: Vec<RowEntry> = "-q3 q3 q3 -q3 0".split(' ').map(|x| x.parse().unwrap()).collect();
        assert_eq!(row_residual(&pat, 1.0, &[-0.4, 0.4, 0.4, -0.4, 0.0, 9.0, 9.0, 9.0]), 0.0);
        assert!(row_residual(&pat, 1.0, &[0.4, 0.4, 0.4, -0.4, 0.0, 0.0, 0.0, 0.0]) > 0.7);
        assert_eq!("e{}".parse::<ReductionSet>().unwrap().indices, Vec::<usize>::new());
        assert!("ne{1,4,5}".parse::<ReductionSet>().unwrap().negated);
    }
}
