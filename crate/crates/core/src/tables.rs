//! Published code tables and their reproduction.
//!
//! Rows of the first two tables are rebuilt from their coset leaders and
//! searched within a budget. Third-table rows are composed from factors in
//! the first two tables with the product rule, without any search; the
//! factor distances are the published ones.

use crate::cyclotomic::{Ambient, CosetSet, Shift};
use crate::error::Result;
use crate::quantum::{catalogued, duadic_quantum, product_rule, Degeneracy, QuantumParams};
use crate::splitting::Splitting;
use crate::weights::{Distance, SearchConfig};
use serde::Serialize;
use std::fmt;

/// A row of a duadic code table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Row {
    pub n: u32,
    pub shift: Shift,
    pub leaders: &'static [u32],
    pub k: u32,
    pub d: u32,
    pub degenerate: bool,
}

const fn row(n: u32, shift: Shift, leaders: &'static [u32], k: u32, d: u32, degenerate: bool) -> Row {
    Row { n, shift, leaders, k, d, degenerate }
}

const ONE: Shift = Shift::One;
const OMEGA: Shift = Shift::Omega;

/// Codes of dimension greater than one.
pub const TABLE_1: &[Row] = &[
    row(15, ONE, &[1, 2, 3], 3, 5, false),
    row(21, OMEGA, &[1, 10, 13], 3, 6, false),
    row(39, OMEGA, &[1, 7, 19], 3, 11, false),
    row(45, ONE, &[1, 2, 3, 6, 9], 9, 5, false),
    row(51, ONE, &[1, 2, 3, 5, 7, 9], 3, 11, false),
    row(63, ONE, &[1, 2, 3, 5, 6, 9, 10, 11, 13], 9, 7, false),
    row(69, ONE, &[1, 2, 15], 3, 11, false),
    row(75, ONE, &[1, 2, 3, 5, 10, 15], 3, 15, true),
    row(87, ONE, &[1, 2, 3], 3, 17, false),
    row(93, ONE, &[1, 5, 9, 13, 17, 23, 33, 34, 45], 3, 21, false),
    row(95, OMEGA, &[1, 13, 19], 19, 5, false),
    row(105, OMEGA, &[1, 25, 46, 94, 130, 136, 160, 226, 301, 304], 3, 18, true),
    row(111, OMEGA, &[1, 7, 19], 3, 25, false),
];

/// One-dimensional codes from cyclic duadic codes.
pub const TABLE_2: &[Row] = &[
    row(5, ONE, &[1], 1, 3, false),
    row(7, ONE, &[1], 1, 3, false),
    row(13, ONE, &[1], 1, 5, false),
    row(17, ONE, &[1, 3], 1, 7, false),
    row(23, ONE, &[1], 1, 7, false),
    row(25, ONE, &[1, 5], 1, 9, true),
    row(29, ONE, &[1], 1, 11, false),
    row(35, ONE, &[1, 2, 7, 15], 1, 9, true),
    row(37, ONE, &[1], 1, 11, false),
    row(41, ONE, &[1, 3], 1, 11, false),
    row(47, ONE, &[1], 1, 11, false),
    row(49, ONE, &[1, 7], 1, 9, true),
    row(53, ONE, &[1], 1, 15, false),
    row(61, ONE, &[1], 1, 17, false),
    row(65, ONE, &[1, 5, 6, 9, 11, 26], 1, 15, true),
    row(79, ONE, &[1], 1, 15, false),
    row(85, ONE, &[1, 5, 6, 9, 14, 15, 19, 21, 29, 34, 41], 1, 21, true),
    row(91, ONE, &[1, 9, 13, 68, 69, 77, 79, 82], 1, 15, true),
    row(97, ONE, &[1, 5], 1, 17, false),
    row(101, ONE, &[1], 1, 21, false),
    row(103, ONE, &[1], 1, 19, false),
    row(109, ONE, &[1, 3, 9], 1, 21, false),
    row(113, ONE, &[1, 3, 9, 10], 1, 23, false),
    row(119, ONE, &[1, 2, 3, 6, 7, 21, 51], 1, 19, false),
];

/// Product-rule codes `(n, k, d)`; all degenerate.
pub const TABLE_3: &[(u32, u32, u32)] = &[
    (125, 1, 27),
    (145, 1, 33),
    (195, 3, 33),
    (221, 1, 35),
    (225, 9, 15),
    (255, 3, 35),
    (265, 1, 45),
    (289, 1, 49),
    (305, 1, 51),
    (315, 9, 21),
    (357, 3, 42),
    (375, 3, 45),
    (377, 1, 55),
    (425, 1, 63),
    (435, 3, 51),
    (435, 3, 55),
    (475, 19, 15),
    (493, 1, 77),
    (507, 3, 55),
    (555, 3, 75),
    (585, 9, 25),
    (625, 1, 81),
    (663, 3, 77),
    (725, 1, 99),
    (765, 9, 35),
    (841, 1, 121),
    (915, 3, 85),
    (975, 3, 99),
];

impl Row {
    pub fn splitting(&self) -> Result<Splitting> {
        let amb = Ambient::new(self.n, self.shift)?;
        Splitting::from_odd_set(CosetSet::from_leaders(amb, self.leaders)?)
    }

    /// The row as a factor with its published parameters.
    pub fn as_factor(&self) -> Result<QuantumParams> {
        let deg = if self.degenerate { Degeneracy::Yes } else { Degeneracy::No };
        catalogued(&self.splitting()?, Distance::Exact(self.d), deg)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "UPPERCASE")]
pub enum Status {
    Match,
    Mismatch(String),
    Skipped(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Match => f.write_str("MATCH"),
            Status::Mismatch(_) => f.write_str("MISMATCH"),
            Status::Skipped(why) => write!(f, "SKIPPED({why})"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Expected {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub degenerate: bool,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.d)
    }
}

#[derive(Debug, Clone)]
pub struct RowReport {
    pub table: u8,
    pub expected: Expected,
    pub got: Option<QuantumParams>,
    pub status: Status,
}

fn judge(exp: &Expected, q: &QuantumParams) -> Status {
    if q.n != exp.n || q.k != exp.k {
        return Status::Mismatch(format!("got {}", q.bracket()));
    }
    if !q.d.admits(exp.d) {
        return Status::Mismatch(format!("certified d = {} excludes {}", q.d, exp.d));
    }
    let want = if exp.degenerate { Degeneracy::Yes } else { Degeneracy::No };
    match q.degenerate {
        Degeneracy::Unknown => {}
        g if g != want => return Status::Mismatch(format!("degenerate = {g}")),
        _ => {}
    }
    if q.d.is_exact() && q.degenerate != Degeneracy::Unknown {
        Status::Match
    } else {
        Status::Skipped("budget".into())
    }
}

pub fn rows(table: u8) -> &'static [Row] {
    match table {
        1 => TABLE_1,
        2 => TABLE_2,
        _ => &[],
    }
}

/// Rebuild and search the rows of table 1 or 2 whose length is in `only`
/// (all rows when `None`).
pub fn reproduce_searched(table: u8, only: Option<&[u32]>, cfg: &SearchConfig) -> Result<Vec<RowReport>> {
    let mut out = Vec::new();
    for r in rows(table).iter().filter(|r| only.map_or(true, |ns| ns.contains(&r.n))) {
        let exp = Expected { n: r.n, k: r.k, d: r.d, degenerate: r.degenerate };
        let q = duadic_quantum(&r.splitting()?, cfg)?;
        let status = judge(&exp, &q);
        out.push(RowReport { table, expected: exp, got: Some(q), status });
    }
    Ok(out)
}

/// Compose every table 3 row from factors in tables 1 and 2 and earlier
/// composed rows. The left factor is any duadic code; the right one a
/// non-degenerate one-dimensional code.
pub fn reproduce_composed(only: Option<&[u32]>) -> Result<Vec<RowReport>> {
    let mut pool: Vec<QuantumParams> = Vec::new();
    for r in TABLE_1.iter().chain(TABLE_2) {
        pool.push(r.as_factor()?);
    }
    let right: Vec<QuantumParams> = pool.iter().filter(|q| q.k == 1 && q.degenerate == Degeneracy::No).cloned().collect();
    let mut out = Vec::new();
    for &(n, k, d) in TABLE_3 {
        let exp = Expected { n, k, d, degenerate: true };
        let mut found: Option<QuantumParams> = None;
        for l in &pool {
            for r in &right {
                if l.n * r.n != n || l.k != k || l.d.exact().zip(r.d.exact()).map(|(a, b)| a * b) != Some(d) {
                    continue;
                }
                if let Ok(q) = product_rule(l, r) {
                    // Prefer a decomposition whose right length certifies degeneracy.
                    if found.as_ref().map_or(true, |f| f.degenerate == Degeneracy::Unknown && q.degenerate == Degeneracy::Yes) {
                        found = Some(q);
                    }
                }
            }
        }
        if let Some(q) = &found {
            pool.push(q.clone());
        }
        if only.map_or(true, |ns| ns.contains(&n)) {
            let status = match &found {
                Some(q) => judge(&exp, q),
                None => Status::Mismatch("no decomposition into catalogued factors".into()),
            };
            out.push(RowReport { table: 3, expected: exp, got: found, status });
        }
    }
    Ok(out)
}

/// Reproduce a table: 1 and 2 by search, 3 by composition.
pub fn reproduce_table(table: u8, only: Option<&[u32]>, cfg: &SearchConfig) -> Result<Vec<RowReport>> {
    match table {
        1 | 2 => reproduce_searched(table, only, cfg),
        3 => reproduce_composed(only),
        _ => Err(crate::Error::Precondition(format!("there is no table {table}"))),
    }
}
