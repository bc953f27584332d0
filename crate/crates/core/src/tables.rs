//! Simultaneous eigenspace tables and their renderings.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "columns")]
    Columns,
    #[serde(rename = "two-blocks")]
    TwoBlocks,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "columns" => Ok(Family::Columns),
            "two-blocks" => Ok(Family::TwoBlocks),
            other => Err(Error::UnknownSuite(format!("family {other}"))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Columns => write!(f, "columns"),
            Family::TwoBlocks => write!(f, "two-blocks"),
        }
    }
}

/// One simultaneous eigenspace: the eigenvalue for each operator of the
/// family, the `w_0` sign when it acts as a scalar, and the irreducible
/// multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub eigenvalues: Vec<i64>,
    pub w0: Option<i8>,
    pub multiplicities: BTreeMap<String, u64>,
}

impl TableRow {
    /// Filtration level read off the eigenvalue vector (columns family):
    /// nonzero from the first operator means the top factor `j = n`,
    /// otherwise `j = n - k_0` for the first nonzero position `k_0`,
    /// and the common kernel sits at `j = 0`.
    pub fn level(&self, n: usize) -> usize {
        match self.eigenvalues.iter().position(|&e| e != 0) {
            None => 0,
            Some(0) => n,
            Some(idx) => n - (idx + 1),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectraTable {
    pub schema: u32,
    pub n: usize,
    pub family: Family,
    /// Operator column labels, e.g. `nu_{(2,1^2)}`.
    pub operators: Vec<String>,
    pub rows: Vec<TableRow>,
    /// Non-integer eigenvalue findings (empty when Conjecture-style
    /// integrality holds, which it does everywhere in scope).
    pub integrality_violations: Vec<String>,
}

impl SpectraTable {
    /// Canonical row order: level descending, then `w_0 = +1` before `-1`,
    /// then eigenvalue vector descending lexicographically.
    pub fn sort_rows(&mut self) {
        let n = self.n;
        self.rows.sort_by(|a, b| {
            b.level(n)
                .cmp(&a.level(n))
                .then_with(|| b.w0.unwrap_or(0).cmp(&a.w0.unwrap_or(0)))
                .then_with(|| b.eigenvalues.cmp(&a.eigenvalues))
                .then_with(|| a.multiplicities.cmp(&b.multiplicities))
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let mut header: Vec<String> = self.operators.clone();
        header.push("w0".into());
        header.push("multiplicities".into());
        out.push_str(&header.join("\t"));
        out.push('\n');
        for row in &self.rows {
            let mut cells: Vec<String> =
                row.eigenvalues.iter().map(|e| e.to_string()).collect();
            cells.push(match row.w0 {
                Some(s) => s.to_string(),
                None => "null".into(),
            });
            let mults: Vec<String> = row
                .multiplicities
                .iter()
                .map(|(l, m)| format!("{l}:{m}"))
                .collect();
            cells.push(mults.join(","));
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        out
    }

    /// Markdown mirroring the appendix layout: zeros as dots, one block per
    /// filtration level for the columns family.
    pub fn to_markdown(&self) -> String {
        let mut lambdas: Vec<String> = Vec::new();
        for row in &self.rows {
            for l in row.multiplicities.keys() {
                if !lambdas.contains(l) {
                    lambdas.push(l.clone());
                }
            }
        }
        let mut out = String::new();
        let mut header: Vec<String> = self.operators.clone();
        header.push("w0".into());
        header.extend(lambdas.iter().map(|l| format!("chi^{{{l}}}")));
        out.push_str(&format!("| {} |\n", header.join(" | ")));
        out.push_str(&format!("|{}\n", "---|".repeat(header.len())));
        let mut last_level: Option<usize> = None;
        for row in &self.rows {
            let level = row.level(self.n);
            if self.family == Family::Columns {
                if let Some(prev) = last_level {
                    if prev != level {
                        let sep: Vec<&str> = header.iter().map(|_| " ").collect();
                        out.push_str(&format!("| {} |\n", sep.join(" | ")));
                    }
                }
            }
            last_level = Some(level);
            let mut cells: Vec<String> = row
                .eigenvalues
                .iter()
                .map(|&e| if e == 0 { "·".into() } else { e.to_string() })
                .collect();
            cells.push(match row.w0 {
                Some(1) => "1".into(),
                Some(-1) => "-1".into(),
                _ => "?".into(),
            });
            for l in &lambdas {
                let m = row.multiplicities.get(l).copied().unwrap_or(0);
                cells.push(if m == 0 { "·".into() } else { m.to_string() });
            }
            out.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
        out
    }
}
