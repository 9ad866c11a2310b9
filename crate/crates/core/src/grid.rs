//! Rectangular `(n, k)` grids of exact integers and their text, CSV and JSON
//! renderings.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::NumberFamilyId;
use crate::error::{Error, Result};
use crate::numfam::{lower_assoc, upper_assoc};

/// Anything `table` can print.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFamily {
    Number(NumberFamilyId),
    UpperAssoc,
    LowerAssoc,
}

impl TableFamily {
    pub fn name(self) -> &'static str {
        match self {
            TableFamily::Number(id) => id.name(),
            TableFamily::UpperAssoc => "upper-assoc",
            TableFamily::LowerAssoc => "lower-assoc",
        }
    }

    /// First row and column index: 0 for the triangles, 1 for the
    /// associated families (whose exponent must be positive).
    pub fn start(self) -> usize {
        match self {
            TableFamily::Number(_) => 0,
            TableFamily::UpperAssoc | TableFamily::LowerAssoc => 1,
        }
    }

    pub fn value(self, n: usize, k: usize) -> Result<BigInt> {
        match self {
            TableFamily::Number(id) => Ok(id.value(n, k)),
            TableFamily::UpperAssoc => upper_assoc(n, k),
            TableFamily::LowerAssoc => lower_assoc(n, k),
        }
    }

    pub fn names() -> Vec<&'static str> {
        NumberFamilyId::ALL
            .iter()
            .map(|id| id.name())
            .chain(["upper-assoc", "lower-assoc"])
            .collect()
    }
}

impl FromStr for TableFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "upper-assoc" => Ok(TableFamily::UpperAssoc),
            "lower-assoc" => Ok(TableFamily::LowerAssoc),
            other => other.parse().map(TableFamily::Number),
        }
    }
}

impl fmt::Display for TableFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Values `family(n, k)` for `n_start <= n <= nmax`, `k_start <= k <= kmax`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberGrid {
    pub family: String,
    pub n_start: usize,
    pub k_start: usize,
    #[serde(serialize_with = "ser_rows", deserialize_with = "de_rows")]
    pub rows: Vec<Vec<BigInt>>,
}

fn ser_rows<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    text.serialize(s)
}

fn de_rows<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<BigInt>>, D::Error> {
    let text: Vec<Vec<String>> = Vec::deserialize(d)?;
    text.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|v| v.parse::<BigInt>().map_err(serde::de::Error::custom))
                .collect()
        })
        .collect()
}

impl NumberGrid {
    pub fn build(family: TableFamily, nmax: usize, kmax: usize) -> Result<Self> {
        let start = family.start();
        if nmax < start || kmax < start {
            return Err(Error::Index(format!("{family} tables start at index {start}")));
        }
        let rows = (start..=nmax)
            .map(|n| (start..=kmax).map(|k| family.value(n, k)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(NumberGrid {
            family: family.name().to_string(),
            n_start: start,
            k_start: start,
            rows,
        })
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&BigInt> {
        self.rows.get(n.checked_sub(self.n_start)?)?.get(k.checked_sub(self.k_start)?)
    }

    /// One line per row, values separated by commas.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Right-aligned columns with an `n\k` header.
    pub fn to_text(&self) -> String {
        let ncols = self.rows.first().map_or(0, Vec::len);
        let mut cells: Vec<Vec<String>> = Vec::with_capacity(self.rows.len() + 1);
        let mut header = vec!["n\\k".to_string()];
        header.extend((0..ncols).map(|c| (c + self.k_start).to_string()));
        cells.push(header);
        for (i, row) in self.rows.iter().enumerate() {
            let mut line = vec![(i + self.n_start).to_string()];
            line.extend(row.iter().map(ToString::to_string));
            cells.push(line);
        }
        let widths: Vec<usize> = (0..=ncols)
            .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            let padded: Vec<String> = row.iter().zip(&widths).map(|(v, w)| format!("{v:>w$}")).collect();
            out.push_str(&padded.join("  "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("grid serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}
