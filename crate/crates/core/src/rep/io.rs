use serde::{Deserialize, Serialize};

use super::RepMatrix;
use crate::error::{Error, Result};
use crate::scalar::{FieldContext, Scalar, ScalarJson};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntryJson {
    pub row: usize,
    pub col: usize,
    pub c: ScalarJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub entries: Vec<MatrixEntryJson>,
}

impl MatrixJson {
    pub fn from_matrix(m: &RepMatrix) -> MatrixJson {
        MatrixJson {
            dim: m.rows(),
            entries: m.entries().map(|(row, col, v)| MatrixEntryJson { row, col, c: v.to_json() }).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<RepMatrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            if e.row >= self.dim || e.col >= self.dim {
                return Err(Error::Parse(format!("entry ({}, {}) outside dimension {}", e.row, e.col, self.dim)));
            }
            entries.push((e.row, e.col, Scalar::from_json(&e.c)?));
        }
        Ok(RepMatrix::from_triplets(self.dim, self.dim, entries))
    }
}

/// `row,col,value` lines with the value written as a polynomial in `q`.
pub fn to_csv(m: &RepMatrix) -> String {
    let mut out = String::from("row,col,value\n");
    for (i, j, v) in m.entries() {
        out.push_str(&format!("{i},{j},\"{v}\"\n"));
    }
    out
}

pub fn from_csv(ctx: &'static FieldContext, dim: usize, text: &str) -> Result<RepMatrix> {
    let mut entries = Vec::new();
    for (n, line) in text.lines().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.splitn(3, ',');
        let bad = || Error::Parse(format!("line {}: expected row,col,value", n + 1));
        let i: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let j: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let v = parts.next().ok_or_else(bad)?.trim().trim_matches('"');
        entries.push((i, j, Scalar::parse(ctx, v)?));
    }
    Ok(RepMatrix::from_triplets(dim, dim, entries))
}
