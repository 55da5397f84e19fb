//! On-disk square format: versioned JSON or bare CSV.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use franklin_core::{check_natural, Grid, MAX_ORDER};
use serde::Deserialize;

use crate::error::CliError;

pub const SCHEMA: &str = "franklin-forge/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    /// JSON when the first non-blank byte opens an object.
    pub fn sniff(text: &str) -> Format {
        if text.trim_start().starts_with('{') {
            Format::Json
        } else {
            Format::Csv
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareDocument {
    pub order: usize,
    pub p: Option<usize>,
    pub k: Option<usize>,
    pub r: Option<u32>,
    pub grid: Grid,
    pub metadata: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    schema: Option<String>,
    order: usize,
    p: Option<usize>,
    k: Option<usize>,
    r: Option<u32>,
    entries: Vec<Vec<i64>>,
    #[serde(default)]
    metadata: BTreeMap<String, String>,
}

fn input(message: impl Into<String>) -> CliError {
    CliError::Input(message.into())
}

impl SquareDocument {
    pub fn new(grid: Grid) -> Result<Self, CliError> {
        if !grid.is_square() {
            return Err(input(format!(
                "expected a square, got {} rows of {} entries",
                grid.rows(),
                grid.cols()
            )));
        }
        if grid.rows() > MAX_ORDER {
            return Err(input(format!(
                "order {} exceeds the supported maximum {MAX_ORDER}",
                grid.rows()
            )));
        }
        Ok(SquareDocument {
            order: grid.rows(),
            p: None,
            k: None,
            r: None,
            grid,
            metadata: BTreeMap::new(),
        })
    }

    pub fn parse(text: &str, format: Format) -> Result<Self, CliError> {
        match format {
            Format::Csv => {
                let grid = Grid::from_csv(text).map_err(|e| input(format!("CSV: {e}")))?;
                SquareDocument::new(grid)
            }
            Format::Json => {
                let raw: JsonDocument =
                    serde_json::from_str(text).map_err(|e| input(format!("JSON: {e}")))?;
                if let Some(schema) = &raw.schema {
                    if schema != SCHEMA {
                        return Err(input(format!(
                            "unsupported schema {schema:?} (expected {SCHEMA:?})"
                        )));
                    }
                }
                if raw.entries.len() != raw.order {
                    return Err(input(format!(
                        "order {} but {} rows of entries",
                        raw.order,
                        raw.entries.len()
                    )));
                }
                let grid =
                    Grid::from_rows(&raw.entries).map_err(|e| input(format!("JSON: {e}")))?;
                if grid.cols() != raw.order {
                    return Err(input(format!(
                        "order {} but rows have {} entries",
                        raw.order,
                        grid.cols()
                    )));
                }
                let mut doc = SquareDocument::new(grid)?;
                doc.p = raw.p;
                doc.k = raw.k;
                doc.r = raw.r;
                doc.metadata = raw.metadata;
                Ok(doc)
            }
        }
    }

    pub fn parse_auto(text: &str) -> Result<Self, CliError> {
        SquareDocument::parse(text, Format::sniff(text))
    }

    /// Describes why the entries are not `0..n²`, if they are not.
    pub fn natural_warning(&self) -> Option<String> {
        check_natural(&self.grid)
            .witness
            .map(|w| format!("entries are not 0..{}: {w}", self.order * self.order))
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.grid.to_csv(),
        }
    }

    /// Canonical JSON: fixed key order, one row of entries per line.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"schema\": {},", quote(SCHEMA));
        let _ = writeln!(out, "  \"order\": {},", self.order);
        if let Some(p) = self.p {
            let _ = writeln!(out, "  \"p\": {p},");
        }
        if let Some(k) = self.k {
            let _ = writeln!(out, "  \"k\": {k},");
        }
        if let Some(r) = self.r {
            let _ = writeln!(out, "  \"r\": {r},");
        }
        out.push_str("  \"entries\": [\n");
        for row in 0..self.order {
            let line: Vec<String> = self.grid.row(row).iter().map(i64::to_string).collect();
            let sep = if row + 1 < self.order { "," } else { "" };
            let _ = writeln!(out, "    [{}]{sep}", line.join(", "));
        }
        out.push_str("  ],\n");
        out.push_str("  \"metadata\": {");
        let fields: Vec<String> = self
            .metadata
            .iter()
            .map(|(k, v)| format!("\n    {}: {}", quote(k), quote(v)))
            .collect();
        if fields.is_empty() {
            out.push_str("}\n");
        } else {
            out.push_str(&fields.join(","));
            out.push_str("\n  }\n");
        }
        out.push_str("}\n");
        out
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}
