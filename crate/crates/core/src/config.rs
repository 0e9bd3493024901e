//! Custom-algebra config files: a structured key/value text format with
//! fields `dim`, `names`, `rank`, `brackets` (records {i, j, coeffs}
//! with 1-based indices, given for i < j), and an optional `invariants`
//! list of polynomial expression strings. Rationals are quoted strings
//! `"p/q"`. Construction errors surface with the file location.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::expr::parse_poly_with_names;
use crate::lie::{BracketEntry, LieAlgebra};
use crate::scalars::Rational;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: Option<String>,
    dim: usize,
    names: Vec<String>,
    rank: usize,
    #[serde(default)]
    brackets: Vec<BracketRow>,
    invariants: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketRow {
    i: usize,
    j: usize,
    coeffs: BTreeMap<String, String>,
}

/// Load an algebra from a config file.
pub fn load_algebra_file(path: &Path) -> Result<LieAlgebra> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Error::IoError {
        path: display.clone(),
        detail: e.to_string(),
    })?;
    parse_algebra_config(&text, &display)
}

/// Parse config text; `location` names the source in error messages.
pub fn parse_algebra_config(text: &str, location: &str) -> Result<LieAlgebra> {
    let wrap = |detail: String| Error::FormatError {
        path: location.to_string(),
        detail,
    };
    let file: AlgebraFile = toml::from_str(text).map_err(|e| wrap(e.to_string()))?;
    if file.names.len() != file.dim {
        return Err(wrap(format!(
            "dim is {} but {} names were given",
            file.dim,
            file.names.len()
        )));
    }
    let mut entries = Vec::new();
    for row in &file.brackets {
        if row.i == 0 || row.j == 0 || row.i > file.dim || row.j > file.dim {
            return Err(wrap(format!(
                "bracket indices ({}, {}) out of range 1..{}",
                row.i, row.j, file.dim
            )));
        }
        let mut coeffs = Vec::new();
        for (k, v) in &row.coeffs {
            let idx: usize = k
                .parse()
                .map_err(|_| wrap(format!("bracket coefficient key `{k}` is not an index")))?;
            if idx == 0 || idx > file.dim {
                return Err(wrap(format!(
                    "coefficient index {idx} out of range 1..{}",
                    file.dim
                )));
            }
            let value: Rational = v
                .parse()
                .map_err(|e: Error| wrap(format!("coefficient `{v}`: {e}")))?;
            coeffs.push((idx - 1, value));
        }
        entries.push(BracketEntry {
            i: row.i - 1,
            j: row.j - 1,
            coeffs,
        });
    }
    let label = file.name.clone().unwrap_or_else(|| "custom".to_string());
    let algebra = LieAlgebra::make_algebra(&label, file.names.clone(), file.rank, &entries)
        .map_err(|e| wrap(e.to_string()))?;
    match &file.invariants {
        None => {
            if !algebra.has_invariants() {
                Err(wrap(
                    Error::MissingInvariants { rank: file.rank }.to_string(),
                ))
            } else {
                Ok(algebra)
            }
        }
        Some(sources) => {
            let coord_names: Vec<String> = file.names.iter().map(|s| format!("x{s}")).collect();
            let mut polys = Vec::new();
            for src in sources {
                let p = parse_poly_with_names(src, &coord_names)
                    .map_err(|e| wrap(format!("invariant `{src}`: {e}")))?;
                polys.push(p);
            }
            algebra
                .with_invariants(polys)
                .map_err(|e| wrap(e.to_string()))
        }
    }
}

/// Resolve `--algebra`: a built-in name or a path to a config file.
pub fn load_algebra(name_or_path: &str) -> Result<LieAlgebra> {
    if let Some(builtin) = LieAlgebra::builtin(name_or_path) {
        return Ok(builtin);
    }
    load_algebra_file(Path::new(name_or_path))
}
