//! Polytope documents: JSON objects with `dim`, `vertices` and optional
//! `facets`.
//!
//! ```json
//! { "dim": 2,
//!   "vertices": [[0,0],[1,0],[1,2]],
//!   "facets": [{"normal": [0,1], "offset": 0}] }
//! ```
//!
//! Integers may be JSON numbers of any size or decimal strings.

use std::fs;
use std::path::Path;

use latpoly_core::{Facet, IntVector, SimplePolytope};
use num_bigint::BigInt;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Clone, Debug)]
pub struct Loaded {
    pub path: String,
    pub sha256: String,
    pub polytope: SimplePolytope,
}

pub fn load(path: &Path) -> Result<Loaded, CliError> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::validation(format!("cannot read {}: {e}", path.display())))?;
    let polytope = parse(&bytes)?;
    Ok(Loaded {
        path: path.display().to_string(),
        sha256: hex::encode(Sha256::digest(&bytes)),
        polytope,
    })
}

pub fn parse(bytes: &[u8]) -> Result<SimplePolytope, CliError> {
    let doc: Value = serde_json::from_slice(bytes)
        .map_err(|e| CliError::validation(format!("malformed document: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| CliError::validation("document must be a JSON object"))?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::validation("`dim` must be a non-negative integer"))?
        as usize;
    let vertices = obj
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::validation("`vertices` must be an array"))?
        .iter()
        .enumerate()
        .map(|(i, v)| vector(v, &format!("vertices[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let facets = match obj.get("facets") {
        None | Some(Value::Null) => None,
        Some(Value::Array(list)) => Some(
            list.iter()
                .enumerate()
                .map(|(i, f)| facet(f, i))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        Some(_) => return Err(CliError::validation("`facets` must be an array")),
    };
    SimplePolytope::new(dim, vertices, facets).map_err(CliError::from)
}

fn facet(v: &Value, i: usize) -> Result<Facet, CliError> {
    let what = format!("facets[{i}]");
    let normal = v
        .get("normal")
        .ok_or_else(|| CliError::validation(format!("{what}: missing `normal`")))?;
    let offset = v
        .get("offset")
        .ok_or_else(|| CliError::validation(format!("{what}: missing `offset`")))?;
    Ok(Facet::new(
        vector(normal, &format!("{what}.normal"))?,
        integer(offset, &format!("{what}.offset"))?,
    ))
}

fn vector(v: &Value, what: &str) -> Result<IntVector, CliError> {
    let items = v
        .as_array()
        .ok_or_else(|| CliError::validation(format!("{what} must be an array of integers")))?;
    let coords = items
        .iter()
        .enumerate()
        .map(|(j, x)| integer(x, &format!("{what}[{j}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntVector(coords))
}

fn integer(v: &Value, what: &str) -> Result<BigInt, CliError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        _ => return Err(CliError::validation(format!("{what} must be an integer"))),
    };
    text.parse()
        .map_err(|_| CliError::validation(format!("{what} must be an integer, got {text}")))
}
