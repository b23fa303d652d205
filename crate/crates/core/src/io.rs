//! JSON algebra files.
//!
//! ```json
//! { "dim": 2, "squares": [["0", "1"], ["0", "0"]], "name": "N_{2,2}" }
//! ```
//!
//! Row `i` of `squares` holds the coordinates of `e_{i+1}^2`. Entries are
//! rationals written as strings (`"p"` or `"p/q"`); JSON integers are also
//! accepted, floats never are.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::EvolutionAlgebra;
use crate::error::{EvoError, Result};
use crate::matrix::Matrix;
use crate::scalar::{format_scalar, parse_scalar, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub squares: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<String>>,
    #[serde(flatten, skip_serializing)]
    pub unknown: BTreeMap<String, Value>,
}

/// A parsed file together with non-fatal diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedAlgebra {
    pub algebra: EvolutionAlgebra,
    pub name: Option<String>,
    pub params: Option<Vec<String>>,
    pub warnings: Vec<String>,
}

impl AlgebraFile {
    pub fn from_algebra(e: &EvolutionAlgebra, name: Option<&str>, params: Option<&[Scalar]>) -> Self {
        let n = e.dim();
        AlgebraFile {
            dim: n,
            squares: (0..n)
                .map(|i| {
                    e.square_of_basis(i)
                        .iter()
                        .map(|x| Value::String(format_scalar(x)))
                        .collect()
                })
                .collect(),
            name: name.map(str::to_string),
            params: params.map(|p| p.iter().map(format_scalar).collect()),
            unknown: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_algebra(&self) -> Result<EvolutionAlgebra> {
        if self.dim == 0 {
            return Err(parse_err("dim", "dimension must be at least 1"));
        }
        if self.squares.len() != self.dim {
            return Err(parse_err(
                "squares",
                &format!("expected {} rows, found {}", self.dim, self.squares.len()),
            ));
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, row) in self.squares.iter().enumerate() {
            if row.len() != self.dim {
                return Err(parse_err(
                    &format!("squares[{i}]"),
                    &format!("expected {} entries, found {}", self.dim, row.len()),
                ));
            }
            for (k, v) in row.iter().enumerate() {
                m.set(i, k, entry(v).map_err(|msg| parse_err(&format!("squares[{i}][{k}]"), &msg))?);
            }
        }
        EvolutionAlgebra::new(m)
    }
}

fn entry(v: &Value) -> std::result::Result<Scalar, String> {
    match v {
        Value::String(s) => parse_scalar(s).map_err(|e| match e {
            EvoError::Parse { message, .. } => format!("`{s}`: {message}"),
            other => other.to_string(),
        }),
        Value::Number(n) if n.is_i64() => Ok(crate::scalar::int(n.as_i64().expect("checked"))),
        Value::Number(n) => Err(format!("`{n}` is not an integer; write rationals as \"p/q\" strings")),
        other => Err(format!("expected a rational string, found {other}")),
    }
}

fn parse_err(context: &str, message: &str) -> EvoError {
    EvoError::Parse {
        context: context.to_string(),
        message: message.to_string(),
    }
}

pub fn parse_algebra(text: &str) -> Result<LoadedAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| {
        parse_err(&format!("line {} column {}", e.line(), e.column()), &e.to_string())
    })?;
    let algebra = file.to_algebra()?;
    let warnings = file
        .unknown
        .keys()
        .map(|k| format!("ignoring unknown field `{k}`"))
        .collect();
    Ok(LoadedAlgebra {
        algebra,
        name: file.name,
        params: file.params,
        warnings,
    })
}

pub fn load_algebra(path: &Path) -> Result<LoadedAlgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_err(&path.display().to_string(), &e.to_string()))?;
    parse_algebra(&text)
}
