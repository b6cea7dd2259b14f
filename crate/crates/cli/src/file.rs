//! The JSON algebra file format and algebra-spec resolution.
//!
//! ```json
//! { "dim": 3, "brackets": [ { "i": 1, "j": 2, "value": [ { "k": 3, "c": "1" } ] } ] }
//! ```
//!
//! Indices are 1-based with `i < j`; coefficients are rational literals
//! `"p"` or `"p/q"` kept as strings so nothing passes through floating point.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use nilschur::exactla::zero_vector;
use nilschur::{catalog, Bracket, Error, LieAlgebra, Rational};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub k: usize,
    pub c: String,
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses `p` or `p/q` with an optional leading `-` on `p` and `q > 0`.
pub fn parse_rational(literal: &str) -> Option<Rational> {
    let (num, den) = literal.split_once('/').unwrap_or((literal, "1"));
    if !is_digits(num.strip_prefix('-').unwrap_or(num)) || !is_digits(den) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    (den != BigInt::from(0)).then(|| Rational::new(num, den))
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<LieAlgebra, Error> {
        let n = self.dim;
        let in_range = |x: usize| (1..=n).contains(&x);
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            if !in_range(b.i) || !in_range(b.j) {
                return Err(Error::InvalidInput(format!(
                    "bracket pair ({}, {}) must satisfy 1 <= i < j <= {n}",
                    b.i, b.j
                )));
            }
            let mut value = zero_vector(n);
            let mut seen = vec![false; n];
            for t in &b.value {
                if !in_range(t.k) {
                    return Err(Error::InvalidInput(format!(
                        "[x{}, x{}]: basis index k = {} out of range 1..={n}",
                        b.i, b.j, t.k
                    )));
                }
                if std::mem::replace(&mut seen[t.k - 1], true) {
                    return Err(Error::InvalidInput(format!(
                        "[x{}, x{}]: basis index k = {} repeated",
                        b.i, b.j, t.k
                    )));
                }
                value[t.k - 1] = parse_rational(&t.c).ok_or_else(|| {
                    Error::InvalidInput(format!("`{}` is not a rational literal p or p/q", t.c))
                })?;
            }
            brackets.push(Bracket {
                i: b.i - 1,
                j: b.j - 1,
                value,
            });
        }
        LieAlgebra::new(n, self.labels.clone(), brackets)
    }

    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let labels = (l.labels() != default_labels(l.dim()).as_slice()).then(|| l.labels().to_vec());
        let brackets = l
            .brackets()
            .into_iter()
            .map(|b| BracketEntry {
                i: b.i + 1,
                j: b.j + 1,
                value: b
                    .value
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| *c != &Rational::from_integer(0.into()))
                    .map(|(k, c)| Term {
                        k: k + 1,
                        c: c.to_string(),
                    })
                    .collect(),
            })
            .collect();
        Self {
            dim: l.dim(),
            labels,
            brackets,
        }
    }
}

pub fn load_file(path: &Path) -> Result<LieAlgebra, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let file: AlgebraFile = serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(file.to_algebra()?)
}

/// `@path.json` reads a file; anything else is a catalog expression.
pub fn resolve(spec: &str) -> Result<LieAlgebra, CliError> {
    match spec.strip_prefix('@') {
        Some(path) => load_file(Path::new(path)),
        None => Ok(catalog::parse_spec(spec)?),
    }
}
