//! JSON documents for algebras, cochains and linear maps.
//!
//! Basis indices are 1-based in every document and rationals are strings
//! (`"p/q"` or `"p"`), so documents are exact and diffable:
//!
//! ```json
//! { "dim": 3, "labels": ["Y1", "Y2", "Y3"],
//!   "brackets": [ { "i": 1, "j": 2, "coeffs": { "3": "1" } } ] }
//! ```
//!
//! Output is deterministic: records are sorted by `(i, j)` and coefficient
//! maps by index.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cohomology::Cochain;
use crate::error::{Error, Result};
use crate::lie::{default_labels, LieAlgebra, SparseVec};
use crate::linalg::MatrixQ;
use crate::rational::{self, Rational};

/// Sparse vector: 1-based index ↦ rational string.
pub type CoeffMap = BTreeMap<usize, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub coeffs: CoeffMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub brackets: Vec<BracketRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseOptions {
    pub check_jacobi: bool,
}

impl Default for ParseOptions {
    fn default() -> Self {
        Self { check_jacobi: true }
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn doc_error(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

pub fn coeffs_to_map(v: &[(usize, Rational)]) -> CoeffMap {
    v.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k + 1, rational::to_text(c)))
        .collect()
}

pub fn dense_to_map(v: &[Rational]) -> CoeffMap {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k + 1, rational::to_text(c)))
        .collect()
}

fn map_to_coeffs(map: &CoeffMap, dim: usize, what: &str) -> Result<SparseVec> {
    map.iter()
        .map(|(&k, text)| {
            if k == 0 || k > dim {
                return Err(doc_error(format!("{what}: index {k} outside 1..={dim}")));
            }
            let c = rational::parse(text).map_err(|e| doc_error(format!("{what}: {e}")))?;
            Ok((k - 1, c))
        })
        .collect()
}

pub fn to_document(g: &LieAlgebra) -> AlgebraDocument {
    let labels = g.labels().to_vec();
    let labels = (labels != default_labels("Y", g.dim())).then_some(labels);
    let brackets = g
        .constants()
        .iter()
        .map(|(&(i, j), v)| BracketRecord {
            i: i + 1,
            j: j + 1,
            coeffs: coeffs_to_map(v),
        })
        .collect();
    AlgebraDocument {
        dim: g.dim(),
        labels,
        brackets,
    }
}

pub fn from_document(doc: &AlgebraDocument, opts: ParseOptions) -> Result<LieAlgebra> {
    let dim = doc.dim;
    if dim == 0 {
        return Err(doc_error("dim must be at least 1"));
    }
    let labels = match &doc.labels {
        Some(l) if l.len() != dim => {
            return Err(doc_error(format!("{} labels for dim {dim}", l.len())))
        }
        Some(l) => l.clone(),
        None => default_labels("Y", dim),
    };
    let mut seen = std::collections::BTreeSet::new();
    let mut brackets = Vec::with_capacity(doc.brackets.len());
    for (pos, r) in doc.brackets.iter().enumerate() {
        let what = format!("bracket record {}", pos + 1);
        if r.i >= r.j {
            return Err(doc_error(format!(
                "{what}: requires i < j, got i = {}, j = {}",
                r.i, r.j
            )));
        }
        if r.i == 0 || r.j > dim {
            return Err(doc_error(format!(
                "{what}: pair ({}, {}) outside 1..={dim}",
                r.i, r.j
            )));
        }
        if !seen.insert((r.i, r.j)) {
            return Err(doc_error(format!(
                "{what}: duplicate pair ({}, {})",
                r.i, r.j
            )));
        }
        brackets.push(((r.i - 1, r.j - 1), map_to_coeffs(&r.coeffs, dim, &what)?));
    }
    let g = LieAlgebra::new(dim, labels, brackets)?;
    if opts.check_jacobi {
        let v = g.jacobi_check();
        if !v.is_empty() {
            let triples = v
                .iter()
                .map(|v| (v.triple.0 + 1, v.triple.1 + 1, v.triple.2 + 1))
                .collect();
            return Err(Error::JacobiFailed { triples });
        }
    }
    Ok(g)
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    parse_algebra_with(text, ParseOptions::default())
}

pub fn parse_algebra_with(text: &str, opts: ParseOptions) -> Result<LieAlgebra> {
    let doc: AlgebraDocument = serde_json::from_str(text).map_err(json_error)?;
    from_document(&doc, opts)
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn serialize_algebra(g: &LieAlgebra) -> String {
    to_json(&to_document(g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainRecord {
    /// Ascending 1-based argument indices.
    pub args: Vec<usize>,
    pub value: CoeffMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainDocument {
    pub dim: usize,
    pub degree: usize,
    pub values: Vec<CochainRecord>,
}

pub fn cochain_document(c: &Cochain) -> CochainDocument {
    let values = c
        .values()
        .iter()
        .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
        .map(|(t, v)| CochainRecord {
            args: t.iter().map(|i| i + 1).collect(),
            value: dense_to_map(v),
        })
        .collect();
    CochainDocument {
        dim: c.dim(),
        degree: c.degree(),
        values,
    }
}

pub fn serialize_cochain(c: &Cochain) -> String {
    to_json(&cochain_document(c))
}

pub fn parse_cochain(text: &str) -> Result<Cochain> {
    let doc: CochainDocument = serde_json::from_str(text).map_err(json_error)?;
    let mut c = Cochain::zero(doc.dim, doc.degree);
    for (pos, r) in doc.values.iter().enumerate() {
        let what = format!("cochain record {}", pos + 1);
        if r.args.len() != doc.degree || r.args.iter().any(|&a| a == 0 || a > doc.dim) {
            return Err(doc_error(format!(
                "{what}: expected {} indices in 1..={}",
                doc.degree, doc.dim
            )));
        }
        let mut v = vec![Rational::zero(); doc.dim];
        for (k, x) in map_to_coeffs(&r.value, doc.dim, &what)? {
            v[k] = x;
        }
        let args: Vec<usize> = r.args.iter().map(|a| a - 1).collect();
        c.set(&args, v)
            .map_err(|e| doc_error(format!("{what}: {e}")))?;
    }
    Ok(c)
}

/// A linear map by basis images: `input` (1-based) ↦ sparse image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapRecord {
    pub input: usize,
    pub image: CoeffMap,
}

/// Nonzero columns of `m` as records.
pub fn map_records(m: &MatrixQ) -> Vec<MapRecord> {
    (0..m.cols())
        .map(|j| MapRecord {
            input: j + 1,
            image: dense_to_map(&m.column(j)),
        })
        .filter(|r| !r.image.is_empty())
        .collect()
}
