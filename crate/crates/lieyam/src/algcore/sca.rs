//! Sparse coordinate text formats shared by `.sca` (structure constants) and
//! `.tri` (trilinear products).
//!
//! ```text
//! # comment
//! dim 3
//! 0 1 2 1/2
//! ```
//! Indices are 0-based, omitted entries are zero. Writers emit entries in
//! lexicographic index order so output is canonical.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::tensor::{Bilinear, Trilinear};
use crate::error::{Error, Result};
use crate::exactla::Rational;

/// Parsed sparse tensor of a fixed arity (number of indices per line).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseText {
    pub dim: usize,
    pub entries: BTreeMap<Vec<usize>, Rational>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Meaningful lines with 1-based line numbers, comments stripped.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

pub(crate) fn parse_header(line_no: usize, line: &str) -> Result<usize> {
    let mut it = line.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some("dim"), Some(n), None) => n.parse().map_err(|_| parse_err(line_no, format!("bad dimension {n:?}"))),
        _ => Err(parse_err(line_no, "expected header `dim n`")),
    }
}

/// Parses `i₁ … i_arity value`, checking bounds against `dims`.
pub(crate) fn parse_entry(line_no: usize, line: &str, dims: &[usize]) -> Result<(Vec<usize>, Rational)> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != dims.len() + 1 {
        return Err(parse_err(line_no, format!("expected {} indices and a value", dims.len())));
    }
    let mut idx = Vec::with_capacity(dims.len());
    for (t, &d) in tokens.iter().zip(dims) {
        let i: usize = t.parse().map_err(|_| parse_err(line_no, format!("bad index {t:?}")))?;
        if i >= d {
            return Err(parse_err(line_no, format!("index {i} out of range for dimension {d}")));
        }
        idx.push(i);
    }
    let value: Rational = tokens[dims.len()].parse().map_err(|e| parse_err(line_no, format!("{e}")))?;
    Ok((idx, value))
}

pub fn read_sparse(text: &str, arity: usize) -> Result<SparseText> {
    let mut lines = content_lines(text);
    let (no, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let dim = parse_header(no, header)?;
    let dims = vec![dim; arity];
    let mut entries = BTreeMap::new();
    for (no, line) in lines {
        let (idx, value) = parse_entry(no, line, &dims)?;
        if entries.insert(idx.clone(), value).is_some() {
            return Err(parse_err(no, format!("duplicate entry {idx:?}")));
        }
    }
    entries.retain(|_, v| !v.is_zero());
    Ok(SparseText { dim, entries })
}

pub fn write_sparse(s: &SparseText) -> String {
    let mut out = format!("dim {}\n", s.dim);
    for (idx, v) in &s.entries {
        for i in idx {
            let _ = write!(out, "{i} ");
        }
        let _ = writeln!(out, "{v}");
    }
    out
}

pub fn read_bilinear(text: &str) -> Result<Bilinear> {
    let s = read_sparse(text, 3)?;
    let mut t = Bilinear::zero(s.dim);
    let mut cur: Option<(usize, usize, Vec<Rational>)> = None;
    for (idx, v) in s.entries {
        if cur.as_ref().is_some_and(|(i, j, _)| (*i, *j) != (idx[0], idx[1])) {
            let (i, j, vec) = cur.take().expect("checked");
            t.set(i, j, &vec);
        }
        let entry = cur.get_or_insert_with(|| (idx[0], idx[1], vec![Rational::zero(); s.dim]));
        entry.2[idx[2]] = v;
    }
    if let Some((i, j, vec)) = cur {
        t.set(i, j, &vec);
    }
    Ok(t)
}

pub fn write_bilinear(t: &Bilinear) -> String {
    let n = t.dim();
    let mut entries = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for (k, v) in t.get(i, j) {
                entries.insert(vec![i, j, *k], v.clone());
            }
        }
    }
    write_sparse(&SparseText { dim: n, entries })
}

pub fn trilinear_entries(t: &Trilinear) -> BTreeMap<Vec<usize>, Rational> {
    let n = t.dim();
    let mut entries = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for (l, v) in t.get(i, j, k) {
                    entries.insert(vec![i, j, k, *l], v.clone());
                }
            }
        }
    }
    entries
}

pub fn trilinear_from_entries(dim: usize, entries: &BTreeMap<Vec<usize>, Rational>) -> Trilinear {
    let mut t = Trilinear::zero(dim);
    for (idx, v) in entries {
        t.set_entry(idx[0], idx[1], idx[2], idx[3], v.clone());
    }
    t
}
