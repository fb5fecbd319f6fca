//! `.tri` text format for triple systems.
//!
//! ```text
//! dim 2
//! 0 1 0 1 1/2     # e0 e1 e0 = 1/2 e1
//! form
//! 0 1 1
//! 1 0 -1
//! ```
//! Entries `i j k l value` give the coefficient of `e_l` in `eᵢeⱼeₖ`. The
//! optional `form` section lists Gram entries `i j value`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algcore::sca::{content_lines, parse_entry, parse_header, trilinear_entries, trilinear_from_entries};
use crate::algcore::BilinearForm;
use crate::error::{Error, Result};
use crate::exactla::Matrix;

use super::system::TripleSystem;

pub fn read_triple(text: &str) -> Result<TripleSystem> {
    let mut lines = content_lines(text);
    let (no, header) = lines.next().ok_or(Error::Parse { line: 1, message: "empty input".into() })?;
    let n = parse_header(no, header)?;
    let mut entries = BTreeMap::new();
    let mut gram: Option<Matrix> = None;
    let mut seen_form = BTreeMap::new();
    for (no, line) in lines {
        if line == "form" {
            if gram.is_some() {
                return Err(Error::Parse { line: no, message: "repeated form section".into() });
            }
            gram = Some(Matrix::zeros(n, n));
            continue;
        }
        match &mut gram {
            None => {
                let (idx, v) = parse_entry(no, line, &[n; 4])?;
                if entries.insert(idx.clone(), v).is_some() {
                    return Err(Error::Parse { line: no, message: format!("duplicate entry {idx:?}") });
                }
            }
            Some(g) => {
                let (idx, v) = parse_entry(no, line, &[n; 2])?;
                if seen_form.insert(idx.clone(), ()).is_some() {
                    return Err(Error::Parse { line: no, message: format!("duplicate form entry {idx:?}") });
                }
                g[(idx[0], idx[1])] = v;
            }
        }
    }
    entries.retain(|_, v| !v.is_zero());
    TripleSystem::new(trilinear_from_entries(n, &entries), gram.map(BilinearForm::new))
}

pub fn write_triple(t: &TripleSystem) -> String {
    let n = t.module_dim();
    let mut out = format!("dim {n}\n");
    for (idx, v) in trilinear_entries(t.product()) {
        let _ = writeln!(out, "{} {} {} {} {v}", idx[0], idx[1], idx[2], idx[3]);
    }
    if let Some(b) = t.form() {
        out.push_str("form\n");
        for i in 0..n {
            for j in 0..n {
                let v = b.entry(i, j);
                if !v.is_zero() {
                    let _ = writeln!(out, "{i} {j} {v}");
                }
            }
        }
    }
    out
}
