//! A small plain-text format for matrices over GF(p^m).
//!
//! ```text
//! field p=2 m=3 modulus=[1,1,0,1]
//! dims 2 3
//! 1 2 4
//! 3 6 7
//! # provenance: built 2x3 sample
//! ```
//!
//! The header pins the field; the modulus must be the canonical one
//! this library derives for `(p, m)`, so every file is readable without
//! ambiguity about element encodings. The optional trailing comment
//! carries free-form provenance. [`write_matrix`] emits a canonical
//! form that survives a read/write round trip byte for byte.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::{FieldContext, FieldElement, field_build};
use crate::linalg::FieldMatrix;

const PROVENANCE_PREFIX: &str = "# provenance: ";

/// Serialize a matrix (canonical form, trailing newline included).
///
/// # Panics
///
/// Panics if the matrix has zero columns with nonzero rows (rows would
/// serialize as blank lines) or if the provenance text spans lines.
pub fn write_matrix(m: &FieldMatrix, provenance: Option<&str>) -> String {
    assert!(m.cols() > 0 || m.rows() == 0, "matrix rows need at least one column");
    let mut out = String::new();
    writeln!(out, "field {}", m.context().spec()).unwrap();
    writeln!(out, "dims {} {}", m.rows(), m.cols()).unwrap();
    for i in 0..m.rows() {
        for (j, e) in m.row(i).iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            write!(out, "{e}").unwrap();
        }
        out.push('\n');
    }
    if let Some(text) = provenance {
        assert!(!text.contains('\n'), "provenance must be a single line");
        writeln!(out, "{PROVENANCE_PREFIX}{text}").unwrap();
    }
    out
}

fn bad(line: usize, reason: impl Into<String>) -> Error {
    Error::InvalidMatrixFile { line, reason: reason.into() }
}

fn parse_int(tok: &str, line: usize) -> Result<u64> {
    tok.parse::<u64>().map_err(|_| bad(line, format!("bad integer '{tok}'")))
}

/// Strip `key=` from a header token.
fn keyed<'a>(tok: Option<&'a str>, key: &str, line: usize) -> Result<&'a str> {
    let prefix = format!("{key}=");
    match tok {
        Some(t) if t.starts_with(&prefix) => Ok(&t[prefix.len()..]),
        _ => Err(bad(line, format!("expected '{key}=...'"))),
    }
}

/// Parse a matrix file. Returns the matrix and any provenance trailer.
///
/// Errors carry the 1-based line number. Field construction failures
/// (non-prime `p`, oversized order) propagate as their own error kinds;
/// a syntactically valid header whose modulus differs from the
/// canonical one for `(p, m)` is rejected.
pub fn read_matrix(input: &str) -> Result<(FieldMatrix, Option<String>)> {
    let mut lines = input.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (line_no, header) = lines.next().ok_or_else(|| bad(1, "empty input"))?;
    let mut toks = header.split(' ');
    if toks.next() != Some("field") {
        return Err(bad(line_no, "expected 'field' header"));
    }
    let p = parse_int(keyed(toks.next(), "p", line_no)?, line_no)?;
    let m = parse_int(keyed(toks.next(), "m", line_no)?, line_no)?;
    let modulus_tok = keyed(toks.next(), "modulus", line_no)?;
    if toks.next().is_some() {
        return Err(bad(line_no, "trailing tokens after modulus"));
    }
    let inner = modulus_tok
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| bad(line_no, "modulus must be bracketed like [1,1,0,1]"))?;
    let modulus: Vec<u64> = inner
        .split(',')
        .map(|t| parse_int(t, line_no))
        .collect::<Result<_>>()?;
    let m = u32::try_from(m).map_err(|_| bad(line_no, "extension degree out of range"))?;
    let ctx = field_build(p, m)?;
    if ctx.spec().modulus != modulus {
        return Err(bad(
            line_no,
            format!("modulus {modulus:?} is not the canonical choice for p={p} m={m}"),
        ));
    }

    let (line_no, dims) = lines.next().ok_or_else(|| bad(2, "missing 'dims' line"))?;
    let mut toks = dims.split(' ');
    if toks.next() != Some("dims") {
        return Err(bad(line_no, "expected 'dims' line"));
    }
    let rows = parse_int(toks.next().ok_or_else(|| bad(line_no, "missing row count"))?, line_no)?;
    let cols = parse_int(toks.next().ok_or_else(|| bad(line_no, "missing column count"))?, line_no)?;
    if toks.next().is_some() {
        return Err(bad(line_no, "trailing tokens after dims"));
    }
    let rows = usize::try_from(rows).map_err(|_| bad(line_no, "row count out of range"))?;
    let cols = usize::try_from(cols).map_err(|_| bad(line_no, "column count out of range"))?;
    if cols == 0 && rows > 0 {
        return Err(bad(line_no, "matrix rows need at least one column"));
    }

    let mut data: Vec<FieldElement> = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let (line_no, row) =
            lines.next().ok_or_else(|| bad(3 + r, "missing matrix row"))?;
        let mut count = 0usize;
        for tok in row.split(' ') {
            let v = parse_int(tok, line_no)?;
            let e = ctx
                .element(v)
                .map_err(|_| bad(line_no, format!("symbol {v} outside {ctx}")))?;
            data.push(e);
            count += 1;
        }
        if count != cols {
            return Err(bad(line_no, format!("expected {cols} entries, found {count}")));
        }
    }

    let mut provenance = None;
    if let Some((line_no, trailer)) = lines.next() {
        let text = trailer
            .strip_prefix(PROVENANCE_PREFIX)
            .ok_or_else(|| bad(line_no, "unexpected content after matrix rows"))?;
        provenance = Some(text.to_string());
        if let Some((line_no, _)) = lines.next() {
            return Err(bad(line_no, "content after provenance trailer"));
        }
    }

    Ok((FieldMatrix::new(ctx, rows, cols, data), provenance))
}

/// Convenience for tests and the command-line tool: the field of a
/// parsed matrix, by reference.
pub fn matrix_field(m: &FieldMatrix) -> &Arc<FieldContext> {
    m.context()
}
