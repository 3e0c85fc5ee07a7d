//! Matrix Market coordinate format.
//!
//! Supported headers are `%%MatrixMarket matrix coordinate <field> <symmetry>`
//! with field `pattern`, `integer` or `real` and symmetry `general` or
//! `symmetric`. Coordinates are 1-indexed in the file and 0-indexed in the
//! returned [`EdgeList`]. Numeric entries become integer weights
//! `max(1, round(value))`.

use std::io::{BufRead, Write};

use num_traits::NumCast;

use super::EdgeList;
use crate::error::{Error, Result};
use crate::scalar::Weight;
use crate::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Field {
    Pattern,
    Integer,
    Real,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_header(line_no: usize, line: &str) -> Result<(Field, bool)> {
    let tokens: Vec<String> = line.split_whitespace().map(str::to_ascii_lowercase).collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" || tokens[1] != "matrix" {
        return Err(parse_err(line_no, format!("malformed header {line:?}")));
    }
    if tokens[2] != "coordinate" {
        return Err(parse_err(line_no, format!("unsupported format {:?}, only coordinate is accepted", tokens[2])));
    }
    let field = match tokens[3].as_str() {
        "pattern" => Field::Pattern,
        "integer" => Field::Integer,
        "real" | "double" => Field::Real,
        other => return Err(parse_err(line_no, format!("unsupported field {other:?}"))),
    };
    let symmetric = match tokens[4].as_str() {
        "general" => false,
        "symmetric" => true,
        other => return Err(parse_err(line_no, format!("unsupported symmetry {other:?}"))),
    };
    Ok((field, symmetric))
}

fn parse_index(line_no: usize, token: &str, bound: usize, what: &str) -> Result<VertexId> {
    let idx: usize = token.parse().map_err(|_| parse_err(line_no, format!("invalid {what} index {token:?}")))?;
    if idx == 0 || idx > bound {
        return Err(parse_err(line_no, format!("{what} index {idx} outside [1, {bound}]")));
    }
    Ok((idx - 1) as VertexId)
}

fn parse_weight<W: Weight>(line_no: usize, token: &str) -> Result<W> {
    let value: f64 = token.parse().map_err(|_| parse_err(line_no, format!("invalid value {token:?}")))?;
    if !value.is_finite() {
        return Err(parse_err(line_no, format!("non-finite value {token:?}")));
    }
    <W as NumCast>::from(value.round().max(1.0))
        .ok_or_else(|| parse_err(line_no, format!("value {token} does not fit the weight type")))
}

/// Parse a Matrix Market coordinate stream into an edge list.
///
/// A `symmetric` header expands every off-diagonal entry into both
/// directions. The vertex count is the larger of the row and column counts.
pub fn read_matrix_market<W: Weight, R: BufRead>(reader: R) -> Result<EdgeList<W>> {
    let mut lines = reader.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (header_no, header) = match lines.next() {
        Some((n, l)) => (n, l?),
        None => return Err(parse_err(1, "empty input")),
    };
    let (field, symmetric) = parse_header(header_no, &header)?;

    let mut size: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut weights = (field != Field::Pattern).then(Vec::new);
    let mut entries = 0usize;

    for (line_no, line) in lines {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let Some((rows, cols, nnz)) = size else {
            if tokens.len() != 3 {
                return Err(parse_err(line_no, "size line must be `rows cols entries`"));
            }
            let parse = |t: &str| t.parse::<usize>().map_err(|_| parse_err(line_no, format!("invalid size {t:?}")));
            let dims = (parse(tokens[0])?, parse(tokens[1])?, parse(tokens[2])?);
            if symmetric && dims.0 != dims.1 {
                return Err(parse_err(line_no, "symmetric matrix must be square"));
            }
            edges.reserve(if symmetric { 2 * dims.2 } else { dims.2 });
            size = Some(dims);
            continue;
        };
        let expected = if field == Field::Pattern { 2 } else { 3 };
        if tokens.len() != expected {
            return Err(parse_err(line_no, format!("expected {expected} tokens, found {}", tokens.len())));
        }
        if entries == nnz {
            return Err(parse_err(line_no, format!("more than the declared {nnz} entries")));
        }
        let src = parse_index(line_no, tokens[0], rows, "row")?;
        let dst = parse_index(line_no, tokens[1], cols, "column")?;
        let weight = match field {
            Field::Pattern => None,
            _ => Some(parse_weight::<W>(line_no, tokens[2])?),
        };
        edges.push((src, dst));
        if let (Some(ws), Some(w)) = (weights.as_mut(), weight) {
            ws.push(w);
        }
        if symmetric && src != dst {
            edges.push((dst, src));
            if let (Some(ws), Some(w)) = (weights.as_mut(), weight) {
                ws.push(w);
            }
        }
        entries += 1;
    }

    let Some((rows, cols, nnz)) = size else {
        return Err(parse_err(header_no + 1, "missing size line"));
    };
    if entries != nnz {
        return Err(parse_err(header_no, format!("declared {nnz} entries but found {entries}")));
    }
    Ok(EdgeList { num_vertices: rows.max(cols), edges, weights })
}

/// Write an edge list as a `general` coordinate matrix (`integer` when weighted).
pub fn write_matrix_market<W: Weight, Wr: Write>(edges: &EdgeList<W>, mut out: Wr) -> Result<()> {
    let field = if edges.is_weighted() { "integer" } else { "pattern" };
    writeln!(out, "%%MatrixMarket matrix coordinate {field} general")?;
    let n = edges.num_vertices;
    writeln!(out, "{n} {n} {}", edges.len())?;
    for (s, d, w) in edges.iter() {
        match w {
            Some(w) => writeln!(out, "{} {} {w}", s + 1, d + 1)?,
            None => writeln!(out, "{} {}", s + 1, d + 1)?,
        }
    }
    out.flush()?;
    Ok(())
}
