//! Plain-text matrix format.
//!
//! ```text
//! # optional comment lines
//! 3 3
//! -1    0.2  -0.8
//! -1.2  -1   0
//! 0     -1   -inf
//! ```
//!
//! Lines whose first non-blank character is `#` are comments and blank
//! lines are ignored. The first remaining line holds `rows cols`; then come
//! `rows * cols` whitespace-separated entries in row-major order, in any
//! line layout. An entry is `-inf` or `.` for the bottom element, or a
//! signed integer, decimal (`-0.25`) or fraction (`1/15`). Decimals are
//! read exactly.

use crate::error::{Error, Result};
use crate::matrix::TropMatrix;
use crate::scalar::Trop;

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(text: &str) -> impl Iterator<Item = Token<'_>> {
    text.lines().enumerate().flat_map(|(line_idx, line)| {
        let is_comment = line.trim_start().starts_with('#');
        let mut out = Vec::new();
        if !is_comment {
            let mut start: Option<usize> = None;
            for (pos, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        out.push(Token {
                            text: &line[s..pos],
                            line: line_idx + 1,
                            column: line[..s].chars().count() + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
        }
        out
    })
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_dimension(token: Option<Token<'_>>, what: &str, last_line: usize) -> Result<usize> {
    let token = token.ok_or_else(|| parse_error(last_line, 1, format!("missing {what}")))?;
    match token.text.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(parse_error(
            token.line,
            token.column,
            format!("{what} must be a positive integer, got `{}`", token.text),
        )),
    }
}

/// Parses one matrix; errors carry 1-based line and column.
pub fn parse_matrix(text: &str) -> Result<TropMatrix> {
    let last_line = text.lines().count().max(1);
    let mut iter = tokens(text);
    let header = iter.next();
    let header_line = header.as_ref().map(|t| t.line);
    let rows = parse_dimension(header, "row count", last_line)?;
    let second = iter.next();
    if let (Some(t), Some(h)) = (&second, header_line) {
        if t.line != h {
            return Err(parse_error(t.line, t.column, "header must hold `rows cols` on one line"));
        }
    }
    let cols = parse_dimension(second, "column count", last_line)?;
    let mut entries = Vec::with_capacity(rows * cols);
    for token in iter {
        if entries.len() == rows * cols {
            return Err(parse_error(
                token.line,
                token.column,
                format!("unexpected extra entry `{}` after {rows}x{cols} entries", token.text),
            ));
        }
        let value: Trop = token
            .text
            .parse()
            .map_err(|e: crate::scalar::ParseTropError| parse_error(token.line, token.column, e.0))?;
        entries.push(value);
    }
    if entries.len() != rows * cols {
        return Err(parse_error(
            last_line,
            1,
            format!(
                "expected {} entries for a {rows}x{cols} matrix, found {}",
                rows * cols,
                entries.len()
            ),
        ));
    }
    TropMatrix::new(rows, cols, entries)
}

/// Writes the matrix in the same format, entries in lowest terms.
pub fn serialize_matrix(a: &TropMatrix) -> String {
    let mut out = format!("{} {}\n", a.rows(), a.cols());
    for i in 0..a.rows() {
        let line: Vec<String> = a.row(i).iter().map(Trop::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_free_layout() {
        let text = "# the D2 matrix\n\n3 3\n-1 0.2 -0.8\n-1.2 -1\n 0 -0.2 -1 -1\n";
        let a = parse_matrix(text).unwrap();
        assert_eq!(a.get(0, 1), Trop::ratio(1, 5));
        assert_eq!(a.get(1, 0), Trop::ratio(-6, 5));
        assert_eq!(a.get(2, 2), Trop::int(-1));
    }

    #[test]
    fn bottom_tokens() {
        let a = parse_matrix("2 2\n. -inf\n0 1/3").unwrap();
        assert!(a.get(0, 0).is_neg_inf() && a.get(0, 1).is_neg_inf());
        assert_eq!(a.get(1, 1), Trop::ratio(1, 3));
    }

    #[test]
    fn reports_positions() {
        let err = parse_matrix("2 2\n0 1\n0 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                column: 3,
                message: "invalid scalar token `x`".into()
            }
        );
        assert!(matches!(
            parse_matrix("2 2\n0 1\n0\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_matrix("1 1\n0 1\n"),
            Err(Error::Parse { line: 2, column: 3, .. })
        ));
        assert!(matches!(
            parse_matrix("0 2\n"),
            Err(Error::Parse { line: 1, column: 1, .. })
        ));
        assert!(matches!(parse_matrix("2\n2\n0 0 0 0"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn serializes_lowest_terms() {
        let a = parse_matrix("1 3\n0.5 . -4/6").unwrap();
        assert_eq!(serialize_matrix(&a), "1 3\n1/2 -inf -2/3\n");
    }
}
