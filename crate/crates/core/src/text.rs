//! Shared helpers for the line-oriented file formats.

use crate::error::ParseError;

fn is_comment(line: &str) -> bool {
    line.trim_start().starts_with('#')
}

/// Non-blank, non-comment lines with 1-based line numbers.
pub(crate) fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !is_comment(l))
}

/// Non-comment lines, blank ones included.
pub(crate) fn uncommented_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !is_comment(l))
}

pub(crate) fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    token.trim().parse().map_err(|_| ParseError::new(line, format!("expected {what}, found {token:?}")))
}

pub(crate) fn parse_pair(line: &str, line_no: usize) -> Result<[usize; 2], ParseError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens.as_slice() {
        [a, b] => Ok([parse_usize(a, line_no, "index")?, parse_usize(b, line_no, "index")?]),
        _ => Err(ParseError::new(line_no, format!("expected two indices, found {line:?}"))),
    }
}
