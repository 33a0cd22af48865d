//! Birack text format.
//!
//! ```text
//! # comment
//! n
//! <4n+1 space-separated entries of row 1>
//! ...
//! <4n+1 space-separated entries of row n>
//! ```
//!
//! Streams concatenate several structures separated by lines reading `---`.

use crate::error::{Error, Result};

use super::Structure;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_block<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Option<Structure>> {
    let mut lines = lines.peekable();
    let Some((first, header)) = lines.next() else {
        return Ok(None);
    };
    let n: usize = header.parse().map_err(|_| Error::BirackFormat {
        line: first,
        reason: format!("expected element count, found `{header}`"),
    })?;
    if n == 0 {
        return Err(Error::BirackFormat {
            line: first,
            reason: "element count must be positive".into(),
        });
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = first;
    for _ in 0..n {
        let (line, text) = lines.next().ok_or_else(|| Error::BirackFormat {
            line: last + 1,
            reason: format!("expected {n} matrix rows, found {}", rows.len()),
        })?;
        let row: Vec<usize> = text
            .split_whitespace()
            .map(|tok| {
                tok.parse().map_err(|_| Error::BirackFormat {
                    line,
                    reason: format!("`{tok}` is not a positive integer"),
                })
            })
            .collect::<Result<_>>()?;
        rows.push(row);
        last = line;
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::BirackFormat {
            line,
            reason: "unexpected content after matrix".into(),
        });
    }
    Structure::from_matrix(&rows).map(Some)
}

/// Parses a single structure.
pub fn parse_birack(text: &str) -> Result<Structure> {
    parse_block(content_lines(text))?.ok_or(Error::BirackFormat {
        line: 1,
        reason: "empty birack file".into(),
    })
}

/// Parses a `---`-separated stream of structures.
pub fn parse_birack_stream(text: &str) -> Result<Vec<Structure>> {
    let mut out = Vec::new();
    let mut block = Vec::new();
    for (line, content) in content_lines(text) {
        if content == "---" {
            out.extend(parse_block(block.drain(..))?);
        } else {
            block.push((line, content));
        }
    }
    out.extend(parse_block(block.into_iter())?);
    Ok(out)
}

/// Writes a structure in the birack file format.
pub fn write_birack(s: &Structure) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.to_matrix() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Writes structures separated by `---` lines.
pub fn write_birack_stream<'a>(structures: impl IntoIterator<Item = &'a Structure>) -> String {
    structures
        .into_iter()
        .map(write_birack)
        .collect::<Vec<_>>()
        .join("---\n")
}
