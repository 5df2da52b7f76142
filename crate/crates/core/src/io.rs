//! Text encodings: the canonical edge list and graph6 (short form).
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with `u < v`, sorted.
//! The parser accepts pairs in either order and in any line order, but the
//! emitter always produces the canonical form.

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::{Edge, Graph};

const GRAPH6_MAX_ORDER: usize = 62;

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError::Malformed {
        line,
        reason: format!("{what} {tok:?} is not a non-negative integer"),
    })
}

fn two_fields(text: &str, line: usize) -> Result<(&str, &str), ParseError> {
    let mut it = text.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(ParseError::Malformed {
            line,
            reason: format!("expected two fields, got {text:?}"),
        }),
    }
}

pub fn parse_edge_list(bytes: &[u8]) -> Result<Graph, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|_| ParseError::InvalidUtf8)?;
    let text = text.strip_suffix('\n').unwrap_or(text);
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or(ParseError::Empty)?;
    let (n_tok, m_tok) = two_fields(header, 1)?;
    let n = parse_usize(n_tok, 1, "order")?;
    let declared = parse_usize(m_tok, 1, "size")?;

    let mut edges: Vec<Edge> = Vec::with_capacity(declared);
    let mut seen = std::collections::HashSet::with_capacity(declared);
    for (line, l) in lines {
        let (a, b) = two_fields(l, line)?;
        let a = parse_usize(a, line, "endpoint")?;
        let b = parse_usize(b, line, "endpoint")?;
        for vertex in [a, b] {
            if vertex >= n {
                return Err(ParseError::EndpointOutOfRange {
                    line,
                    vertex,
                    order: n,
                });
            }
        }
        if a == b {
            return Err(ParseError::Loop { line, vertex: a });
        }
        let edge = Edge::new(a, b);
        if !seen.insert(edge) {
            return Err(ParseError::DuplicateEdge { line, edge });
        }
        edges.push(edge);
    }
    if edges.len() != declared {
        return Err(ParseError::EdgeCountMismatch {
            declared,
            found: edges.len(),
        });
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

/// Canonical edge-list text, terminated by a newline.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}

fn graph6_body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes a short-form graph6 string. An optional `>>graph6<<` header and a
/// single trailing newline are accepted.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, ParseError> {
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let bytes = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    let (&first, body) = bytes.split_first().ok_or(ParseError::Empty)?;
    if first == 126 {
        return Err(ParseError::UnsupportedOrder);
    }
    if !(63..=125).contains(&first) {
        return Err(ParseError::InvalidCharacter {
            offset: 0,
            byte: first,
        });
    }
    let n = (first - 63) as usize;
    let expected = graph6_body_len(n);
    if let Some((i, &byte)) = body
        .iter()
        .take(expected)
        .enumerate()
        .find(|(_, b)| !(63..=126).contains(*b))
    {
        return Err(ParseError::InvalidCharacter {
            offset: i + 1,
            byte,
        });
    }
    if body.len() < expected {
        return Err(ParseError::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(ParseError::TrailingData {
            offset: expected + 1,
        });
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    // upper triangle, column by column
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push(Edge::new(u, v));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

/// Encodes `g` in short-form graph6 (no header, no newline).
pub fn emit_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(ParseError::UnsupportedOrder);
    }
    let mut body = vec![0u8; graph6_body_len(n)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(body.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(body.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}
