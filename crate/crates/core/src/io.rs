//! Text encodings: graph6 and a plain edge list.
//!
//! graph6 follows the usual layout: a size header, then the upper triangle
//! of the adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, most significant bit first, each byte offset by 63.
//! Decoding is strict: the size header must use its shortest form and the
//! padding bits must be zero, so `encode(decode(s)) == s` whenever decoding succeeds.

use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, BITSET_CAP};

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let body = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    if body.is_empty() {
        return Err(ParseError::Empty);
    }
    for (offset, &byte) in body.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(ParseError::BadByte { offset, byte });
        }
    }
    let (n, header_len) = decode_size(body)?;
    if n > BITSET_CAP {
        return Err(GraphError::CapacityExceeded(n).into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != expected {
        return Err(ParseError::BodyLength {
            expected,
            got: data.len(),
        });
    }

    let mut rows = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(ParseError::NonZeroPadding);
        }
    }
    Ok(Graph::from_rows(rows)?)
}

fn decode_size(body: &[u8]) -> Result<(usize, usize), ParseError> {
    let value = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
    };
    if body[0] != 126 {
        return Ok(((body[0] - 63) as usize, 1));
    }
    let (n, len) = if body.get(1) == Some(&126) {
        let raw = body.get(2..8).ok_or(ParseError::TruncatedHeader)?;
        (value(raw), 8)
    } else {
        let raw = body.get(1..4).ok_or(ParseError::TruncatedHeader)?;
        (value(raw), 4)
    };
    let canonical = match len {
        4 => (63..=258_047).contains(&n),
        _ => n > 258_047,
    };
    if !canonical {
        return Err(ParseError::NonCanonicalHeader(n));
    }
    Ok((n, len))
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses every non-blank line of a graph6 file.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| ParseError::EdgeList {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`
/// with 0-based vertex ids. Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let err = |line: usize, message: String| ParseError::EdgeList { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let [n, m] = parse_pair(header).map_err(|m| err(hline, m))?;
    if n > BITSET_CAP {
        return Err(GraphError::CapacityExceeded(n).into());
    }
    let max_edges = n * n.saturating_sub(1) / 2;
    if m > max_edges {
        return Err(err(hline, format!("{m} edges cannot fit on {n} vertices")));
    }

    let mut edges = Vec::with_capacity(m);
    for (lno, line) in lines {
        if edges.len() == m {
            return Err(err(lno, format!("more than the declared {m} edges")));
        }
        let [u, v] = parse_pair(line).map_err(|m| err(lno, m))?;
        if u >= n || v >= n {
            return Err(err(lno, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(err(lno, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            hline,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::new(n, &edges)?)
}

fn parse_pair(line: &str) -> Result<[usize; 2], String> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize, String> {
        let tok = it
            .next()
            .ok_or_else(|| "expected two integers".to_string())?;
        tok.parse()
            .map_err(|_| format!("`{tok}` is not a non-negative integer"))
    };
    let pair = [next()?, next()?];
    if it.next().is_some() {
        return Err("expected exactly two integers".into());
    }
    Ok(pair)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
