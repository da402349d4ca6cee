//! Text formats for graphs: graph6 and plain edge lists.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, NamedGraph, MAX_VERTICES};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted; anything else after the record is an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed_start = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = trimmed_start;
    if let Some(rest) = body.strip_prefix(GRAPH6_HEADER) {
        body = rest;
        base += GRAPH6_HEADER.len();
    }
    let bytes = body.as_bytes();
    let byte_at = |k: usize| -> Result<u8> {
        let b = *bytes
            .get(k)
            .ok_or_else(|| g6_err(base + k, "unexpected end of input"))?;
        if !(63..=126).contains(&b) {
            return Err(g6_err(base + k, format!("byte {b:#04x} outside 63..=126")));
        }
        Ok(b - 63)
    };

    let (n, mut pos) = match byte_at(0)? {
        63 => {
            if byte_at(1)? == 63 {
                return Err(g6_err(base + 1, "8-byte size form is not supported"));
            }
            let n = (0..3).try_fold(0usize, |acc, k| Ok::<_, Error>((acc << 6) | byte_at(1 + k)? as usize))?;
            if n < 63 {
                return Err(g6_err(base, format!("long size form used for n = {n}")));
            }
            (n, 4)
        }
        small => (small as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "graph6 vertex count",
            value: n,
            cap: MAX_VERTICES,
        });
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let data_len = total_bits.div_ceil(6);
    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for _ in 0..data_len {
        let chunk = byte_at(pos)?;
        for shift in (0..6).rev() {
            let set = (chunk >> shift) & 1 == 1;
            if k < total_bits {
                if set {
                    let (i, j) = column_pair(k);
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
            } else if set {
                return Err(g6_err(base + pos, "non-zero padding bits"));
            }
            k += 1;
        }
        pos += 1;
    }
    if pos < bytes.len() {
        return Err(g6_err(base + pos, "trailing bytes after graph6 record"));
    }
    Ok(Graph::from_adjacency(adj))
}

/// Position `k` in graph6 bit order (column by column over the upper
/// triangle) maps to the pair `(i, j)` with `i < j`.
fn column_pair(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
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

/// Parses whitespace-separated vertex-name pairs, one or more per line.
/// `#` starts a comment. Names get indices in first-appearance order.
pub fn parse_edge_list(text: &str) -> Result<NamedGraph> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut names: Vec<String> = Vec::new();
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() % 2 == 1 {
            return Err(Error::EdgeList {
                line: lineno + 1,
                message: format!("odd number of tokens ({})", tokens.len()),
            });
        }
        for pair in tokens.chunks(2) {
            if pair[0] == pair[1] {
                return Err(Error::EdgeList {
                    line: lineno + 1,
                    message: format!("self-loop at {:?}", pair[0]),
                });
            }
            let mut id = |name: &str| {
                *index.entry(name.to_string()).or_insert_with(|| {
                    names.push(name.to_string());
                    names.len() - 1
                })
            };
            let a = id(pair[0]);
            let b = id(pair[1]);
            pairs.push((a, b));
        }
    }
    let graph = Graph::new(names.len(), pairs)?;
    Ok(NamedGraph { graph, names })
}

pub fn to_edge_list(g: &NamedGraph) -> String {
    let mut out = String::new();
    for e in g.graph.edges() {
        out.push_str(g.name(e.u));
        out.push(' ');
        out.push_str(g.name(e.v));
        out.push('\n');
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl GraphFormat {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::EdgeList => "edges",
        }
    }

    /// Guesses the format: one whitespace-free token of graph6 bytes is graph6.
    pub fn detect(text: &str) -> GraphFormat {
        let t = text.trim();
        let body = t.strip_prefix(GRAPH6_HEADER).unwrap_or(t);
        let looks_g6 = !body.is_empty()
            && !body.contains('#')
            && body.bytes().all(|b| (63..=126).contains(&b));
        if looks_g6 {
            GraphFormat::Graph6
        } else {
            GraphFormat::EdgeList
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<NamedGraph> {
    match format {
        GraphFormat::Graph6 => Ok(NamedGraph::with_index_names(parse_graph6(text)?)),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}
