//! Text formats: the plain edge list, graph6 and DOT.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use onetwothree::graph::Graph;
use onetwothree::weighting::EdgeWeighting;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line { line, message: message.into() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceFormat {
    EdgeList,
    Graph6,
}

/// A parsed graph with the labels its vertices carried in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub labels: Vec<String>,
    pub format: SourceFormat,
}

impl GraphDocument {
    pub fn new(graph: Graph, format: SourceFormat) -> GraphDocument {
        let labels = (0..graph.n()).map(|v| v.to_string()).collect();
        GraphDocument { graph, labels, format }
    }
}

/// Parses a header line `n m` followed by `m` lines `u v` with 0-indexed
/// endpoints. Blank lines and anything after `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<GraphDocument, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| at(1, "missing header line \"n m\""))?;
    let [n, m] = numbers(hline, header)?;

    let mut seen = BTreeSet::new();
    let mut last = hline;
    for (line, l) in lines {
        last = line;
        let [u, v] = numbers(line, l)?;
        if u >= n || v >= n {
            return Err(at(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(at(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(at(line, format!("duplicate edge {u} {v}")));
        }
    }
    if seen.len() != m {
        return Err(at(last, format!("header announces {m} edges, found {}", seen.len())));
    }
    let graph = Graph::from_edges(n, seen).map_err(|e| at(hline, e.to_string()))?;
    Ok(GraphDocument::new(graph, SourceFormat::EdgeList))
}

fn numbers(line: usize, l: &str) -> Result<[usize; 2], ParseError> {
    let fields: Vec<&str> = l.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(at(line, format!("expected two integers, found {:?}", l)));
    }
    let parse = |s: &str| s.parse::<usize>().map_err(|_| at(line, format!("{s:?} is not a non-negative integer")));
    Ok([parse(fields[0])?, parse(fields[1])?])
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}

/// Parses one graph in graph6, with or without the `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<GraphDocument, ParseError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).as_bytes();
    if let Some(&b) = s.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let (n, rest) = match s {
        [] => return Err(ParseError::Graph6("empty input".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => (sixes(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => (sixes(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(ParseError::Graph6("truncated vertex count".into())),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if rest.len() != pairs.div_ceil(6) {
        return Err(ParseError::Graph6(format!("{n} vertices need {} data bytes, found {}", pairs.div_ceil(6), rest.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    let graph = Graph::from_edges(n, edges).map_err(|e| ParseError::Graph6(e.to_string()))?;
    Ok(GraphDocument::new(graph, SourceFormat::Graph6))
}

fn sixes(bytes: &[u8]) -> usize {
    bytes.iter().fold(0, |acc, &b| acc << 6 | (b - 63) as usize)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    let width = match n {
        0..=62 => 1,
        63..=258_047 => {
            out.push(126);
            3
        }
        _ => {
            out.extend([126, 126]);
            6
        }
    };
    for i in (0..width).rev() {
        out.push((n >> (6 * i) & 63) as u8 + 63);
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    for chunk in bits.chunks(6) {
        let byte = chunk.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | (b as u8) << (5 - i));
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// An undirected DOT graph. With a weighting, edges carry their weight and
/// vertices their weighted degree.
pub fn emit_dot(doc: &GraphDocument, w: Option<&EdgeWeighting>) -> String {
    let g = &doc.graph;
    let sums = w.map(|w| w.sums(g.n()));
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let label = match &sums {
            Some(s) => format!("{}\\ns={}", doc.labels[v], s[v]),
            None => doc.labels[v].clone(),
        };
        let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(&label));
    }
    for e in g.edges() {
        match w.and_then(|w| w.get(*e)) {
            Some(x) => {
                let _ = writeln!(out, "  {} -- {} [label=\"{x}\"];", e.lo(), e.hi());
            }
            None => {
                let _ = writeln!(out, "  {} -- {};", e.lo(), e.hi());
            }
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('"', "\\\"")
}
