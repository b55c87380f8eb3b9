//! Line-oriented text formats.
//!
//! * Edge list: a `n <count>` header, then one `u v` line per edge. `#`
//!   starts a comment line. Serialization writes `u < v`, sorted.
//! * Vertex set: whitespace-separated ids. `#` comment lines and a
//!   `size <k>` line are skipped, and a leading `set` keyword is allowed, so
//!   `solve` output can be fed back to `check`.
//! * Assignment: one `v<i>=0|1` line per variable.
//! * Coordinate map: one `id k row col kind` line per vertex of `H_phi`, kind
//!   being `true`, `false`, `dominating` or `v0` (`v0` uses `0 0 0`).

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::reduction::{Coord, HphiInstance, Polarity};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    SyntaxError { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::SyntaxError {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing `n <count>` header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| syntax(line, format!("bad vertex count `{count}`")))?,
        _ => return Err(syntax(line, "expected `n <count>` header")),
    };
    let mut pairs = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = fields.as_slice() else {
            return Err(syntax(line, "expected `u v`"));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| syntax(line, format!("bad vertex id `{s}`")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u >= n || v >= n {
            return Err(syntax(line, format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(syntax(line, format!("self-loop on {u}")));
        }
        pairs.push((u, v));
    }
    Ok(Graph::from_edge_list(n, &pairs)?)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_vertex_set(text: &str, n: usize) -> Result<VertexSet, ParseError> {
    let mut set = VertexSet::new(n);
    for (line, text) in content_lines(text) {
        let mut tokens = text.split_whitespace().peekable();
        match tokens.peek() {
            Some(&"size") => continue,
            Some(&"set") => {
                tokens.next();
            }
            _ => {}
        }
        for tok in tokens {
            let v: usize = tok
                .parse()
                .map_err(|_| syntax(line, format!("bad vertex id `{tok}`")))?;
            if v >= n {
                return Err(syntax(line, format!("vertex {v} out of range for n = {n}")));
            }
            set.insert(v);
        }
    }
    Ok(set)
}

pub fn serialize_vertex_set(a: &VertexSet) -> String {
    format!("size {}\nset {a}\n", a.len())
}

/// `v<i>=0|1` lines; every variable `1..=num_vars` must appear exactly once.
pub fn parse_assignment(text: &str, num_vars: usize) -> Result<Vec<bool>, ParseError> {
    let mut values: Vec<Option<bool>> = vec![None; num_vars];
    for (line, text) in content_lines(text) {
        let parsed = text
            .strip_prefix('v')
            .and_then(|rest| rest.split_once('='))
            .and_then(|(var, val)| {
                let var: usize = var.trim().parse().ok()?;
                let val = match val.trim() {
                    "0" => false,
                    "1" => true,
                    _ => return None,
                };
                Some((var, val))
            });
        let Some((var, val)) = parsed else {
            return Err(syntax(line, "expected `v<i>=0` or `v<i>=1`"));
        };
        if var == 0 || var > num_vars {
            return Err(syntax(
                line,
                format!("variable {var} outside 1..={num_vars}"),
            ));
        }
        if values[var - 1].replace(val).is_some() {
            return Err(syntax(line, format!("variable {var} assigned twice")));
        }
    }
    values
        .iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| syntax(0, format!("variable {} not assigned", i + 1))))
        .collect()
}

pub fn serialize_assignment(values: &[bool]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(i, &b)| format!("v{}={}\n", i + 1, u8::from(b)))
        .collect()
}

pub fn serialize_coordinates(h: &HphiInstance) -> String {
    let dominating_row = h.layout.block_rows() + 1;
    let mut out = String::new();
    for id in 0..h.graph.n() {
        match h.coord(id) {
            Coord::Cell {
                clause,
                row,
                col,
                polarity,
            } => {
                let kind = match polarity {
                    Polarity::True => "true",
                    Polarity::False => "false",
                };
                writeln!(out, "{id} {clause} {row} {col} {kind}")
            }
            Coord::Dominating { clause, col } => {
                writeln!(out, "{id} {clause} {dominating_row} {col} dominating")
            }
            Coord::Root => writeln!(out, "{id} 0 0 0 v0"),
        }
        .unwrap();
    }
    out
}
