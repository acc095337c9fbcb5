//! Text formats for graphs and hidden orders.
//!
//! Graph file: a header line `n m`, then exactly `m` arc lines `u v` with
//! 0-based endpoints. Order file: one vertex id per line, smallest hidden
//! rank first. Both formats skip blank lines and lines starting with `#`.
//! The writers emit the canonical form byte for byte: no comments, one
//! trailing newline, arcs in stored order.

use std::fs;
use std::path::Path;

use crate::dag::{Dag, VertexId};
use crate::error::Error;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] Error),
}

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Format(#[from] FormatError),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_u32(line: usize, token: &str, what: &str) -> Result<u32, FormatError> {
    token
        .parse::<u32>()
        .map_err(|_| parse_err(line, format!("{what} is not an integer in range: {token:?}")))
}

pub fn parse_dag(text: &str) -> Result<Dag, FormatError> {
    let mut lines = significant_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line"))?;
    let mut it = header.split_whitespace();
    let (n_tok, m_tok) = match (it.next(), it.next(), it.next()) {
        (Some(n), Some(m), None) => (n, m),
        _ => return Err(parse_err(header_no, "header must be two integers: n m")),
    };
    let n = parse_u32(header_no, n_tok, "vertex count")? as usize;
    let m = parse_u32(header_no, m_tok, "arc count")? as usize;
    let mut arcs = Vec::with_capacity(m);
    let mut last_line = header_no;
    for (line_no, line) in lines {
        if arcs.len() == m {
            return Err(parse_err(line_no, format!("more than {m} arc lines")));
        }
        let mut it = line.split_whitespace();
        let (u_tok, v_tok) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(parse_err(line_no, "arc line must be two integers: u v")),
        };
        let u = parse_u32(line_no, u_tok, "arc tail")?;
        let v = parse_u32(line_no, v_tok, "arc head")?;
        arcs.push((u, v));
        last_line = line_no;
    }
    if arcs.len() != m {
        return Err(parse_err(
            last_line,
            format!("expected {m} arc lines, found {}", arcs.len()),
        ));
    }
    Ok(Dag::new(n, &arcs)?)
}

pub fn format_dag(dag: &Dag) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", dag.vertex_count(), dag.arc_count()));
    for &(u, v) in dag.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_order(text: &str) -> Result<Vec<VertexId>, FormatError> {
    let mut order = Vec::new();
    for (line_no, line) in significant_lines(text) {
        let mut it = line.split_whitespace();
        let (tok, rest) = (it.next(), it.next());
        if rest.is_some() {
            return Err(parse_err(line_no, "order line must be a single vertex id"));
        }
        let v = parse_u32(line_no, tok.expect("significant line has a token"), "vertex id")?;
        order.push(VertexId(v));
    }
    Ok(order)
}

pub fn format_order(order: &[VertexId]) -> String {
    let mut out = String::new();
    for v in order {
        out.push_str(&format!("{v}\n"));
    }
    out
}

pub fn read_dag(path: &Path) -> Result<Dag, FileError> {
    Ok(parse_dag(&fs::read_to_string(path)?)?)
}

pub fn write_dag(path: &Path, dag: &Dag) -> std::io::Result<()> {
    fs::write(path, format_dag(dag))
}

pub fn read_order(path: &Path) -> Result<Vec<VertexId>, FileError> {
    Ok(parse_order(&fs::read_to_string(path)?)?)
}

pub fn write_order(path: &Path, order: &[VertexId]) -> std::io::Result<()> {
    fs::write(path, format_order(order))
}
