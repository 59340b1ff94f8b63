//! The OSH text format, version 1.
//!
//! ```text
//! osh 1
//! r 3
//! n 4
//! e 0 1 2
//! ```
//!
//! Header lines come first and in that order. Every `e` line lists `r`
//! strictly increasing vertices below `n`. Lines starting with `#` and blank
//! lines are ignored. The writer emits edges in ascending colex order and no
//! comments, so `parse_osh(&serialize_osh(h)) == h`.

use std::fmt::Write as _;

use crate::colex::rank;
use crate::error::{Error, Result};
use crate::hypercore::UniformHypergraph;

pub fn serialize_osh(h: &UniformHypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "osh 1");
    let _ = writeln!(out, "r {}", h.r());
    let _ = writeln!(out, "n {}", h.n());
    for e in h.edges() {
        out.push('e');
        for v in e {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn header_value(line_no: usize, line: &str, key: &str) -> Result<usize> {
    let mut it = line.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(k), Some(v), None) if k == key => v
            .parse()
            .map_err(|_| parse_err(line_no, format!("`{key}` expects an integer, got `{v}`"))),
        _ => Err(parse_err(line_no, format!("expected `{key} <int>`"))),
    }
}

pub fn parse_osh(text: &str) -> Result<UniformHypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let last_line = text.lines().count().max(1);
    let mut next_header = |what: &str| {
        lines
            .next()
            .ok_or_else(|| parse_err(last_line, format!("missing `{what}` header")))
    };

    let (ln, l) = next_header("osh")?;
    let version = header_value(ln, l, "osh")?;
    if version != 1 {
        return Err(parse_err(ln, format!("unsupported OSH version {version}")));
    }
    let (ln, l) = next_header("r")?;
    let r = header_value(ln, l, "r")?;
    if r < 2 {
        return Err(parse_err(
            ln,
            format!("uniformity must be at least 2, got {r}"),
        ));
    }
    let (ln, l) = next_header("n")?;
    let n = header_value(ln, l, "n")?;

    let mut h = UniformHypergraph::empty(r, n).map_err(|e| parse_err(ln, e.to_string()))?;
    let mut seen = crate::colex::BitVec::zeros(h.edge_bits().len());
    for (ln, l) in lines {
        let mut it = l.split_whitespace();
        if it.next() != Some("e") {
            return Err(parse_err(ln, format!("expected an `e` line, got `{l}`")));
        }
        let vs: Vec<usize> = it
            .map(|t| {
                t.parse()
                    .map_err(|_| parse_err(ln, format!("bad vertex `{t}`")))
            })
            .collect::<Result<_>>()?;
        if vs.len() != r {
            return Err(parse_err(
                ln,
                format!("edge has {} vertices, expected {r}", vs.len()),
            ));
        }
        if vs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err(
                ln,
                "edge vertices must be strictly increasing (repeated or unsorted vertex)",
            ));
        }
        if let Some(&v) = vs.last() {
            if v >= n {
                return Err(parse_err(
                    ln,
                    format!("vertex {v} out of range for n = {n}"),
                ));
            }
        }
        let idx = rank(&vs);
        if seen.get(idx) {
            return Err(parse_err(ln, "duplicate edge"));
        }
        seen.set(idx, true);
        h.insert_edge(&vs)
            .map_err(|e| parse_err(ln, e.to_string()))?;
    }
    Ok(h)
}
