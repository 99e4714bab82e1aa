//! Plain-text formats.
//!
//! Graphs: a header `p <n> <m>` followed by `m` lines `e <u> <v>` with
//! 1-based endpoints. Hypergraphs: `h <n> <e>` followed by `e` lines
//! `s <v1> ... <vk>`. In both, `c ...` comment lines and blank lines are
//! ignored. Colorings are `v<i> <color>` lines (1-based `i`); any other
//! line is skipped, so a solver's whole output can be read back.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::Coloring;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, toks)),
        }
    })
}

fn num(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| {
        perr(
            line,
            format!("expected a non-negative integer, got {tok:?}"),
        )
    })
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<usize> {
    let v = num(line, tok)?;
    if v == 0 || v > n {
        return Err(perr(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| perr(0, "missing `p <n> <m>` header"))?;
    if header.len() != 3 || header[0] != "p" {
        return Err(perr(hl, "expected `p <n> <m>`"));
    }
    let n = num(hl, header[1])?;
    let m = num(hl, header[2])?;
    let mut edges = Vec::with_capacity(m);
    for (ln, toks) in lines {
        if toks[0] != "e" || toks.len() != 3 {
            return Err(perr(ln, "expected `e <u> <v>`"));
        }
        let (u, v) = (vertex(ln, toks[1], n)?, vertex(ln, toks[2], n)?);
        if u == v {
            return Err(perr(ln, format!("self-loop at vertex {}", u + 1)));
        }
        edges.push((u.min(v), u.max(v)));
    }
    if edges.len() != m {
        return Err(perr(
            hl,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(perr(
            hl,
            format!("repeated edge {} {}", w[0].0 + 1, w[0].1 + 1),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Writes `g`; each entry of `comments` becomes a `c` line after the header.
pub fn write_graph(g: &Graph, comments: &[String]) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    if let Some((a, b)) = g.factors() {
        let _ = writeln!(out, "c factors {a} {b}");
    }
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| perr(0, "missing `h <n> <e>` header"))?;
    if header.len() != 3 || header[0] != "h" {
        return Err(perr(hl, "expected `h <n> <e>`"));
    }
    let n = num(hl, header[1])?;
    let e = num(hl, header[2])?;
    let mut edges = Vec::with_capacity(e);
    for (ln, toks) in lines {
        if toks[0] != "s" || toks.len() < 2 {
            return Err(perr(ln, "expected `s <v1> ... <vk>`"));
        }
        let edge = toks[1..]
            .iter()
            .map(|t| vertex(ln, t, n))
            .collect::<Result<Vec<_>>>()?;
        edges.push(edge);
    }
    if edges.len() != e {
        return Err(perr(
            hl,
            format!("header announces {e} hyperedges, found {}", edges.len()),
        ));
    }
    Hypergraph::new(n, edges)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("h {} {}\n", h.n(), h.edge_count());
    for e in h.edges() {
        out.push('s');
        for v in e {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}

/// `v<i> <color>` lines, one per vertex.
pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, col) in c.as_slice().iter().enumerate() {
        let _ = writeln!(out, "v{} {}", v + 1, col);
    }
    out
}

/// Reads `v<i> <color>` lines for a graph on `n` vertices; other lines are skipped.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let mut colors = vec![0u32; n];
    for (i, line) in text.lines().enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [head, color] = toks[..] else { continue };
        let Some(idx) = head.strip_prefix('v') else {
            continue;
        };
        if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
            continue;
        }
        let v = vertex(i + 1, idx, n)?;
        let c: u32 = color
            .parse()
            .map_err(|_| perr(i + 1, format!("bad color {color:?}")))?;
        if c == 0 {
            return Err(perr(i + 1, "colors are positive"));
        }
        if colors[v] != 0 {
            return Err(perr(i + 1, format!("vertex {} colored twice", v + 1)));
        }
        colors[v] = c;
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(Error::pre(format!(
            "coloring is partial: vertex {} has no color",
            v + 1
        )));
    }
    Coloring::new(colors)
}
