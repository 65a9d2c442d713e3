//! Text formats.
//!
//! Adjacency list: a header line `n m`, then `m` lines `u v` with
//! `0 <= u < v < n`. The weighted variant appends `n` lines `v p/q` for
//! `v = 0, 1, ..., n-1` in order. A single trailing newline is allowed;
//! nothing else is.
//!
//! Compact form (one graph per line): `n=<n> edges=<u>-<v>,<u>-<v>,...`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, WeightedGraph};
use crate::{fmt_rat, parse_rat, Rational};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers(line: &str, lineno: usize, expect: usize) -> Result<Vec<usize>> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != expect {
        return Err(perr(lineno, format!("expected {expect} fields, found {}", toks.len())));
    }
    toks.iter()
        .map(|t| t.parse::<usize>().map_err(|_| perr(lineno, format!("`{t}` is not a nonnegative integer"))))
        .collect()
}

fn split_lines(text: &str) -> Vec<&str> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        Vec::new()
    } else {
        body.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)).collect()
    }
}

/// Parses a graph, plus weights if the weighted variant is present.
pub fn parse_graph_with_weights(text: &str) -> Result<(Graph, Option<Vec<Rational>>)> {
    let lines = split_lines(text);
    let header = lines.first().ok_or_else(|| perr(1, "missing header `n m`"))?;
    let hm = numbers(header, 1, 2).map_err(|_| perr(1, "malformed header, expected `n m`"))?;
    let (n, m) = (hm[0], hm[1]);
    if lines.len() < 1 + m {
        return Err(perr(lines.len() + 1, format!("expected {m} edge lines, found {}", lines.len() - 1)));
    }
    let mut g = Graph::empty(n);
    for (i, line) in lines[1..=m].iter().enumerate() {
        let lineno = i + 2;
        let uv = numbers(line, lineno, 2)?;
        let (u, v) = (uv[0], uv[1]);
        if u == v {
            return Err(perr(lineno, format!("self-loop at vertex {u}")));
        }
        if v >= n || u >= n {
            return Err(perr(lineno, format!("index {} out of range for n = {n}", u.max(v))));
        }
        if u > v {
            return Err(perr(lineno, format!("edge `{u} {v}` violates u < v")));
        }
        if g.has_edge(u, v) {
            return Err(perr(lineno, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
    }
    let rest = &lines[1 + m..];
    if rest.is_empty() {
        return Ok((g, None));
    }
    if rest.len() != n {
        return Err(perr(2 + m, format!("weighted variant needs {n} weight lines, found {}", rest.len())));
    }
    let mut weights = Vec::with_capacity(n);
    for (v, line) in rest.iter().enumerate() {
        let lineno = 2 + m + v;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(perr(lineno, "expected `v p/q`"));
        }
        if toks[0].parse::<usize>().ok() != Some(v) {
            return Err(perr(lineno, format!("expected weight line for vertex {v}")));
        }
        let w = parse_rat(toks[1]).map_err(|e| perr(lineno, e.to_string()))?;
        if w < Rational::from_integer(0.into()) {
            return Err(perr(lineno, format!("negative weight at vertex {v}")));
        }
        weights.push(w);
    }
    Ok((g, Some(weights)))
}

/// Parses the unweighted format; weight lines are rejected.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match parse_graph_with_weights(text)? {
        (g, None) => Ok(g),
        (g, Some(_)) => Err(perr(2 + g.edge_count(), "unexpected lines after the edge list")),
    }
}

/// Parses the weighted format; weight lines are required.
pub fn parse_weighted_graph(text: &str) -> Result<WeightedGraph> {
    match parse_graph_with_weights(text)? {
        (g, Some(w)) => WeightedGraph::new(g, w),
        (g, None) => Err(perr(2 + g.edge_count(), "missing weight lines")),
    }
}

pub fn emit_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn emit_weighted_graph(wg: &WeightedGraph) -> String {
    let mut s = emit_graph(wg.graph());
    for (v, w) in wg.weights().iter().enumerate() {
        let _ = writeln!(s, "{v} {}", fmt_rat(w));
    }
    s
}

/// DOT export, with weights as labels when given.
pub fn to_dot(g: &Graph, weights: Option<&[Rational]>) -> String {
    let mut s = String::from("graph G {\n");
    for v in g.vertices() {
        match weights {
            Some(w) => {
                let _ = writeln!(s, "  {v} [label=\"{v}\\n{}\"];", fmt_rat(&w[v]));
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

pub fn emit_compact(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} edges={}", g.n(), edges.join(","))
}

pub fn parse_compact(s: &str) -> Result<Graph> {
    let mut toks = s.split_whitespace();
    let n = toks
        .next()
        .and_then(|t| t.strip_prefix("n="))
        .and_then(|t| t.parse::<usize>().ok())
        .ok_or_else(|| perr(1, "expected `n=<n>`"))?;
    let edges = toks.next().and_then(|t| t.strip_prefix("edges=")).ok_or_else(|| perr(1, "expected `edges=`"))?;
    let mut list = Vec::new();
    for e in edges.split(',').filter(|e| !e.is_empty()) {
        let (u, v) = e.split_once('-').ok_or_else(|| perr(1, format!("bad edge `{e}`")))?;
        let u = u.parse().map_err(|_| perr(1, format!("bad edge `{e}`")))?;
        let v = v.parse().map_err(|_| perr(1, format!("bad edge `{e}`")))?;
        list.push((u, v));
    }
    Graph::from_edges(n, &list)
}
