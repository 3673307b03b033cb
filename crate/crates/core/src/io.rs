//! Plain-text formats.
//!
//! All formats are UTF-8, line oriented, and treat everything after `#` as
//! a comment. Errors carry 1-based line numbers.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Ordering};
use crate::hypergraph::FullHypergraph;
use crate::sigma::NeighborhoodSystem;
use crate::star::ListAssignment;

/// Non-empty content lines as `(line number, trimmed text)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn number(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("expected a non-negative integer, found {tok:?}"),
        )
    })
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace().map(|t| number(line, t)).collect()
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    what: &str,
) -> Result<(usize, usize, usize)> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| parse_err(1, format!("missing `n m` header for {what}")))?;
    match numbers(line, text)?[..] {
        [n, m] => Ok((line, n, m)),
        _ => Err(parse_err(line, "header must be `n m`")),
    }
}

/// Reads `n m` followed by exactly `m` lines `u v`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, n, m) = header(&mut lines, "graph")?;
    let mut seen = BTreeSet::new();
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (line, body) in lines {
        last = line;
        let [u, v] = numbers(line, body)?[..] else {
            return Err(parse_err(line, "edge line must be `u v`"));
        };
        if u == v {
            return Err(parse_err(line, format!("self-loop at {u}")));
        }
        if u.max(v) >= n {
            return Err(parse_err(
                line,
                format!("vertex {} out of range 0..{n}", u.max(v)),
            ));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
        if edges.len() > m {
            return Err(parse_err(line, format!("more than {m} edge lines")));
        }
    }
    if edges.len() < m {
        return Err(parse_err(
            last,
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Edge list over arbitrary whitespace-free labels, one `a b` per line.
/// Vertices are numbered in order of first appearance; the returned table
/// maps ids back to labels.
pub fn parse_labeled_edges(text: &str) -> Result<(Graph, Vec<String>)> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for (line, body) in content_lines(text) {
        let toks: Vec<&str> = body.split_whitespace().collect();
        let [a, b] = toks[..] else {
            return Err(parse_err(line, "edge line must be `a b`"));
        };
        if a == b {
            return Err(parse_err(line, format!("self-loop at {a}")));
        }
        let mut id = |t| {
            *ids.entry(t).or_insert_with(|| {
                labels.push(String::from(t));
                labels.len() - 1
            })
        };
        let (u, v) = (id(a), id(b));
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge {a} {b}")));
        }
        edges.push((u, v));
    }
    Ok((Graph::from_edges(labels.len(), edges)?, labels))
}

/// `v: u1 u2 ...` lines keyed by vertex, each vertex at most once.
fn keyed_lists<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    n: usize,
) -> Result<Vec<Option<Vec<usize>>>> {
    let mut out = vec![None; n];
    for (line, body) in lines {
        let (key, rest) = body
            .split_once(':')
            .ok_or_else(|| parse_err(line, "expected `v: members...`"))?;
        let v = number(line, key.trim())?;
        if v >= n {
            return Err(parse_err(line, format!("vertex {v} out of range 0..{n}")));
        }
        if out[v].is_some() {
            return Err(parse_err(line, format!("vertex {v} listed twice")));
        }
        out[v] = Some(numbers(line, rest)?);
    }
    Ok(out)
}

/// Raw Σ file contents: per-vertex sets and the declared depth, if any.
pub fn parse_sigma_sets(text: &str, n: usize) -> Result<(Vec<Vec<usize>>, Option<usize>)> {
    let mut lines = content_lines(text).peekable();
    let mut depth = None;
    if let Some(&(line, body)) = lines.peek() {
        if let Some(rest) = body.strip_prefix("depth") {
            if !rest.starts_with(':') {
                let d = number(line, rest.trim())?;
                if d == 0 {
                    return Err(parse_err(line, "depth must be at least 1"));
                }
                depth = Some(d);
                lines.next();
            }
        }
    }
    let mut sets = Vec::with_capacity(n);
    for (v, set) in keyed_lists(lines, n)?.into_iter().enumerate() {
        let set = set.unwrap_or_default();
        if let Some(&bad) = set.iter().find(|&&u| u >= n) {
            return Err(Error::InvalidSystem(format!(
                "vertex {v}: member {bad} out of range"
            )));
        }
        sets.push(set);
    }
    Ok((sets, depth))
}

/// Parses and validates a Σ file against `g`. An explicit `depth` overrides
/// the file header; otherwise the header applies, defaulting to 1.
pub fn parse_sigma(text: &str, g: &Graph, depth: Option<usize>) -> Result<NeighborhoodSystem> {
    let (sets, declared) = parse_sigma_sets(text, g.n())?;
    NeighborhoodSystem::new(g, sets, depth.or(declared).unwrap_or(1))
}

pub fn write_sigma(s: &NeighborhoodSystem) -> String {
    let mut out = format!("depth {}\n", s.depth());
    for (v, set) in s.sets().iter().enumerate() {
        if !set.is_empty() {
            let members: Vec<String> = set.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{v}: {}", members.join(" "));
        }
    }
    out
}

/// A single line holding a permutation of `0..n`.
pub fn parse_ordering(text: &str) -> Result<Ordering> {
    let mut lines = content_lines(text);
    let perm = match lines.next() {
        Some((line, body)) => numbers(line, body)?,
        None => Vec::new(),
    };
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "ordering must be a single line"));
    }
    Ordering::new(perm)
}

pub fn write_ordering(o: &Ordering) -> String {
    let ids: Vec<String> = o.perm().iter().map(usize::to_string).collect();
    ids.join(" ") + "\n"
}

/// `v: c1 c2 ...` for every vertex of an `n`-vertex graph.
pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment> {
    let lists = keyed_lists(content_lines(text), n)?
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| Error::Precondition(format!("vertex {v} has no list"))))
        .collect::<Result<Vec<_>>>()?;
    ListAssignment::new(lists)
}

/// `n m` followed by `m` lines, each a vertex set. Fullness is checked.
pub fn parse_hypergraph(text: &str) -> Result<FullHypergraph> {
    let mut lines = content_lines(text);
    let (hline, n, m) = header(&mut lines, "hypergraph")?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (line, body) in lines {
        last = line;
        let e = numbers(line, body)?;
        if let Some(&bad) = e.iter().find(|&&v| v >= n) {
            return Err(parse_err(line, format!("vertex {bad} out of range 0..{n}")));
        }
        edges.push(e);
        if edges.len() > m {
            return Err(parse_err(line, format!("more than {m} hyperedge lines")));
        }
    }
    if edges.len() < m {
        return Err(parse_err(
            last,
            format!("expected {m} hyperedge lines, found {}", edges.len()),
        ));
    }
    FullHypergraph::new(n, edges)
}

pub fn write_hypergraph(h: &FullHypergraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.hyperedges().len());
    for e in h.hyperedges() {
        let ids: Vec<String> = e.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", ids.join(" "));
    }
    out
}
