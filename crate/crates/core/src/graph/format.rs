//! Line-based graph text format.
//!
//! ```text
//! # comment
//! p graph <n> <m>
//! e <u> <v>
//! c <v> <color>
//! r <v>
//! t <v>
//! k <budget>
//! ```
//!
//! The header comes first. Colors, if any, must be given for every vertex.
//! The optional `k` line carries the solution-size budget of the instance.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;
use core::str::FromStr;

use super::AnnotatedGraph;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: AnnotatedGraph,
    pub k: Option<u64>,
}

fn field<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("bad {what} {tok:?}")))
}

fn vertex(tok: Option<&str>, line: usize, n: usize) -> Result<usize> {
    let v: usize = field(tok, line, "vertex")?;
    if v >= n {
        return Err(Error::parse(line, format!("vertex {v} out of range for n = {n}")));
    }
    Ok(v)
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut g = AnnotatedGraph::new(0);
    let mut colors: Vec<Option<u32>> = Vec::new();
    let mut any_color = false;
    let mut last_color_line = 0;
    let mut terminals = BTreeSet::new();
    let mut any_terminal = false;
    let mut root_seen = false;
    let mut k = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = content.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        if header.is_none() && tag != "p" {
            return Err(Error::parse(line, format!("expected header before {tag:?}")));
        }
        let n = g.n();
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line, "second header"));
                }
                if toks.next() != Some("graph") {
                    return Err(Error::parse(line, "header must read `p graph <n> <m>`"));
                }
                let n: usize = field(toks.next(), line, "vertex count")?;
                let m: usize = field(toks.next(), line, "edge count")?;
                g = AnnotatedGraph::new(n);
                colors = alloc::vec![None; n];
                header = Some((n, m, line));
            }
            "e" => {
                let u = vertex(toks.next(), line, n)?;
                let v = vertex(toks.next(), line, n)?;
                if u == v {
                    return Err(Error::parse(line, format!("self-loop at {u}")));
                }
                if !g.insert_edge(u, v) {
                    return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
                }
            }
            "c" => {
                let v = vertex(toks.next(), line, n)?;
                let c: u32 = field(toks.next(), line, "color")?;
                if c == 0 {
                    return Err(Error::parse(line, "colors start at 1"));
                }
                if colors[v].replace(c).is_some() {
                    return Err(Error::parse(line, format!("vertex {v} colored twice")));
                }
                any_color = true;
                last_color_line = line;
            }
            "r" => {
                let v = vertex(toks.next(), line, n)?;
                if root_seen {
                    return Err(Error::parse(line, "second root"));
                }
                root_seen = true;
                g.root = Some(v);
            }
            "t" => {
                let v = vertex(toks.next(), line, n)?;
                if !terminals.insert(v) {
                    return Err(Error::parse(line, format!("terminal {v} listed twice")));
                }
                any_terminal = true;
            }
            "k" => {
                if k.is_some() {
                    return Err(Error::parse(line, "second budget line"));
                }
                k = Some(field(toks.next(), line, "budget")?);
            }
            other => return Err(Error::parse(line, format!("unknown line type {other:?}"))),
        }
        if let Some(extra) = toks.next() {
            return Err(Error::parse(line, format!("trailing token {extra:?}")));
        }
    }

    let Some((_, m, header_line)) = header else {
        return Err(Error::parse(0, "missing `p graph` header"));
    };
    if g.edge_count() != m {
        return Err(Error::parse(
            header_line,
            format!("header announces {m} edges, found {}", g.edge_count()),
        ));
    }
    if any_color {
        let full: Option<Vec<u32>> = colors.iter().copied().collect();
        match full {
            Some(c) => g.coloring = Some(c),
            None => {
                let v = colors.iter().position(Option::is_none).unwrap_or(0);
                return Err(Error::parse(last_color_line, format!("vertex {v} has no color")));
            }
        }
    }
    if any_terminal {
        g.terminals = Some(terminals);
    }
    Ok(GraphFile { graph: g, k })
}

/// Canonical text: header, sorted edges, colors, root, terminals, budget.
pub fn serialize_graph(g: &AnnotatedGraph, k: Option<u64>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "p graph {} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {u} {v}");
    }
    if let Some(c) = g.coloring() {
        for (v, col) in c.iter().enumerate() {
            let _ = writeln!(s, "c {v} {col}");
        }
    }
    if let Some(r) = g.root() {
        let _ = writeln!(s, "r {r}");
    }
    if let Some(t) = g.terminals() {
        for v in t {
            let _ = writeln!(s, "t {v}");
        }
    }
    if let Some(k) = k {
        let _ = writeln!(s, "k {k}");
    }
    s
}

pub fn normalize_graph_text(text: &str) -> Result<String> {
    let f = parse_graph(text)?;
    Ok(serialize_graph(&f.graph, f.k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k2() {
        let f = parse_graph("p graph 2 1\ne 0 1\n").unwrap();
        assert_eq!(f.graph, AnnotatedGraph::complete(2));
        assert_eq!(f.k, None);
    }

    #[test]
    fn parses_colored_triangle() {
        let text = "p graph 3 3\ne 0 1\ne 1 2\ne 0 2\nc 0 1\nc 1 2\nc 2 3\n";
        let f = parse_graph(text).unwrap();
        assert_eq!(f.graph.edge_count(), 3);
        assert_eq!(f.graph.coloring(), Some(&[1, 2, 3][..]));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph("p graph 2 1\n# c\ne 0 2\n").unwrap_err();
        assert_eq!(err, Error::parse(3, "vertex 2 out of range for n = 2"));
        assert!(matches!(
            parse_graph("p graph 2 2\ne 0 1\ne 1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_graph("p graph 2 0\nx 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("p graph 2 0\nc 0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("e 0 1\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn round_trip_with_annotations() {
        let text = "# rooted\np graph 4 2\ne 2 3   # tail\ne 0 1\nr 0\nt 3\nt 1\nk 5\n";
        let f = parse_graph(text).unwrap();
        let s = serialize_graph(&f.graph, f.k);
        assert_eq!(s, "p graph 4 2\ne 0 1\ne 2 3\nr 0\nt 1\nt 3\nk 5\n");
        assert_eq!(parse_graph(&s).unwrap(), f);
    }
}
