//! Line-oriented graph format.
//!
//! ```text
//! # comment
//! vertex a
//! vertex b
//! edge e a b
//! ```

use std::fmt::Write as _;

use super::{GraphSpec, MultiGraph};
use crate::syntax::ParseError;

/// Parses one graph record line into `spec`. Returns `Ok(false)` for lines that
/// are not graph records.
pub(crate) fn parse_record(spec: &mut GraphSpec, line: &str, lineno: usize) -> Result<bool, ParseError> {
    let words: Vec<(usize, &str)> = split_words(line);
    let Some(&(col, head)) = words.first() else {
        return Ok(false);
    };
    match head {
        "vertex" => {
            if words.len() != 2 {
                return Err(ParseError::new(lineno, col, "expected `vertex <id>`"));
            }
            spec.vertices.push(words[1].1.to_owned());
            Ok(true)
        }
        "edge" => {
            if words.len() != 4 {
                return Err(ParseError::new(lineno, col, "expected `edge <id> <v0> <v1>`"));
            }
            spec.edges.push((words[1].1.to_owned(), words[2].1.to_owned(), words[3].1.to_owned()));
            Ok(true)
        }
        _ => Ok(false),
    }
}

fn split_words(line: &str) -> Vec<(usize, &str)> {
    let line = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Parses a whole document consisting only of graph records.
pub fn parse_graph(text: &str) -> Result<MultiGraph, ParseError> {
    let mut spec = GraphSpec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if !parse_record(&mut spec, line, lineno)? {
            if let Some(&(col, word)) = split_words(line).first() {
                return Err(ParseError::new(lineno, col, format!("unexpected `{word}`")));
            }
        }
    }
    spec.build().map_err(|e| ParseError::new(0, 0, e.to_string()))
}

/// Prints the graph records, one per line.
pub fn write_graph(g: &MultiGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        let _ = writeln!(out, "vertex {}", g.vertex_name(v));
    }
    for e in g.edges() {
        let _ = writeln!(out, "edge {} {} {}", e.name, g.vertex_name(e.ends[0]), g.vertex_name(e.ends[1]));
    }
    out
}

/// Graphviz rendering; `highlight` edges are drawn bold.
pub fn to_dot(g: &MultiGraph, name: &str, highlight: &[super::EdgeId]) -> String {
    let mut out = format!("graph \"{name}\" {{\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  \"{}\";", g.vertex_name(v));
    }
    for (i, e) in g.edges().iter().enumerate() {
        let style = if highlight.iter().any(|h| h.0 == i) { ", penwidth=3, color=red" } else { "" };
        let _ = writeln!(
            out,
            "  \"{}\" -- \"{}\" [label=\"{}\"{}];",
            g.vertex_name(e.ends[0]),
            g.vertex_name(e.ends[1]),
            e.name,
            style
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;

    #[test]
    fn round_trip() {
        let g = fixtures::circle_with_hair();
        let text = write_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# theta\nvertex a\n\nvertex b # second\nedge x a b\nedge y a b\n").unwrap();
        assert_eq!(g.betti1(), 1);
    }

    #[test]
    fn error_positions() {
        let err = parse_graph("vertex a\n  edge e a\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        let err = parse_graph("vertex a\nbogus\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 1));
    }

    #[test]
    fn dangling_endpoint_reported() {
        let err = parse_graph("vertex a\nedge e a c\n").unwrap_err();
        assert!(err.message.contains("dangling endpoint"));
    }
}
