//! The space file format: named graphs, named expressions and a `main`
//! designation.
//!
//! ```text
//! graph C
//! vertex o
//! edge loop o o
//! end
//! expr E (node (base P) (seqfam (v) (graph C) (vertex o)))
//! main E
//! ```
//!
//! A file holding only vertex and edge records is a single graph named `G`.

use std::fmt;
use std::sync::Arc;

use crate::graph::text::{parse_record, write_graph};
use crate::graph::{GraphSpec, MultiGraph};
use crate::syntax::{ParseError, Pos, Reader};
use crate::wild::syntax::{parse_expr, Scope};
use crate::wild::SpaceExpr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceFile {
    pub graphs: Vec<(String, Arc<MultiGraph>)>,
    pub exprs: Vec<(String, SpaceExpr)>,
    pub main: String,
}

#[derive(Debug, Clone, Copy)]
pub enum Definition<'a> {
    Graph(&'a Arc<MultiGraph>),
    Expr(&'a SpaceExpr),
}

fn words(line: &str) -> Vec<(usize, &str)> {
    let line = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut rest = line;
    let mut offset = 0;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let end = rest[start..].find(char::is_whitespace).map_or(rest.len(), |e| start + e);
        out.push((offset + start, &rest[start..end]));
        offset += end;
        rest = &rest[end..];
    }
    out
}

fn is_blank(s: &str) -> bool {
    words(s).is_empty()
}

impl SpaceFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let lines: Vec<&str> = text.lines().collect();
        let mut starts = Vec::with_capacity(lines.len());
        let mut off = 0;
        for l in text.split_inclusive('\n') {
            starts.push(off);
            off += l.len();
        }
        let mut file = SpaceFile { graphs: Vec::new(), exprs: Vec::new(), main: String::new() };
        let mut main: Option<(String, usize, usize)> = None;
        let mut bare = GraphSpec::new();
        let mut bare_line = 0;
        let mut i = 0;
        while i < lines.len() {
            let lineno = i + 1;
            let ws = words(lines[i]);
            let Some(&(col, head)) = ws.first() else {
                i += 1;
                continue;
            };
            let err = |c: usize, m: String| ParseError::new(lineno, c + 1, m);
            match head {
                "vertex" | "edge" => {
                    parse_record(&mut bare, lines[i], lineno)?;
                    bare_line = bare_line.max(lineno);
                    i += 1;
                }
                "graph" => {
                    let [_, (ncol, name)] = ws[..] else {
                        return Err(err(col, "expected `graph <name>`".into()));
                    };
                    file.check_fresh(name).map_err(|m| err(ncol, m))?;
                    let mut spec = GraphSpec::new();
                    i += 1;
                    loop {
                        let Some(line) = lines.get(i) else {
                            return Err(err(col, format!("graph `{name}` has no `end`")));
                        };
                        let w = words(line);
                        match w.first() {
                            None => {}
                            Some(&(_, "end")) if w.len() == 1 => break,
                            Some(&(c, other)) if !parse_record(&mut spec, line, i + 1)? => {
                                return Err(ParseError::new(i + 1, c + 1, format!("unexpected `{other}` in graph block")));
                            }
                            Some(_) => {}
                        }
                        i += 1;
                    }
                    let g = spec.build().map_err(|e| err(ncol, e.to_string()))?;
                    file.graphs.push((name.to_owned(), Arc::new(g)));
                    i += 1;
                }
                "expr" => {
                    let Some(&(ncol, name)) = ws.get(1) else {
                        return Err(err(col, "expected `expr <name> <expression>`".into()));
                    };
                    file.check_fresh(name).map_err(|m| err(ncol, m))?;
                    let from = ncol + name.len();
                    let mut r = Reader::new(&text[starts[i] + from..], Pos { line: lineno, column: from + 1 });
                    let sx = r.read()?;
                    let end = r.pos();
                    let tail: String = lines[end.line - 1].chars().skip(end.column - 1).collect();
                    if !is_blank(&tail) {
                        return Err(ParseError::new(end.line, end.column, "trailing input after expression"));
                    }
                    let e = parse_expr(&sx, &Scope { graphs: &file.graphs, exprs: &file.exprs })?;
                    file.exprs.push((name.to_owned(), e));
                    i = end.line;
                }
                "main" => {
                    let [_, (ncol, name)] = ws[..] else {
                        return Err(err(col, "expected `main <name>`".into()));
                    };
                    if main.is_some() {
                        return Err(err(col, "more than one `main`".into()));
                    }
                    main = Some((name.to_owned(), lineno, ncol + 1));
                    i += 1;
                }
                other => return Err(err(col, format!("unexpected `{other}`"))),
            }
        }
        if !bare.vertices.is_empty() || !bare.edges.is_empty() {
            if !file.graphs.is_empty() || !file.exprs.is_empty() {
                return Err(ParseError::new(bare_line, 1, "records outside a graph block"));
            }
            let g = bare.build().map_err(|e| ParseError::new(bare_line, 1, e.to_string()))?;
            file.graphs.push(("G".into(), Arc::new(g)));
        }
        file.main = match main {
            Some((name, line, col)) => {
                if file.definition(&name).is_none() {
                    return Err(ParseError::new(line, col, format!("`{name}` is not defined")));
                }
                name
            }
            None if file.graphs.len() + file.exprs.len() == 1 => {
                file.graphs.first().map(|d| d.0.clone()).or_else(|| file.exprs.first().map(|d| d.0.clone())).unwrap()
            }
            None => return Err(ParseError::new(lines.len().max(1), 1, "missing `main`")),
        };
        Ok(file)
    }

    fn check_fresh(&self, name: &str) -> Result<(), String> {
        if self.definition(name).is_some() {
            Err(format!("`{name}` is already defined"))
        } else {
            Ok(())
        }
    }

    pub fn definition(&self, name: &str) -> Option<Definition<'_>> {
        self.graphs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| Definition::Graph(g))
            .or_else(|| self.exprs.iter().find(|(n, _)| n == name).map(|(_, e)| Definition::Expr(e)))
    }

    pub fn graph(&self, name: &str) -> Option<&Arc<MultiGraph>> {
        self.graphs.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    /// The main definition as an expression; graphs become plain nodes.
    pub fn main_expr(&self) -> SpaceExpr {
        match self.definition(&self.main).expect("main is defined") {
            Definition::Graph(g) => SpaceExpr::graph(self.main.clone(), g.clone()),
            Definition::Expr(e) => e.clone(),
        }
    }

    /// The main definition when it is a finite graph.
    pub fn main_graph(&self) -> Option<&Arc<MultiGraph>> {
        match self.definition(&self.main)? {
            Definition::Graph(g) => Some(g),
            Definition::Expr(e) => e.as_plain_graph().map(|r| &r.graph),
        }
    }
}

impl fmt::Display for SpaceFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, g) in &self.graphs {
            writeln!(f, "graph {name}")?;
            f.write_str(&write_graph(g))?;
            writeln!(f, "end\n")?;
        }
        for (name, e) in &self.exprs {
            writeln!(f, "expr {name} {e}\n")?;
        }
        writeln!(f, "main {}", self.main)
    }
}
