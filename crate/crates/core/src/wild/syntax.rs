//! Reading and printing expressions.
//!
//! ```text
//! EXPR   := (graph G) | (node (base G) ATTACH* SEQFAM*)
//!         | (selfwild) | (zerodimwild) | (ref NAME)
//! ATTACH := (attach POINT EXPR POINT)
//! SEQFAM := (seqfam (ID*) EXPR POINT)
//! POINT  := (vertex ID) | (edge ID NUM/DEN)
//! ```
//!
//! `(ref NAME)` splices in an expression defined earlier in the same file.

use std::fmt;
use std::sync::Arc;

use super::{Attachment, GraphRef, Node, PointSpec, SeqFamily, SpaceExpr, Subcomplex};
use crate::graph::{MultiGraph, Rational};
use crate::syntax::{ParseError, SExpr};

/// Names visible to an expression.
#[derive(Debug, Clone, Copy, Default)]
pub struct Scope<'a> {
    pub graphs: &'a [(String, Arc<MultiGraph>)],
    pub exprs: &'a [(String, SpaceExpr)],
}

impl Scope<'_> {
    fn graph(&self, s: &SExpr) -> Result<GraphRef, ParseError> {
        let name = s.as_atom()?;
        self.graphs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(n, g)| GraphRef { name: n.clone(), graph: g.clone() })
            .ok_or_else(|| s.error(format!("unknown graph `{name}`")))
    }
}

fn arity(s: &SExpr, args: &[SExpr], n: usize) -> Result<(), ParseError> {
    if args.len() == n {
        Ok(())
    } else {
        Err(s.error(format!("expected {n} argument(s), found {}", args.len())))
    }
}

/// `(vertex ID)` or `(edge ID NUM/DEN)`.
pub fn parse_point(s: &SExpr) -> Result<PointSpec, ParseError> {
    let (head, args) = s.as_form()?;
    match head {
        "vertex" => {
            arity(s, args, 1)?;
            Ok(PointSpec::Vertex(args[0].as_atom()?.to_owned()))
        }
        "edge" => {
            arity(s, args, 2)?;
            let t: Rational = args[1].as_atom()?.parse().map_err(|_| args[1].error("expected a rational NUM/DEN"))?;
            if t < Rational::from_integer(0) || t > Rational::from_integer(1) {
                return Err(args[1].error("edge parameter outside [0, 1]"));
            }
            Ok(PointSpec::Edge(args[0].as_atom()?.to_owned(), t))
        }
        other => Err(s.error(format!("expected `vertex` or `edge`, found `{other}`"))),
    }
}

fn check_point(s: &SExpr, e: &SpaceExpr, p: &PointSpec) -> Result<(), ParseError> {
    if let SpaceExpr::Node(n) = e {
        p.resolve(&n.base.graph).map_err(|err| s.error(err.to_string()))?;
    }
    Ok(())
}

pub fn parse_expr(s: &SExpr, scope: &Scope) -> Result<SpaceExpr, ParseError> {
    let (head, args) = s.as_form()?;
    match head {
        "graph" => {
            arity(s, args, 1)?;
            let base = scope.graph(&args[0])?;
            base.graph.ensure_connected().map_err(|_| args[0].error(format!("graph `{}` is not connected", base.name)))?;
            Ok(SpaceExpr::Node(Node { base, attachments: Vec::new(), families: Vec::new() }))
        }
        "selfwild" | "zerodimwild" => {
            arity(s, args, 0)?;
            Ok(if head == "selfwild" { SpaceExpr::SelfWild } else { SpaceExpr::ZeroDimWild })
        }
        "ref" => {
            arity(s, args, 1)?;
            let name = args[0].as_atom()?;
            scope
                .exprs
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, e)| e.clone())
                .ok_or_else(|| args[0].error(format!("unknown expression `{name}`")))
        }
        "node" => {
            let Some(first) = args.first() else {
                return Err(s.error("node needs a (base G) form"));
            };
            let (h, b) = first.as_form()?;
            if h != "base" {
                return Err(first.error("node needs a (base G) form first"));
            }
            arity(first, b, 1)?;
            let base = scope.graph(&b[0])?;
            let g = base.graph.clone();
            g.ensure_connected().map_err(|_| b[0].error(format!("graph `{}` is not connected", base.name)))?;
            let mut node = Node { base, attachments: Vec::new(), families: Vec::new() };
            for item in &args[1..] {
                let (h, a) = item.as_form()?;
                arity(item, a, 3)?;
                match h {
                    "attach" if node.families.is_empty() => {
                        let at = parse_point(&a[0])?;
                        check_point(&a[0], &SpaceExpr::Node(Node { base: node.base.clone(), attachments: vec![], families: vec![] }), &at)?;
                        let child = parse_expr(&a[1], scope)?;
                        let anchor = parse_point(&a[2])?;
                        check_point(&a[2], &child, &anchor)?;
                        node.attachments.push(Attachment { at, child, anchor });
                    }
                    "attach" => return Err(item.error("attachments must precede sequence families")),
                    "seqfam" => {
                        let names: Vec<&str> = a[0].as_list()?.iter().map(SExpr::as_atom).collect::<Result<_, _>>()?;
                        if names.is_empty() {
                            return Err(a[0].error("empty support"));
                        }
                        let support = Subcomplex::from_names(&g, &names).map_err(|e| a[0].error(e.to_string()))?;
                        let pattern = parse_expr(&a[1], scope)?;
                        let anchor = parse_point(&a[2])?;
                        check_point(&a[2], &pattern, &anchor)?;
                        node.families.push(SeqFamily { support, pattern, anchor });
                    }
                    other => return Err(item.error(format!("expected `attach` or `seqfam`, found `{other}`"))),
                }
            }
            Ok(SpaceExpr::Node(node))
        }
        other => Err(s.error(format!("unknown expression form `{other}`"))),
    }
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::SelfWild => f.write_str("(selfwild)"),
            SpaceExpr::ZeroDimWild => f.write_str("(zerodimwild)"),
            SpaceExpr::Node(n) if n.attachments.is_empty() && n.families.is_empty() => write!(f, "(graph {})", n.base.name),
            SpaceExpr::Node(n) => {
                write!(f, "(node (base {})", n.base.name)?;
                for a in &n.attachments {
                    write!(f, " (attach {} {} {})", a.at, a.child, a.anchor)?;
                }
                for s in &n.families {
                    let names: Vec<&str> = s.support.names().collect();
                    write!(f, " (seqfam ({}) {} {})", names.join(" "), s.pattern, s.anchor)?;
                }
                f.write_str(")")
            }
        }
    }
}
