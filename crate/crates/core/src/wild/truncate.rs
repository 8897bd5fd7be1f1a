//! Finite graph approximations: every sequence family is replaced by its
//! first few copies.

use std::collections::BTreeMap;

use super::{PointSpec, SpaceExpr, WildError};
use crate::graph::{build_graph, EdgeId, GraphPoint, GraphSpec, MultiGraph, Rational, UnionFind};

#[derive(Default)]
struct Builder {
    vertices: Vec<String>,
    edges: Vec<(String, usize, usize)>,
    glue: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, name: String) -> usize {
        self.vertices.push(name);
        self.vertices.len() - 1
    }

    /// Emits `e` under `prefix` and returns the vertex at `anchor`.
    fn emit(&mut self, e: &SpaceExpr, prefix: &str, depth: usize, anchor: Option<&PointSpec>) -> Result<Option<usize>, WildError> {
        let SpaceExpr::Node(n) = e else {
            return Err(WildError::Atom);
        };
        let g = &*n.base.graph;

        // where each copy goes: support vertices, then support edges, round-robin
        let mut slots: Vec<Vec<GraphPoint>> = Vec::new();
        for f in &n.families {
            let (vs, es) = f.support.ids(g)?;
            let s = vs.len() + es.len();
            let per_edge = |j: usize| (0..depth).filter(|k| k % s == vs.len() + j).count();
            let points = (0..depth)
                .map(|k| {
                    let slot = k % s;
                    if slot < vs.len() {
                        GraphPoint::Vertex(vs[slot])
                    } else {
                        let j = slot - vs.len();
                        let t = Rational::new((k / s + 1) as i64, (per_edge(j) + 1) as i64);
                        GraphPoint::at(g, es[j], t)
                    }
                })
                .collect();
            slots.push(points);
        }
        let attach_at: Vec<GraphPoint> = n.attachments.iter().map(|a| a.at.resolve(g)).collect::<Result<_, _>>()?;
        let anchor_pt = anchor.map(|a| a.resolve(g)).transpose()?;

        let mut cuts: BTreeMap<EdgeId, Vec<Rational>> = BTreeMap::new();
        for p in slots.iter().flatten().chain(&attach_at).chain(anchor_pt.iter()) {
            if let GraphPoint::Edge { edge, t } = p {
                cuts.entry(*edge).or_default().push(*t);
            }
        }
        let base: Vec<usize> = g.vertices().map(|v| self.vertex(format!("{prefix}{}", g.vertex_name(v)))).collect();
        let mut cut_vertex: BTreeMap<(EdgeId, Rational), usize> = BTreeMap::new();
        for e in g.edge_ids() {
            let name = format!("{prefix}{}", g.edge_name(e));
            let mut ts = cuts.remove(&e).unwrap_or_default();
            ts.sort();
            ts.dedup();
            let [a, b] = g.edge(e).ends;
            let mut prev = base[a.0];
            for (k, t) in ts.iter().enumerate() {
                let v = self.vertex(format!("{name}'v{}", k + 1));
                cut_vertex.insert((e, *t), v);
                let seg = if k == 0 { name.clone() } else { format!("{name}'{k}") };
                self.edges.push((seg, prev, v));
                prev = v;
            }
            let last = if ts.is_empty() { name } else { format!("{name}'{}", ts.len()) };
            self.edges.push((last, prev, base[b.0]));
        }
        let at = |p: &GraphPoint| match p {
            GraphPoint::Vertex(v) => base[v.0],
            GraphPoint::Edge { edge, t } => cut_vertex[&(*edge, *t)],
        };

        for (j, (a, p)) in n.attachments.iter().zip(&attach_at).enumerate() {
            let child = self.emit(&a.child, &format!("{prefix}a{}'", j + 1), depth, Some(&a.anchor))?.unwrap();
            self.glue.push((at(p), child));
        }
        for (i, (f, points)) in n.families.iter().zip(&slots).enumerate() {
            for (k, p) in points.iter().enumerate() {
                let copy = self.emit(&f.pattern, &format!("{prefix}s{}'{}'", i + 1, k + 1), depth, Some(&f.anchor))?.unwrap();
                self.glue.push((at(p), copy));
            }
        }
        Ok(anchor_pt.as_ref().map(at))
    }

    fn finish(self) -> Result<MultiGraph, WildError> {
        let mut uf = UnionFind::new(self.vertices.len());
        for (a, b) in &self.glue {
            uf.union(*a, *b);
        }
        // each class is named after its first vertex
        let mut rep = vec![usize::MAX; self.vertices.len()];
        for v in 0..self.vertices.len() {
            let r = uf.find(v);
            rep[r] = rep[r].min(v);
        }
        let mut spec = GraphSpec::new();
        for v in 0..self.vertices.len() {
            if rep[uf.find(v)] == v {
                spec.vertices.push(self.vertices[v].clone());
            }
        }
        for (name, a, b) in &self.edges {
            let a = &self.vertices[rep[uf.find(*a)]];
            let b = &self.vertices[rep[uf.find(*b)]];
            spec.edges.push((name.clone(), a.clone(), b.clone()));
        }
        Ok(build_graph(&spec)?)
    }
}

/// Replaces every sequence family by `depth` copies of its pattern,
/// recursively, attached at evenly spaced points of the support.
///
/// Generated names use `'` as a separator. Fails on atoms.
pub fn truncate(e: &SpaceExpr, depth: usize) -> Result<MultiGraph, WildError> {
    e.validate()?;
    let mut b = Builder::default();
    b.emit(e, "", depth, None)?;
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::super::examples::*;
    use super::*;
    use crate::graph::{fixtures, tc_graph};
    use std::sync::Arc;

    #[test]
    fn plain_graph_is_unchanged() {
        let g = Arc::new(fixtures::theta());
        let e = SpaceExpr::graph("T", g.clone());
        assert_eq!(truncate(&e, 5).unwrap(), *g);
    }

    #[test]
    fn earring_becomes_a_bouquet() {
        let g = truncate(&earring(), 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.betti1()), (1, 3, 3));
    }

    #[test]
    fn nested_betti_number() {
        let g = truncate(&nested_rank3(), 2).unwrap();
        assert_eq!(g.betti1(), 6);
        assert!(g.is_connected());
    }

    #[test]
    fn copies_on_edges_subdivide() {
        let g = truncate(&wild_circle(), 5).unwrap();
        // three vertex slots take three copies, the two edge copies cut edges
        assert_eq!(g.betti1(), 6);
        assert_eq!(g.vertex_count(), 5);
        assert!(g.edge_by_name("d0'1").is_some());
    }

    #[test]
    fn interior_anchor() {
        let c = Arc::new(fixtures::cycle(2));
        let a = PointSpec::Edge("d0".into(), Rational::new(1, 3));
        let e = SpaceExpr::graph("B", Arc::new(fixtures::path(2))).attach(PointSpec::Vertex("p1".into()), SpaceExpr::graph("C", c), a);
        let g = truncate(&e, 1).unwrap();
        assert_eq!(g.betti1(), 1);
        assert_eq!(g.vertex_count(), 4);
    }

    #[test]
    fn atoms_rejected() {
        assert_eq!(truncate(&SpaceExpr::SelfWild, 2), Err(WildError::Atom));
    }

    #[test]
    fn monotone_in_depth() {
        let mut last = 0;
        for n in 0..6 {
            let g = truncate(&wild_figure_eight(), n).unwrap();
            assert!(g.betti1() >= last);
            last = g.betti1();
            assert!(tc_graph(&g).unwrap() <= 4);
        }
    }
}
