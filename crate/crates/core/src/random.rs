//! Random connected multigraphs and random stable expressions, for property
//! tests and benchmarks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{GraphSpec, MultiGraph};
use crate::wild::{is_w_stable, PointSpec, SeqFamily, SpaceExpr, Subcomplex};

/// A connected multigraph with at most `max_edges` edges; loops and
/// parallel edges allowed.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, max_edges: usize) -> MultiGraph {
    let n = rng.random_range(1..=(max_edges + 1).min(8));
    let mut spec = GraphSpec::new();
    for i in 0..n {
        spec = spec.vertex(format!("v{i}"));
    }
    let mut m = 0;
    for i in 1..n {
        let j = rng.random_range(0..i);
        spec = spec.edge(format!("e{m}"), format!("v{j}"), format!("v{i}"));
        m += 1;
    }
    let extra = rng.random_range(0..=(max_edges - (n - 1)).min(4));
    for _ in 0..extra {
        let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
        spec = spec.edge(format!("e{m}"), format!("v{a}"), format!("v{b}"));
        m += 1;
    }
    spec.build().expect("generated graph is valid")
}

struct Gen<'a, R: ?Sized> {
    rng: &'a mut R,
    next: usize,
}

impl<R: Rng + ?Sized> Gen<'_, R> {
    fn graph(&mut self) -> SpaceExpr {
        self.next += 1;
        SpaceExpr::graph(format!("g{}", self.next), Arc::new(random_graph(self.rng, 4)))
    }

    fn vertex_of(&mut self, e: &SpaceExpr) -> PointSpec {
        let g = &e.as_node().unwrap().base.graph;
        let v = self.rng.random_range(0..g.vertex_count());
        PointSpec::Vertex(format!("v{v}"))
    }

    fn support(&mut self, g: &MultiGraph) -> Subcomplex {
        match self.rng.random_range(0..3) {
            0 => Subcomplex::whole(g),
            1 if g.edge_count() > 0 => {
                let e = g.edge_ids().nth(self.rng.random_range(0..g.edge_count())).unwrap();
                Subcomplex::from_ids(g, &[], &[e])
            }
            _ => {
                let v = g.vertices().nth(self.rng.random_range(0..g.vertex_count())).unwrap();
                Subcomplex::from_ids(g, &[v], &[])
            }
        }
    }

    fn expr(&mut self, depth: usize) -> SpaceExpr {
        let mut e = self.graph();
        if depth == 0 {
            return e;
        }
        if self.rng.random_bool(0.3) {
            let child = self.expr(depth - 1);
            let anchor = self.vertex_of(&child);
            let at = self.vertex_of(&e);
            e = e.attach(at, child, anchor);
        }
        for _ in 0..self.rng.random_range(1..=2) {
            let g = e.as_node().unwrap().base.graph.clone();
            let support = self.support(&g);
            let pattern = self.expr(depth - 1);
            let pg = pattern.as_node().unwrap().base.graph.clone();
            let mut anchors: Vec<usize> = (0..pg.vertex_count()).collect();
            anchors.shuffle(self.rng);
            let stable = anchors.into_iter().map(|v| PointSpec::Vertex(format!("v{v}"))).find_map(|anchor| {
                let mut cand = e.clone();
                if let SpaceExpr::Node(n) = &mut cand {
                    n.families.push(SeqFamily { support: support.clone(), pattern: pattern.clone(), anchor });
                }
                is_w_stable(&cand).stable.then_some(cand)
            });
            if let Some(c) = stable {
                e = c;
            }
        }
        e
    }
}

/// A stable, atom-free expression of nesting depth at most `depth`.
pub fn random_expr<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> SpaceExpr {
    Gen { rng, next: 0 }.expr(depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn graphs_are_connected_and_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let g = random_graph(&mut rng, 20);
            assert!(g.is_connected());
            assert!(g.edge_count() <= 20);
        }
    }

    #[test]
    fn expressions_are_stable() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for d in 0..=4 {
            for _ in 0..10 {
                let e = random_expr(&mut rng, d);
                assert!(e.depth() <= d);
                assert!(is_w_stable(&e).stable, "{e}");
            }
        }
    }
}
