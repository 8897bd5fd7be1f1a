use num_traits::{One, Zero};

use super::{EdgeId, GraphError, GraphPoint, MultiGraph, PLPath, Rational, Step, UnionFind, VertexId};

/// A maximal cycle-free edge subset, rooted at the smallest vertex of each tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningForest {
    in_forest: Vec<bool>,
    parent: Vec<Option<(VertexId, EdgeId)>>,
    depth: Vec<usize>,
}

/// Kruskal's algorithm with edges taken in id order. Loops never enter.
pub fn spanning_forest(g: &MultiGraph) -> SpanningForest {
    let mut uf = UnionFind::new(g.vertex_count());
    let mut in_forest = vec![false; g.edge_count()];
    for e in g.edge_ids() {
        let [a, b] = g.edge(e).ends;
        if uf.union(a.0, b.0) {
            in_forest[e.0] = true;
        }
    }
    // root every tree at its smallest vertex and record parents breadth-first
    let n = g.vertex_count();
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    for root in g.vertices() {
        if seen[root.0] {
            continue;
        }
        seen[root.0] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &e in g.incident(u) {
                if !in_forest[e.0] {
                    continue;
                }
                let w = g.edge(e).other(u);
                if !seen[w.0] {
                    seen[w.0] = true;
                    parent[w.0] = Some((u, e));
                    depth[w.0] = depth[u.0] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    SpanningForest { in_forest, parent, depth }
}

impl SpanningForest {
    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.in_forest[e.0]
    }

    pub fn edges(&self) -> Vec<EdgeId> {
        self.in_forest.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| EdgeId(i)).collect()
    }

    pub fn non_forest_edges(&self) -> Vec<EdgeId> {
        self.in_forest.iter().enumerate().filter(|(_, &b)| !b).map(|(i, _)| EdgeId(i)).collect()
    }

    /// Whether the point lies on the forest (every vertex does).
    pub fn contains_point(&self, p: &GraphPoint) -> bool {
        match p {
            GraphPoint::Vertex(_) => true,
            GraphPoint::Edge { edge, .. } => self.in_forest[edge.0],
        }
    }

    /// Vertex-level path from `u` to `v` as oriented steps, or `None` across trees.
    fn vertex_steps(&self, g: &MultiGraph, u: VertexId, v: VertexId) -> Option<Vec<Step>> {
        let (mut a, mut b) = (u, v);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while self.depth[a.0] > self.depth[b.0] {
            let (p, e) = self.parent[a.0]?;
            up.push(step_between(g, e, a, p));
            a = p;
        }
        while self.depth[b.0] > self.depth[a.0] {
            let (p, e) = self.parent[b.0]?;
            down.push(step_between(g, e, p, b));
            b = p;
        }
        while a != b {
            let (pa, ea) = self.parent[a.0]?;
            let (pb, eb) = self.parent[b.0]?;
            up.push(step_between(g, ea, a, pa));
            down.push(step_between(g, eb, pb, b));
            a = pa;
            b = pb;
        }
        up.extend(down.into_iter().rev());
        Some(up)
    }

    fn vertex_distance(&self, g: &MultiGraph, u: VertexId, v: VertexId) -> Option<usize> {
        self.vertex_steps(g, u, v).map(|s| s.len())
    }
}

fn step_between(g: &MultiGraph, e: EdgeId, from: VertexId, to: VertexId) -> Step {
    let rec = g.edge(e);
    Step { edge: e, from: rec.param_of(from).unwrap(), to: rec.param_of(to).unwrap() }
}

/// Candidate exits of a point towards the vertex set: `(vertex, cost, step to it)`.
fn exits(g: &MultiGraph, p: &GraphPoint) -> Vec<(VertexId, Rational, Option<Step>)> {
    match *p {
        GraphPoint::Vertex(v) => vec![(v, Rational::zero(), None)],
        GraphPoint::Edge { edge, t } => {
            let [a, b] = g.edge(edge).ends;
            vec![
                (a, t, Some(Step { edge, from: t, to: Rational::zero() })),
                (b, Rational::one() - t, Some(Step { edge, from: t, to: Rational::one() })),
            ]
        }
    }
}

/// The unique reduced path from `p` to `q` inside the forest.
pub fn tree_path(g: &MultiGraph, forest: &SpanningForest, p: GraphPoint, q: GraphPoint) -> Result<PLPath, GraphError> {
    if !forest.contains_point(&p) || !forest.contains_point(&q) {
        return Err(GraphError::OffForest);
    }
    if p.component(g) != q.component(g) {
        return Err(GraphError::DifferentComponents);
    }
    if p == q {
        return Ok(PLPath::constant(p));
    }
    if let (GraphPoint::Edge { edge: e, t }, GraphPoint::Edge { edge: f, t: s }) = (p, q) {
        if e == f {
            return Ok(PLPath::from_steps(g, p, [Step { edge: e, from: t, to: s }]));
        }
    }
    // The geodesic in a tree is the reduced path; pick the cheapest exit pair.
    type Route = (Rational, Option<Step>, VertexId, VertexId, Option<Step>);
    let mut best: Option<Route> = None;
    for (pv, pc, ps) in exits(g, &p) {
        for (qv, qc, qs) in exits(g, &q) {
            let d = forest.vertex_distance(g, pv, qv).ok_or(GraphError::DifferentComponents)?;
            let cost = pc + qc + Rational::from_integer(d as i64);
            if best.as_ref().is_none_or(|b| cost < b.0) {
                best = Some((cost, ps, pv, qv, qs));
            }
        }
    }
    let (_, ps, pv, qv, qs) = best.expect("at least one exit pair");
    let mut path = PLPath::constant(p);
    if let Some(s) = ps {
        path.push(g, s);
    }
    for s in forest.vertex_steps(g, pv, qv).expect("same tree") {
        path.push(g, s);
    }
    if let Some(s) = qs {
        path.push(g, s.reversed());
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{fixtures, GraphSpec};

    #[test]
    fn tree_keeps_all_edges() {
        let g = fixtures::path(5);
        assert_eq!(spanning_forest(&g).edges().len(), 4);
    }

    #[test]
    fn triangle_drops_last_edge() {
        let g = fixtures::cycle(3);
        let f = spanning_forest(&g);
        assert_eq!(f.edges(), vec![EdgeId(0), EdgeId(1)]);
        assert_eq!(f.non_forest_edges(), vec![EdgeId(2)]);
    }

    #[test]
    fn loops_never_enter() {
        let g = GraphSpec::new().vertex("v").vertex("w").edge("l", "v", "v").edge("e", "v", "w").build().unwrap();
        let f = spanning_forest(&g);
        assert_eq!(f.edges(), vec![EdgeId(1)]);
    }

    #[test]
    fn path_through_middle() {
        let g = fixtures::path(3);
        let f = spanning_forest(&g);
        let p = tree_path(&g, &f, GraphPoint::Vertex(VertexId(0)), GraphPoint::Vertex(VertexId(2))).unwrap();
        assert_eq!(p.length(), Rational::from_integer(2));
        assert_eq!(p.eval(&g, Rational::new(1, 2)), GraphPoint::Vertex(VertexId(1)));
    }

    #[test]
    fn mid_edge_to_far_endpoint() {
        let g = fixtures::path(3);
        let f = spanning_forest(&g);
        let p = GraphPoint::Edge { edge: EdgeId(0), t: Rational::new(1, 2) };
        let path = tree_path(&g, &f, p, GraphPoint::Vertex(VertexId(2))).unwrap();
        assert_eq!(path.length(), Rational::new(3, 2));
        assert!(path.is_reduced());
        let back = tree_path(&g, &f, GraphPoint::Vertex(VertexId(2)), p).unwrap();
        assert_eq!(back, path.reversed());
    }

    #[test]
    fn identical_points_give_constant_path() {
        let g = fixtures::path(3);
        let f = spanning_forest(&g);
        let p = GraphPoint::Edge { edge: EdgeId(1), t: Rational::new(1, 3) };
        assert!(tree_path(&g, &f, p, p).unwrap().is_constant());
    }

    #[test]
    fn different_components_error() {
        let g = GraphSpec::new().vertex("a").vertex("b").build().unwrap();
        let f = spanning_forest(&g);
        assert_eq!(
            tree_path(&g, &f, GraphPoint::Vertex(VertexId(0)), GraphPoint::Vertex(VertexId(1))),
            Err(GraphError::DifferentComponents)
        );
    }
}
