use std::collections::VecDeque;

use num_traits::ToPrimitive;

use super::{EdgeId, GraphPoint, MultiGraph, VertexId};

/// Floating-point image of a [`GraphPoint`], for distance sampling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FloatPoint {
    Vertex(VertexId),
    OnEdge(EdgeId, f64),
}

impl From<GraphPoint> for FloatPoint {
    fn from(p: GraphPoint) -> Self {
        match p {
            GraphPoint::Vertex(v) => FloatPoint::Vertex(v),
            GraphPoint::Edge { edge, t } => FloatPoint::OnEdge(edge, t.to_f64().unwrap_or(0.0)),
        }
    }
}

/// Path metric of the unit-length realization.
#[derive(Debug, Clone)]
pub struct PathMetric {
    ends: Vec<[usize; 2]>,
    dist: Vec<Vec<f64>>,
}

impl PathMetric {
    pub fn new(g: &MultiGraph) -> Self {
        let n = g.vertex_count();
        let mut dist = vec![vec![f64::INFINITY; n]; n];
        for (s, row) in dist.iter_mut().enumerate() {
            row[s] = 0.0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &e in g.incident(VertexId(u)) {
                    let w = g.edge(e).other(VertexId(u)).0;
                    if row[w].is_infinite() {
                        row[w] = row[u] + 1.0;
                        queue.push_back(w);
                    }
                }
            }
        }
        let ends = g.edges().iter().map(|e| [e.ends[0].0, e.ends[1].0]).collect();
        PathMetric { ends, dist }
    }

    fn to_vertex(&self, p: FloatPoint, v: usize) -> f64 {
        match p {
            FloatPoint::Vertex(u) => self.dist[u.0][v],
            FloatPoint::OnEdge(e, t) => {
                let [a, b] = self.ends[e.0];
                (t + self.dist[a][v]).min(1.0 - t + self.dist[b][v])
            }
        }
    }

    pub fn distance(&self, p: FloatPoint, q: FloatPoint) -> f64 {
        match (p, q) {
            (FloatPoint::Vertex(u), _) => self.to_vertex(q, u.0),
            (_, FloatPoint::Vertex(v)) => self.to_vertex(p, v.0),
            (FloatPoint::OnEdge(e, t), FloatPoint::OnEdge(f, s)) => {
                let [a, b] = self.ends[e.0];
                let via = (t + self.to_vertex(q, a)).min(1.0 - t + self.to_vertex(q, b));
                if e == f {
                    via.min((t - s).abs())
                } else {
                    via
                }
            }
        }
    }

    pub fn point_distance(&self, p: GraphPoint, q: GraphPoint) -> f64 {
        self.distance(p.into(), q.into())
    }
}
