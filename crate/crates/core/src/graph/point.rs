use std::fmt;

use num_traits::{One, Zero};

use super::{EdgeId, GraphError, MultiGraph, Rational, VertexId};

/// A point of the geometric realization, in canonical form.
///
/// Edge parameters are strictly inside `(0, 1)`; the endpoints of an edge are
/// always represented by the [`GraphPoint::Vertex`] variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphPoint {
    Vertex(VertexId),
    Edge { edge: EdgeId, t: Rational },
}

impl GraphPoint {
    /// Point at parameter `t` on `edge`, normalized.
    pub fn on_edge(g: &MultiGraph, edge: EdgeId, t: Rational) -> Result<Self, GraphError> {
        if t < Rational::zero() || t > Rational::one() {
            return Err(GraphError::ParameterOutOfRange(t));
        }
        Ok(Self::at(g, edge, t))
    }

    /// Like [`GraphPoint::on_edge`] but panics on an out-of-range parameter.
    pub fn at(g: &MultiGraph, edge: EdgeId, t: Rational) -> Self {
        let rec = g.edge(edge);
        if t.is_zero() {
            GraphPoint::Vertex(rec.ends[0])
        } else if t.is_one() {
            GraphPoint::Vertex(rec.ends[1])
        } else {
            assert!(t > Rational::zero() && t < Rational::one(), "edge parameter out of range");
            GraphPoint::Edge { edge, t }
        }
    }

    pub fn as_vertex(&self) -> Option<VertexId> {
        match self {
            GraphPoint::Vertex(v) => Some(*v),
            GraphPoint::Edge { .. } => None,
        }
    }

    /// Parameter of this point along `edge`, if it lies on the closed edge.
    ///
    /// For a loop endpoint this returns `0`.
    pub fn param_on(&self, g: &MultiGraph, edge: EdgeId) -> Option<Rational> {
        match *self {
            GraphPoint::Edge { edge: e, t } => (e == edge).then_some(t),
            GraphPoint::Vertex(v) => g.edge(edge).param_of(v),
        }
    }

    /// Component index of the point.
    pub fn component(&self, g: &MultiGraph) -> usize {
        match *self {
            GraphPoint::Vertex(v) => g.component_of(v),
            GraphPoint::Edge { edge, .. } => g.component_of(g.edge(edge).ends[0]),
        }
    }

    pub fn display<'a>(&'a self, g: &'a MultiGraph) -> impl fmt::Display + 'a {
        PointDisplay { p: self, g }
    }
}

struct PointDisplay<'a> {
    p: &'a GraphPoint,
    g: &'a MultiGraph,
}

impl fmt::Display for PointDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self.p {
            GraphPoint::Vertex(v) => write!(f, "(vertex {})", self.g.vertex_name(v)),
            GraphPoint::Edge { edge, t } => write!(f, "(edge {} {})", self.g.edge_name(edge), t),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn endpoints_normalize_to_vertices() {
        let g = fixtures::path(2);
        let e = EdgeId(0);
        assert_eq!(GraphPoint::on_edge(&g, e, q(0, 1)).unwrap(), GraphPoint::Vertex(VertexId(0)));
        assert_eq!(GraphPoint::on_edge(&g, e, q(1, 1)).unwrap(), GraphPoint::Vertex(VertexId(1)));
        assert!(matches!(GraphPoint::on_edge(&g, e, q(1, 3)).unwrap(), GraphPoint::Edge { .. }));
        assert!(GraphPoint::on_edge(&g, e, q(4, 3)).is_err());
    }

    #[test]
    fn loop_endpoints_collapse_to_one_vertex() {
        let g = fixtures::figure_eight();
        let a = GraphPoint::at(&g, EdgeId(0), q(0, 1));
        let b = GraphPoint::at(&g, EdgeId(0), q(1, 1));
        assert_eq!(a, b);
    }

    #[test]
    fn display_uses_names() {
        let g = fixtures::path(2);
        let p = GraphPoint::at(&g, EdgeId(0), q(1, 3));
        assert_eq!(p.display(&g).to_string(), "(edge q1 1/3)");
    }
}
