use num_integer::Integer;
use num_traits::{One, Zero};

use crate::graph::{EdgeId, GraphError, GraphPoint, MultiGraph, PLPath, Rational, Step, VertexId};

/// Arclength coordinates on a graph that is a single cycle.
///
/// The cycle is traversed from its smallest vertex along its smallest incident
/// edge. Position `s ∈ [0, L)` is measured in that direction, `L` being the
/// number of edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleEmbedding {
    /// `(edge, forward)` in traversal order; `forward` means parameter increases.
    steps: Vec<(EdgeId, bool)>,
    edge_slot: Vec<Option<usize>>,
    vertex_pos: Vec<Option<usize>>,
}

impl CycleEmbedding {
    pub fn new(g: &MultiGraph) -> Result<Self, GraphError> {
        if g.edge_count() == 0 || !g.is_connected() || g.vertices().any(|v| g.degree(v) != 2) {
            return Err(GraphError::NotACycle);
        }
        let start = VertexId(0);
        let mut steps = Vec::with_capacity(g.edge_count());
        let mut edge_slot = vec![None; g.edge_count()];
        let mut vertex_pos = vec![None; g.vertex_count()];
        let mut at = start;
        let mut prev: Option<EdgeId> = None;
        loop {
            vertex_pos[at.0] = Some(steps.len());
            let e = *g
                .incident(at)
                .iter()
                .find(|&&e| Some(e) != prev && edge_slot[e.0].is_none())
                .ok_or(GraphError::NotACycle)?;
            let rec = g.edge(e);
            let forward = rec.ends[0] == at;
            edge_slot[e.0] = Some(steps.len());
            steps.push((e, forward));
            at = rec.other(at);
            prev = Some(e);
            if at == start {
                break;
            }
        }
        if steps.len() != g.edge_count() {
            return Err(GraphError::NotACycle);
        }
        Ok(CycleEmbedding { steps, edge_slot, vertex_pos })
    }

    pub fn length(&self) -> Rational {
        Rational::from_integer(self.steps.len() as i64)
    }

    pub fn half_length(&self) -> Rational {
        Rational::new(self.steps.len() as i64, 2)
    }

    pub fn steps(&self) -> &[(EdgeId, bool)] {
        &self.steps
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edge_slot.get(e.0).copied().flatten().is_some()
    }

    /// Slot and direction of an edge on the cycle.
    pub fn slot(&self, e: EdgeId) -> Option<(usize, bool)> {
        self.edge_slot.get(e.0).copied().flatten().map(|k| (k, self.steps[k].1))
    }

    /// Position in `[0, L)` of a point of the cycle.
    pub fn position(&self, p: &GraphPoint) -> Option<Rational> {
        match *p {
            GraphPoint::Vertex(v) => self.vertex_pos.get(v.0).copied().flatten().map(|k| Rational::from_integer(k as i64)),
            GraphPoint::Edge { edge, t } => {
                let (k, fwd) = self.slot(edge)?;
                let local = if fwd { t } else { Rational::one() - t };
                Some(Rational::from_integer(k as i64) + local)
            }
        }
    }

    /// `s mod L`, in `[0, L)`.
    pub fn wrap(&self, s: Rational) -> Rational {
        let l = self.length();
        let k = (s / l).floor();
        s - k * l
    }

    fn param(&self, k: usize, local: Rational) -> Rational {
        if self.steps[k].1 {
            local
        } else {
            Rational::one() - local
        }
    }

    pub fn point_at(&self, g: &MultiGraph, s: Rational) -> GraphPoint {
        let s = self.wrap(s);
        let k = s.floor().to_integer() as usize;
        let local = s - Rational::from_integer(k as i64);
        GraphPoint::at(g, self.steps[k].0, self.param(k, local))
    }

    /// The arc of length `distance` starting at position `from`.
    pub fn arc(&self, g: &MultiGraph, from: Rational, distance: Rational, forward: bool) -> PLPath {
        let n = self.steps.len();
        let mut path = PLPath::constant(self.point_at(g, from));
        let mut p = self.wrap(from);
        let mut remaining = distance;
        while remaining > Rational::zero() {
            if forward {
                let k = p.floor().to_integer() as usize % n;
                let local = p - p.floor();
                let m = remaining.min(Rational::one() - local);
                path.push(g, Step { edge: self.steps[k].0, from: self.param(k, local), to: self.param(k, local + m) });
                p = self.wrap(p + m);
                remaining -= m;
            } else {
                let top = if p.is_integer() { p } else { p.floor() + Rational::one() };
                let k = (top.to_integer() - 1).mod_floor(&(n as i64)) as usize;
                let local = p - (top - Rational::one());
                let local = if local.is_zero() { Rational::one() } else { local };
                let m = remaining.min(local);
                path.push(g, Step { edge: self.steps[k].0, from: self.param(k, local), to: self.param(k, local - m) });
                p = self.wrap(p - m);
                remaining -= m;
            }
        }
        path
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{fixtures, GraphSpec};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn positions_round_trip() {
        let g = fixtures::cycle(4);
        let c = CycleEmbedding::new(&g).unwrap();
        for k in 0..16 {
            let s = q(k, 4);
            let p = c.point_at(&g, s);
            assert_eq!(c.position(&p), Some(s));
        }
    }

    #[test]
    fn reversed_edges_are_handled() {
        // c0 -> c1 along d0, then d1 stored as (c2, c1)
        let g = GraphSpec::new()
            .vertex("c0")
            .vertex("c1")
            .vertex("c2")
            .edge("d0", "c0", "c1")
            .edge("d1", "c2", "c1")
            .edge("d2", "c2", "c0")
            .build()
            .unwrap();
        let c = CycleEmbedding::new(&g).unwrap();
        assert_eq!(c.steps(), &[(EdgeId(0), true), (EdgeId(1), false), (EdgeId(2), true)]);
        let p = GraphPoint::Edge { edge: EdgeId(1), t: q(1, 4) };
        assert_eq!(c.position(&p), Some(q(7, 4)));
    }

    #[test]
    fn single_loop_is_a_cycle() {
        let g = GraphSpec::new().vertex("v").edge("l", "v", "v").build().unwrap();
        let c = CycleEmbedding::new(&g).unwrap();
        assert_eq!(c.length(), q(1, 1));
        let arc = c.arc(&g, q(3, 4), q(1, 2), true);
        assert_eq!(arc.end(), GraphPoint::Edge { edge: EdgeId(0), t: q(1, 4) });
        assert_eq!(arc.length(), q(1, 2));
    }

    #[test]
    fn arcs_wrap_both_ways() {
        let g = fixtures::cycle(3);
        let c = CycleEmbedding::new(&g).unwrap();
        let fwd = c.arc(&g, q(5, 2), q(3, 2), true);
        assert_eq!(fwd.end(), c.point_at(&g, q(4, 1)));
        assert_eq!(fwd.length(), q(3, 2));
        let back = c.arc(&g, q(1, 2), q(3, 2), false);
        assert_eq!(back.end(), c.point_at(&g, q(2, 1)));
        assert!(back.is_well_formed(&g));
        let from_vertex = c.arc(&g, q(0, 1), q(1, 2), false);
        assert_eq!(from_vertex.end(), c.point_at(&g, q(5, 2)));
    }

    #[test]
    fn non_cycles_rejected() {
        assert!(CycleEmbedding::new(&fixtures::path(3)).is_err());
        assert!(CycleEmbedding::new(&fixtures::figure_eight()).is_err());
        assert!(CycleEmbedding::new(&fixtures::point()).is_err());
    }
}
