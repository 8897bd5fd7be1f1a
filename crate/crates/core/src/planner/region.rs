//! Exactly decidable subsets of `G × G`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;

use super::cycle::CycleEmbedding;
use crate::graph::{CollapseHomotopy, EdgeId, GraphPoint, MultiGraph, Rational, SpanningForest, VertexId};

/// Parameters drawn by the samplers have this denominator.
pub const SAMPLE_DENOM: i64 = 1 << 20;

/// One cell-like piece of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Vertex(VertexId),
    OpenEdge(EdgeId),
    ClosedEdge(EdgeId),
    /// Closed sub-arc `[from, to]` of an edge, `0 ≤ from < to ≤ 1`.
    Arc { edge: EdgeId, from: Rational, to: Rational },
}

impl Cell {
    pub fn contains(&self, g: &MultiGraph, p: &GraphPoint) -> bool {
        match (self, p) {
            (Cell::Vertex(v), GraphPoint::Vertex(u)) => v == u,
            (Cell::Vertex(_), _) => false,
            (Cell::OpenEdge(e), GraphPoint::Edge { edge, .. }) => e == edge,
            (Cell::OpenEdge(_), _) => false,
            (Cell::ClosedEdge(e), _) => p.param_on(g, *e).is_some(),
            (Cell::Arc { edge, from, to }, _) => match p {
                GraphPoint::Edge { edge: e, t } => e == edge && from <= t && t <= to,
                GraphPoint::Vertex(v) => {
                    let rec = g.edge(*edge);
                    (rec.ends[0] == *v && from.is_zero()) || (rec.ends[1] == *v && to.is_one())
                }
            },
        }
    }

    pub fn is_closed(&self) -> bool {
        !matches!(self, Cell::OpenEdge(_))
    }

    fn describe(&self, g: &MultiGraph) -> String {
        match self {
            Cell::Vertex(v) => format!("vertex {}", g.vertex_name(*v)),
            Cell::OpenEdge(e) => format!("open edge {}", g.edge_name(*e)),
            Cell::ClosedEdge(e) => format!("edge {}", g.edge_name(*e)),
            Cell::Arc { edge, from, to } => format!("edge {} [{from}, {to}]", g.edge_name(*edge)),
        }
    }

    fn sample<R: Rng>(&self, g: &MultiGraph, rng: &mut R, spread: i64) -> Track {
        match *self {
            Cell::Vertex(v) => Track::at_vertex(g, v, rng, spread),
            Cell::OpenEdge(e) => Track::wiggle(e, random_open(rng), rng, spread),
            Cell::ClosedEdge(e) => Track::wiggle(e, random_closed(rng), rng, spread),
            Cell::Arc { edge, from, to } => {
                let k = rng.random_range(0..=SAMPLE_DENOM);
                Track::wiggle(edge, from + (to - from) * Rational::new(k, SAMPLE_DENOM), rng, spread)
            }
        }
    }
}

/// A union of vertices and open edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSet {
    label: String,
    vertices: Vec<bool>,
    edges: Vec<bool>,
}

impl CellSet {
    pub fn empty(g: &MultiGraph, label: impl Into<String>) -> Self {
        CellSet { label: label.into(), vertices: vec![false; g.vertex_count()], edges: vec![false; g.edge_count()] }
    }

    pub fn all(g: &MultiGraph, label: impl Into<String>) -> Self {
        CellSet { label: label.into(), vertices: vec![true; g.vertex_count()], edges: vec![true; g.edge_count()] }
    }

    /// All vertices together with the forest edges: a closed subcomplex.
    pub fn forest(g: &MultiGraph, forest: &SpanningForest, label: impl Into<String>) -> Self {
        let mut s = Self::all(g, label);
        for e in g.edge_ids() {
            s.edges[e.0] = forest.contains_edge(e);
        }
        s
    }

    pub fn from_cells(
        g: &MultiGraph,
        label: impl Into<String>,
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = EdgeId>,
    ) -> Self {
        let mut s = Self::empty(g, label);
        for v in vertices {
            s.vertices[v.0] = true;
        }
        for e in edges {
            s.edges[e.0] = true;
        }
        s
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices[v.0]
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges[e.0]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| VertexId(i))
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| EdgeId(i))
    }

    pub fn is_empty(&self) -> bool {
        !self.vertices.iter().chain(&self.edges).any(|&b| b)
    }

    pub fn contains(&self, p: &GraphPoint) -> bool {
        match *p {
            GraphPoint::Vertex(v) => self.vertices[v.0],
            GraphPoint::Edge { edge, .. } => self.edges[edge.0],
        }
    }

    /// Closed iff every edge comes with its endpoints.
    pub fn is_closed(&self, g: &MultiGraph) -> bool {
        self.edges().all(|e| g.edge(e).ends.iter().all(|v| self.vertices[v.0]))
    }

    pub fn closure(&self, g: &MultiGraph) -> CellSet {
        let mut c = self.clone();
        for e in self.edges() {
            for v in g.edge(e).ends {
                c.vertices[v.0] = true;
            }
        }
        c
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.vertices.iter().zip(&other.vertices).all(|(&a, &b)| !a || b)
            && self.edges.iter().zip(&other.edges).all(|(&a, &b)| !a || b)
    }

    pub fn intersects(&self, other: &CellSet) -> bool {
        self.vertices.iter().zip(&other.vertices).any(|(&a, &b)| a && b)
            || self.edges.iter().zip(&other.edges).any(|(&a, &b)| a && b)
    }

    pub fn minus(&self, other: &CellSet) -> CellSet {
        CellSet {
            label: format!("{}-{}", self.label, other.label),
            vertices: self.vertices.iter().zip(&other.vertices).map(|(&a, &b)| a && !b).collect(),
            edges: self.edges.iter().zip(&other.edges).map(|(&a, &b)| a && !b).collect(),
        }
    }

    /// Connected components of the subspace, each as a cell set.
    pub fn components(&self, g: &MultiGraph) -> Vec<CellSet> {
        let nv = g.vertex_count();
        let mut uf = crate::graph::UnionFind::new(nv + g.edge_count());
        for e in self.edges() {
            for v in g.edge(e).ends {
                if self.vertices[v.0] {
                    uf.union(nv + e.0, v.0);
                }
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut out: Vec<CellSet> = Vec::new();
        let members = self.vertices().map(|v| v.0).chain(self.edges().map(|e| nv + e.0));
        for m in members {
            let r = uf.find(m);
            let k = match roots.iter().position(|&x| x == r) {
                Some(k) => k,
                None => {
                    roots.push(r);
                    out.push(CellSet::empty(g, format!("{}#{}", self.label, out.len())));
                    out.len() - 1
                }
            };
            if m < nv {
                out[k].vertices[m] = true;
            } else {
                out[k].edges[m - nv] = true;
            }
        }
        out
    }

    /// A component is contractible iff the edges it contains with both ends
    /// form a forest; open whiskers retract onto their vertex.
    pub fn is_contractible_piece(&self, g: &MultiGraph) -> bool {
        let mut uf = crate::graph::UnionFind::new(g.vertex_count());
        for e in self.edges() {
            let [a, b] = g.edge(e).ends;
            if self.vertices[a.0] && self.vertices[b.0] && !uf.union(a.0, b.0) {
                return false;
            }
        }
        true
    }

    /// Inclusion is null-homotopic: every component is contractible.
    pub fn is_categorical(&self, g: &MultiGraph) -> bool {
        self.components(g).iter().all(|c| c.is_contractible_piece(g))
    }

    fn sample<R: Rng>(&self, g: &MultiGraph, rng: &mut R, spread: i64) -> Track {
        let nv = self.vertices().count();
        let ne = self.edges().count();
        assert!(nv + ne > 0, "sampling an empty cell set");
        let k = rng.random_range(0..nv + ne);
        if k < nv {
            Track::at_vertex(g, self.vertices().nth(k).unwrap(), rng, spread)
        } else {
            Track::wiggle(self.edges().nth(k - nv).unwrap(), random_open(rng), rng, spread)
        }
    }

    fn representatives(&self, g: &MultiGraph) -> Vec<GraphPoint> {
        let mut out: Vec<GraphPoint> = self.vertices().map(GraphPoint::Vertex).collect();
        for e in self.edges() {
            for t in [Rational::new(1, 3), Rational::new(1, 2)] {
                out.push(GraphPoint::at(g, e, t));
            }
        }
        out
    }
}

/// Representative points of every cell of `g`.
pub fn cell_representatives(g: &MultiGraph) -> Vec<GraphPoint> {
    CellSet::all(g, "G").representatives(g)
}

/// A point moving affinely along one closed edge, parametrized by `σ ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Track {
    Still(GraphPoint),
    Move { edge: EdgeId, from: Rational, to: Rational },
}

fn random_open<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.random_range(1..SAMPLE_DENOM), SAMPLE_DENOM)
}

fn random_closed<R: Rng>(rng: &mut R) -> Rational {
    match rng.random_range(0..8) {
        0 => Rational::zero(),
        1 => Rational::one(),
        _ => random_open(rng),
    }
}

fn random_offset<R: Rng>(rng: &mut R, lo: Rational, hi: Rational, spread: i64) -> Rational {
    let lo_k = (lo * SAMPLE_DENOM).ceil().to_integer().max(-spread);
    let hi_k = (hi * SAMPLE_DENOM).floor().to_integer().min(spread);
    if lo_k >= hi_k {
        return Rational::zero();
    }
    Rational::new(rng.random_range(lo_k..=hi_k), SAMPLE_DENOM)
}

impl Track {
    fn wiggle<R: Rng>(edge: EdgeId, from: Rational, rng: &mut R, spread: i64) -> Track {
        let d = random_offset(rng, -from, Rational::one() - from, spread);
        Track::Move { edge, from, to: from + d }
    }

    fn at_vertex<R: Rng>(g: &MultiGraph, v: VertexId, rng: &mut R, spread: i64) -> Track {
        let inc = g.incident(v);
        if inc.is_empty() {
            return Track::Still(GraphPoint::Vertex(v));
        }
        let e = inc[rng.random_range(0..inc.len())];
        let rec = g.edge(e);
        let from = if rec.is_loop() && rng.random_bool(0.5) { Rational::one() } else { rec.param_of(v).unwrap() };
        Track::wiggle(e, from, rng, spread)
    }

    /// A uniformly chosen cell of `g`, wiggled.
    pub fn random<R: Rng>(g: &MultiGraph, rng: &mut R, spread: i64) -> Track {
        CellSet::all(g, "G").sample(g, rng, spread)
    }

    pub fn at(&self, g: &MultiGraph, sigma: Rational) -> GraphPoint {
        match *self {
            Track::Still(p) => p,
            Track::Move { edge, from, to } => GraphPoint::at(g, edge, from + (to - from) * sigma),
        }
    }

    pub fn start(&self, g: &MultiGraph) -> GraphPoint {
        self.at(g, Rational::zero())
    }

    pub fn end(&self, g: &MultiGraph) -> GraphPoint {
        self.at(g, Rational::one())
    }

    /// `σ ∈ [0, 1]` at which the parameter equals `c`, if the track moves.
    fn crossing(&self, c: Rational) -> Option<Rational> {
        match *self {
            Track::Move { from, to, .. } if from != to => {
                let s = (c - from) / (to - from);
                (s >= Rational::zero() && s <= Rational::one()).then_some(s)
            }
            _ => None,
        }
    }

    fn cell_breakpoints(&self, out: &mut Vec<Rational>) {
        out.extend(self.crossing(Rational::zero()));
        out.extend(self.crossing(Rational::one()));
    }

    fn retract(&self, h: &CollapseHomotopy) -> Track {
        match *self {
            Track::Still(p) => Track::Still(h.retract_to_core(&p)),
            Track::Move { edge, from, to } => match h.graph_edge_to_core(edge) {
                Some(e) => Track::Move { edge: e, from, to },
                None => Track::Still(h.retract_to_core(&GraphPoint::at(h.graph(), edge, from))),
            },
        }
    }

    fn lift(&self, h: &CollapseHomotopy) -> Track {
        match *self {
            Track::Still(p) => Track::Still(h.from_core(&p)),
            Track::Move { edge, from, to } => Track::Move { edge: h.core_edge_to_graph(edge), from, to },
        }
    }

    /// Arclength position along the cycle as an affine function `a + bσ`.
    fn cycle_affine(&self, c: &CycleEmbedding) -> Option<(Rational, Rational)> {
        match *self {
            Track::Still(p) => c.position(&p).map(|s| (s, Rational::zero())),
            Track::Move { edge, from, to } => {
                let (k, fwd) = c.slot(edge)?;
                let k = Rational::from_integer(k as i64);
                if fwd {
                    Some((k + from, to - from))
                } else {
                    Some((k + Rational::one() - from, from - to))
                }
            }
        }
    }
}

/// A straight segment in `G × G` between a sampled pair (`σ = 0`) and its
/// partner (`σ = 1`).
pub type Segment = (Track, Track);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primitive {
    Box(Cell, Cell),
    /// `A × B` for cell sets `A`, `B`.
    Product(CellSet, CellSet),
    /// `{(x, x + offset)}` along a cycle.
    Shift { cycle: Arc<CycleEmbedding>, offset: Rational },
    /// `(r × r)⁻¹(inner)` for the retraction of a collapse homotopy; `inner`
    /// lives on the core.
    Preimage { map: Arc<CollapseHomotopy>, inner: Region },
}

impl Primitive {
    pub fn contains(&self, g: &MultiGraph, x: &GraphPoint, y: &GraphPoint) -> bool {
        match self {
            Primitive::Box(a, b) => a.contains(g, x) && b.contains(g, y),
            Primitive::Product(a, b) => a.contains(x) && b.contains(y),
            Primitive::Shift { cycle, offset } => match (cycle.position(x), cycle.position(y)) {
                (Some(s), Some(t)) => cycle.wrap(t - s - offset).is_zero(),
                _ => false,
            },
            Primitive::Preimage { map, inner } => {
                inner.contains(map.core(), &map.retract_to_core(x), &map.retract_to_core(y))
            }
        }
    }

    pub fn is_closed(&self, g: &MultiGraph) -> bool {
        match self {
            Primitive::Box(a, b) => a.is_closed() && b.is_closed(),
            Primitive::Product(a, b) => a.is_closed(g) && b.is_closed(g),
            Primitive::Shift { .. } => true,
            Primitive::Preimage { map, inner } => inner.is_closed(map.core()),
        }
    }

    fn breakpoints(&self, seg: &Segment, out: &mut Vec<Rational>) {
        match self {
            Primitive::Box(a, b) => {
                for (cell, track) in [(a, &seg.0), (b, &seg.1)] {
                    if let Cell::Arc { from, to, .. } = cell {
                        out.extend(track.crossing(*from));
                        out.extend(track.crossing(*to));
                    }
                }
            }
            Primitive::Product(..) => {}
            Primitive::Shift { cycle, offset } => {
                let (Some((ax, bx)), Some((ay, by))) = (seg.0.cycle_affine(cycle), seg.1.cycle_affine(cycle))
                else {
                    return;
                };
                // f(σ) = a + bσ; members where f ∈ L·Z
                let a = ay - ax - offset;
                let b = by - bx;
                if b.is_zero() {
                    return;
                }
                let l = cycle.length();
                let (lo, hi) = if b > Rational::zero() { (a, a + b) } else { (a + b, a) };
                let mut m = (lo / l).ceil();
                while m * l <= hi {
                    out.push((m * l - a) / b);
                    m += Rational::one();
                }
            }
            Primitive::Preimage { map, inner } => {
                let mapped = (seg.0.retract(map), seg.1.retract(map));
                inner.segment_breakpoints(&mapped, out);
            }
        }
    }

    fn sample<R: Rng>(&self, g: &MultiGraph, rng: &mut R, spread: i64) -> Segment {
        match self {
            Primitive::Box(a, b) => (a.sample(g, rng, spread), b.sample(g, rng, spread)),
            Primitive::Product(a, b) => (a.sample(g, rng, spread), b.sample(g, rng, spread)),
            Primitive::Shift { cycle, offset } => {
                let n = cycle.steps().len() as i64;
                let s = Rational::from_integer(rng.random_range(0..n)) + Rational::new(rng.random_range(0..SAMPLE_DENOM), SAMPLE_DENOM);
                let t = cycle.wrap(s + offset);
                let (lx, ly) = (s - s.floor(), t - t.floor());
                let lo = (-lx).max(-ly);
                let hi = (Rational::one() - lx).min(Rational::one() - ly);
                let d = random_offset(rng, lo, hi, spread);
                let track = |pos: Rational, local: Rational| {
                    let k = pos.floor().to_integer() as usize;
                    let (edge, fwd) = cycle.steps()[k];
                    let param = |u: Rational| if fwd { u } else { Rational::one() - u };
                    Track::Move { edge, from: param(local), to: param(local + d) }
                };
                (track(s, lx), track(t, ly))
            }
            Primitive::Preimage { map, inner } => {
                let (a, b) = inner.sample(map.core(), rng, spread);
                (a.lift(map), b.lift(map))
            }
        }
    }

    fn representatives(&self, g: &MultiGraph) -> Vec<(GraphPoint, GraphPoint)> {
        match self {
            Primitive::Box(a, b) => {
                let pts = |c: &Cell| match *c {
                    Cell::Vertex(v) => vec![GraphPoint::Vertex(v)],
                    Cell::OpenEdge(e) => vec![GraphPoint::at(g, e, Rational::new(1, 2))],
                    Cell::ClosedEdge(e) => [0, 1, 2].map(|k| GraphPoint::at(g, e, Rational::new(k, 2))).to_vec(),
                    Cell::Arc { edge, from, to } => {
                        vec![GraphPoint::at(g, edge, from), GraphPoint::at(g, edge, to)]
                    }
                };
                let (pa, pb) = (pts(a), pts(b));
                pa.iter().flat_map(|x| pb.iter().map(move |y| (*x, *y))).collect()
            }
            Primitive::Product(a, b) => {
                let (pa, pb) = (a.representatives(g), b.representatives(g));
                pa.iter().flat_map(|x| pb.iter().map(move |y| (*x, *y))).collect()
            }
            Primitive::Shift { cycle, offset } => {
                let n = cycle.steps().len() as i64;
                (0..n)
                    .flat_map(|k| [Rational::zero(), Rational::new(1, 3), Rational::new(1, 2)].map(|u| Rational::from_integer(k) + u))
                    .map(|s| (cycle.point_at(g, s), cycle.point_at(g, s + offset)))
                    .collect()
            }
            Primitive::Preimage { map, inner } => inner
                .representatives(map.core())
                .into_iter()
                .map(|(x, y)| (map.from_core(&x), map.from_core(&y)))
                .collect(),
        }
    }

    fn describe(&self, g: &MultiGraph) -> String {
        match self {
            Primitive::Box(a, b) => format!("[{}] x [{}]", a.describe(g), b.describe(g)),
            Primitive::Product(a, b) => format!("{} x {}", a.label(), b.label()),
            Primitive::Shift { offset, .. } => format!("shift({offset})"),
            Primitive::Preimage { map, inner } => format!("r^-1({})", inner.describe(map.core())),
        }
    }
}

/// A finite union of primitives.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Region(pub Vec<Primitive>);

impl Region {
    pub fn new(parts: Vec<Primitive>) -> Self {
        Region(parts)
    }

    pub fn product(a: CellSet, b: CellSet) -> Self {
        Region(vec![Primitive::Product(a, b)])
    }

    pub fn primitives(&self) -> &[Primitive] {
        &self.0
    }

    pub fn contains(&self, g: &MultiGraph, x: &GraphPoint, y: &GraphPoint) -> bool {
        self.0.iter().any(|p| p.contains(g, x, y))
    }

    /// Sufficient: a finite union of closed primitives is closed.
    pub fn is_closed(&self, g: &MultiGraph) -> bool {
        self.0.iter().all(|p| p.is_closed(g))
    }

    /// Parameters along `seg` where membership may change. Between two
    /// consecutive breakpoints membership is constant.
    pub fn segment_breakpoints(&self, seg: &Segment, out: &mut Vec<Rational>) {
        seg.0.cell_breakpoints(out);
        seg.1.cell_breakpoints(out);
        for p in &self.0 {
            p.breakpoints(seg, out);
        }
    }

    /// A random member pair together with a nearby partner.
    pub fn sample<R: Rng>(&self, g: &MultiGraph, rng: &mut R, spread: i64) -> Segment {
        let k = rng.random_range(0..self.0.len());
        self.0[k].sample(g, rng, spread)
    }

    pub fn representatives(&self, g: &MultiGraph) -> Vec<(GraphPoint, GraphPoint)> {
        self.0.iter().flat_map(|p| p.representatives(g)).collect()
    }

    pub fn describe(&self, g: &MultiGraph) -> String {
        if self.0.is_empty() {
            return "empty".into();
        }
        self.0.iter().map(|p| p.describe(g)).collect::<Vec<_>>().join(" u ")
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// Sorted, deduplicated evaluation parameters: breakpoints, their midpoints,
/// and the ends of the unit interval.
pub fn evaluation_points(mut bps: Vec<Rational>) -> Vec<Rational> {
    bps.push(Rational::zero());
    bps.push(Rational::one());
    bps.retain(|s| *s >= Rational::zero() && *s <= Rational::one());
    bps.sort();
    bps.dedup();
    let mut out = Vec::with_capacity(2 * bps.len());
    for w in bps.windows(2) {
        out.push(w[0]);
        out.push((w[0] + w[1]) / 2);
    }
    out.extend(bps.last());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{deforest, fixtures, spanning_forest};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn open_edges_are_not_closed() {
        let g = fixtures::theta();
        assert!(!Cell::OpenEdge(EdgeId(0)).is_closed());
        assert!(Cell::ClosedEdge(EdgeId(0)).is_closed());
        let only_edge = CellSet::from_cells(&g, "e", [], [EdgeId(1)]);
        assert!(!only_edge.is_closed(&g));
        assert!(only_edge.closure(&g).is_closed(&g));
        let r = Region::new(vec![Primitive::Box(Cell::OpenEdge(EdgeId(0)), Cell::Vertex(VertexId(0)))]);
        assert!(!r.is_closed(&g));
    }

    #[test]
    fn arc_membership_at_ends() {
        let g = fixtures::path(2);
        let c = Cell::Arc { edge: EdgeId(0), from: q(0, 1), to: q(1, 2) };
        assert!(c.contains(&g, &GraphPoint::Vertex(VertexId(0))));
        assert!(!c.contains(&g, &GraphPoint::Vertex(VertexId(1))));
        assert!(c.contains(&g, &GraphPoint::at(&g, EdgeId(0), q(1, 2))));
        assert!(!c.contains(&g, &GraphPoint::at(&g, EdgeId(0), q(2, 3))));
    }

    #[test]
    fn shift_membership() {
        let g = fixtures::cycle(4);
        let c = Arc::new(CycleEmbedding::new(&g).unwrap());
        let r = Region::new(vec![Primitive::Shift { cycle: c.clone(), offset: q(2, 1) }]);
        for k in 0..8 {
            let s = q(k, 2);
            assert!(r.contains(&g, &c.point_at(&g, s), &c.point_at(&g, s + 2)));
            assert!(!r.contains(&g, &c.point_at(&g, s), &c.point_at(&g, s + q(3, 2))));
        }
    }

    #[test]
    fn shift_breakpoints_solve_exactly() {
        let g = fixtures::cycle(2);
        let c = Arc::new(CycleEmbedding::new(&g).unwrap());
        let r = Region::new(vec![Primitive::Shift { cycle: c.clone(), offset: q(1, 1) }]);
        // x fixed at position 1/4, y sweeps 1 -> 3/2 on the second slot
        let (e1, fwd) = c.steps()[1];
        let p = |u: Rational| if fwd { u } else { Rational::one() - u };
        let seg = (
            Track::Move { edge: c.steps()[0].0, from: q(1, 4), to: q(1, 4) },
            Track::Move { edge: e1, from: p(q(0, 1)), to: p(q(1, 2)) },
        );
        let mut bps = Vec::new();
        r.segment_breakpoints(&seg, &mut bps);
        assert!(bps.contains(&q(1, 2)));
        let hits: Vec<Rational> = evaluation_points(bps)
            .into_iter()
            .filter(|s| r.contains(&g, &seg.0.at(&g, *s), &seg.1.at(&g, *s)))
            .collect();
        assert_eq!(hits, vec![q(1, 2)]);
    }

    #[test]
    fn components_and_categorical() {
        let g = fixtures::figure_eight();
        let f = spanning_forest(&g);
        let t = CellSet::forest(&g, &f, "T");
        let all = CellSet::all(&g, "G");
        let diff = all.minus(&t);
        assert_eq!(diff.components(&g).len(), 2);
        assert!(diff.is_categorical(&g));
        assert!(t.is_categorical(&g));
        assert!(!all.is_categorical(&g));
    }

    #[test]
    fn preimage_samples_are_members() {
        let g = fixtures::circle_with_hair();
        let h = Arc::new(deforest(&g).unwrap());
        let c = Arc::new(CycleEmbedding::new(h.core()).unwrap());
        let inner = Region::new(vec![Primitive::Shift { cycle: c.clone(), offset: c.half_length() }]);
        let r = Region::new(vec![Primitive::Preimage { map: h.clone(), inner }]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (a, b) = r.sample(&g, &mut rng, 500);
            for s in [Rational::zero(), Rational::one()] {
                assert!(r.contains(&g, &a.at(&g, s), &b.at(&g, s)));
            }
        }
        let tip = GraphPoint::Vertex(g.vertex_by_name("h").unwrap());
        let anchor = h.from_core(&h.retract_to_core(&tip));
        let opposite = h.from_core(&c.point_at(h.core(), c.position(&h.retract_to_core(&anchor)).unwrap() + c.half_length()));
        assert!(r.contains(&g, &tip, &opposite));
    }

    #[test]
    fn evaluation_points_interleave() {
        let pts = evaluation_points(vec![q(1, 2), q(1, 2), q(3, 2)]);
        assert_eq!(pts, vec![q(0, 1), q(1, 4), q(1, 2), q(3, 4), q(1, 1)]);
    }
}
