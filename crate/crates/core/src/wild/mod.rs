//! Symbolic one-dimensional Peano continua built from finite graphs by
//! attaching subspaces and null sequences of shrinking copies.
//!
//! Wild sets are computed by structural recursion, up to the data the
//! invariants need: a list of pieces, their first Betti numbers, and
//! emptiness.

mod certificate;
mod stability;
pub mod syntax;
mod truncate;

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{EdgeId, GraphError, GraphPoint, MultiGraph, Rational, UnionFind, VertexId};
pub use certificate::{cat_certificate, tc_certificate, CertKind, CertLevel, Certificate, Reason};
pub use stability::{is_w_stable, Stability};
pub use truncate::truncate;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WildError {
    #[error("unstable expression: {0}")]
    Unstable(String),
    #[error("the zero-dimensional wild atom has no symbolic wild set")]
    ZeroDim,
    #[error("expression contains a wild atom")]
    Atom,
    #[error("infinite wildness rank")]
    InfiniteRank,
    #[error("malformed expression: {0}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A natural number or infinity; serialized as an integer or `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl Count {
    pub fn finite(self) -> Option<u64> {
        match self {
            Count::Finite(n) => Some(n),
            Count::Infinite => None,
        }
    }
}

impl std::ops::Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        match (self, rhs) {
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a + b),
            _ => Count::Infinite,
        }
    }
}

impl std::iter::Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::Finite(0), |a, b| a + b)
    }
}

impl From<usize> for Count {
    fn from(n: usize) -> Self {
        Count::Finite(n as u64)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Count::Finite(n) => s.serialize_u64(*n),
            Count::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A point named in the coordinates of some graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointSpec {
    Vertex(String),
    Edge(String, Rational),
}

impl PointSpec {
    pub fn resolve(&self, g: &MultiGraph) -> Result<GraphPoint, GraphError> {
        match self {
            PointSpec::Vertex(v) => g.point(v, None),
            PointSpec::Edge(e, t) => g.point(e, Some(*t)),
        }
    }
}

impl fmt::Display for PointSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointSpec::Vertex(v) => write!(f, "(vertex {v})"),
            PointSpec::Edge(e, t) => write!(f, "(edge {e} {t})"),
        }
    }
}

/// A closed subcomplex of a base graph, stored by name in id order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Subcomplex {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
}

impl Subcomplex {
    /// Resolves each name as a vertex or an edge and closes up.
    pub fn from_names<S: AsRef<str>>(g: &MultiGraph, names: &[S]) -> Result<Self, WildError> {
        let mut vs = Vec::new();
        let mut es = Vec::new();
        for n in names {
            let n = n.as_ref();
            match (g.vertex_by_name(n), g.edge_by_name(n)) {
                (Some(_), Some(_)) => return Err(WildError::Malformed(format!("`{n}` names both a vertex and an edge"))),
                (Some(v), None) => vs.push(v),
                (None, Some(e)) => es.push(e),
                (None, None) => return Err(WildError::Malformed(format!("`{n}` is not in the base graph"))),
            }
        }
        Ok(Self::from_ids(g, &vs, &es))
    }

    pub fn from_ids(g: &MultiGraph, vertices: &[VertexId], edges: &[EdgeId]) -> Self {
        let mut vmask = vec![false; g.vertex_count()];
        let mut emask = vec![false; g.edge_count()];
        for v in vertices {
            vmask[v.0] = true;
        }
        for e in edges {
            emask[e.0] = true;
            for v in g.edge(*e).ends {
                vmask[v.0] = true;
            }
        }
        Subcomplex {
            vertices: g.vertices().filter(|v| vmask[v.0]).map(|v| g.vertex_name(v).to_owned()).collect(),
            edges: g.edge_ids().filter(|e| emask[e.0]).map(|e| g.edge_name(e).to_owned()).collect(),
        }
    }

    pub fn whole(g: &MultiGraph) -> Self {
        let v: Vec<VertexId> = g.vertices().collect();
        let e: Vec<EdgeId> = g.edge_ids().collect();
        Self::from_ids(g, &v, &e)
    }

    pub fn ids(&self, g: &MultiGraph) -> Result<(Vec<VertexId>, Vec<EdgeId>), WildError> {
        let missing = |n: &str| WildError::Malformed(format!("`{n}` is not in the base graph"));
        let vs = self.vertices.iter().map(|n| g.vertex_by_name(n).ok_or_else(|| missing(n))).collect::<Result<_, _>>()?;
        let es = self.edges.iter().map(|n| g.edge_by_name(n).ok_or_else(|| missing(n))).collect::<Result<_, _>>()?;
        Ok((vs, es))
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Names in printing order: vertices, then edges.
    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().chain(&self.edges).map(String::as_str)
    }
}

/// A named base graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphRef {
    pub name: String,
    pub graph: Arc<MultiGraph>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attachment {
    /// Point of the base.
    pub at: PointSpec,
    pub child: SpaceExpr,
    /// Point of the child glued to `at`.
    pub anchor: PointSpec,
}

/// A null sequence of copies of `pattern`, glued at `anchor` to points
/// accumulating on all of `support`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqFamily {
    pub support: Subcomplex,
    pub pattern: SpaceExpr,
    pub anchor: PointSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub base: GraphRef,
    pub attachments: Vec<Attachment>,
    pub families: Vec<SeqFamily>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceExpr {
    Node(Node),
    /// A space equal to its own wild set.
    SelfWild,
    /// A space whose wild set is non-empty, zero-dimensional and lies in a
    /// dendrite.
    ZeroDimWild,
}

impl SpaceExpr {
    pub fn graph(name: impl Into<String>, g: Arc<MultiGraph>) -> Self {
        SpaceExpr::Node(Node { base: GraphRef { name: name.into(), graph: g }, attachments: Vec::new(), families: Vec::new() })
    }

    pub fn attach(mut self, at: PointSpec, child: SpaceExpr, anchor: PointSpec) -> Self {
        if let SpaceExpr::Node(n) = &mut self {
            n.attachments.push(Attachment { at, child, anchor });
        }
        self
    }

    pub fn seq(mut self, support: Subcomplex, pattern: SpaceExpr, anchor: PointSpec) -> Self {
        if let SpaceExpr::Node(n) = &mut self {
            n.families.push(SeqFamily { support, pattern, anchor });
        }
        self
    }

    pub fn as_node(&self) -> Option<&Node> {
        match self {
            SpaceExpr::Node(n) => Some(n),
            _ => None,
        }
    }

    /// A node with no attachments and no families.
    pub fn as_plain_graph(&self) -> Option<&GraphRef> {
        self.as_node().filter(|n| n.attachments.is_empty() && n.families.is_empty()).map(|n| &n.base)
    }

    pub fn contains_selfwild(&self) -> bool {
        match self {
            SpaceExpr::SelfWild => true,
            SpaceExpr::ZeroDimWild => false,
            SpaceExpr::Node(n) => {
                n.attachments.iter().any(|a| a.child.contains_selfwild())
                    || n.families.iter().any(|f| f.pattern.contains_selfwild())
            }
        }
    }

    pub fn contains_zerodim(&self) -> bool {
        match self {
            SpaceExpr::ZeroDimWild => true,
            SpaceExpr::SelfWild => false,
            SpaceExpr::Node(n) => {
                n.attachments.iter().any(|a| a.child.contains_zerodim())
                    || n.families.iter().any(|f| f.pattern.contains_zerodim())
            }
        }
    }

    /// Maximal nesting of sequence families.
    pub fn depth(&self) -> usize {
        match self {
            SpaceExpr::Node(n) => n
                .attachments
                .iter()
                .map(|a| a.child.depth())
                .chain(n.families.iter().map(|f| 1 + f.pattern.depth()))
                .max()
                .unwrap_or(0),
            _ => 0,
        }
    }

    /// Checks that every name resolves and every base is connected.
    pub fn validate(&self) -> Result<(), WildError> {
        let SpaceExpr::Node(n) = self else {
            return Ok(());
        };
        let g = &n.base.graph;
        g.ensure_connected()
            .map_err(|_| WildError::Malformed(format!("base graph `{}` is not connected", n.base.name)))?;
        for a in &n.attachments {
            a.at.resolve(g)?;
            a.child.validate()?;
            resolve_anchor(&a.child, &a.anchor)?;
        }
        for f in &n.families {
            if f.support.is_empty() {
                return Err(WildError::Malformed(format!("empty support in a family over `{}`", n.base.name)));
            }
            f.support.ids(g)?;
            f.pattern.validate()?;
            resolve_anchor(&f.pattern, &f.anchor)?;
        }
        Ok(())
    }
}

/// Anchors of atoms are opaque.
fn resolve_anchor(e: &SpaceExpr, p: &PointSpec) -> Result<Option<GraphPoint>, WildError> {
    match e {
        SpaceExpr::Node(n) => Ok(Some(p.resolve(&n.base.graph)?)),
        _ => Ok(None),
    }
}

/// Simply connected iff this is false.
pub fn contains_scc(e: &SpaceExpr) -> bool {
    match e {
        SpaceExpr::SelfWild | SpaceExpr::ZeroDimWild => true,
        SpaceExpr::Node(n) => {
            n.base.graph.betti1() > 0
                || n.attachments.iter().any(|a| contains_scc(&a.child))
                || n.families.iter().any(|f| contains_scc(&f.pattern))
        }
    }
}

/// First Betti number; infinite as soon as a family carries a cycle.
pub fn betti1(e: &SpaceExpr) -> Count {
    match e {
        SpaceExpr::SelfWild | SpaceExpr::ZeroDimWild => Count::Infinite,
        SpaceExpr::Node(n) => {
            let fam = if n.families.iter().any(|f| contains_scc(&f.pattern)) { Count::Infinite } else { Count::Finite(0) };
            Count::from(n.base.graph.betti1()) + n.attachments.iter().map(|a| betti1(&a.child)).sum() + fam
        }
    }
}

/// A piece of a wild set and whether it lives in the base of the node that
/// produced it.
#[derive(Debug, Clone)]
pub(crate) struct Piece {
    pub expr: SpaceExpr,
    pub in_base: bool,
}

fn anchor_in_base_piece(pattern: &SpaceExpr, piece: &SpaceExpr, anchor: &PointSpec) -> bool {
    let (Some(p), Some(w)) = (pattern.as_node(), piece.as_node()) else {
        return false;
    };
    let (pg, wg) = (&p.base.graph, &w.base.graph);
    match anchor.resolve(pg) {
        Ok(GraphPoint::Vertex(v)) => wg.vertex_by_name(pg.vertex_name(v)).is_some(),
        Ok(GraphPoint::Edge { edge, .. }) => wg.edge_by_name(pg.edge_name(edge)).is_some(),
        Err(_) => false,
    }
}

pub(crate) fn wild_pieces(e: &SpaceExpr) -> Result<Vec<Piece>, WildError> {
    let n = match e {
        SpaceExpr::SelfWild => return Ok(vec![Piece { expr: SpaceExpr::SelfWild, in_base: true }]),
        SpaceExpr::ZeroDimWild => return Err(WildError::ZeroDim),
        SpaceExpr::Node(n) => n,
    };
    let g = &n.base.graph;
    let mut contributions: Vec<(Subcomplex, Option<(SpaceExpr, PointSpec)>)> = Vec::new();
    for (i, f) in n.families.iter().enumerate() {
        if !contains_scc(&f.pattern) {
            continue;
        }
        let wp = wild_pieces(&f.pattern)?;
        if wp.is_empty() {
            contributions.push((f.support.clone(), None));
            continue;
        }
        let name = format!("family #{} over `{}`", i + 1, n.base.name);
        if wp.len() != 1 {
            return Err(WildError::Unstable(format!("{name}: the pattern's wild set has {} pieces", wp.len())));
        }
        let piece = wp.into_iter().next().unwrap();
        if !piece.in_base || !anchor_in_base_piece(&f.pattern, &piece.expr, &f.anchor) {
            return Err(WildError::Unstable(format!(
                "{name}: anchor {} does not lie in the pattern's wild set",
                f.anchor
            )));
        }
        contributions.push((f.support.clone(), Some((piece.expr, f.anchor.clone()))));
    }

    let mut out = Vec::new();
    if !contributions.is_empty() {
        let mut vmask = vec![false; g.vertex_count()];
        let mut emask = vec![false; g.edge_count()];
        for (k, _) in &contributions {
            let (vs, es) = k.ids(g)?;
            vs.iter().for_each(|v| vmask[v.0] = true);
            es.iter().for_each(|e| emask[e.0] = true);
        }
        let mut uf = UnionFind::new(g.vertex_count());
        for e in g.edge_ids().filter(|e| emask[e.0]) {
            let [a, b] = g.edge(e).ends;
            uf.union(a.0, b.0);
        }
        let roots: Vec<usize> = {
            let mut r: Vec<usize> = g.vertices().filter(|v| vmask[v.0]).map(|v| uf.find(v.0)).collect();
            r.dedup();
            r.sort();
            r.dedup();
            r
        };
        for (ci, root) in roots.iter().enumerate() {
            let vs: Vec<VertexId> = g.vertices().filter(|v| vmask[v.0] && uf.find(v.0) == *root).collect();
            let es: Vec<EdgeId> = g.edge_ids().filter(|e| emask[e.0] && uf.find(g.edge(*e).ends[0].0) == *root).collect();
            let (sub, _, _) = g.subgraph(&vs, &es);
            let name = if roots.len() == 1 { format!("{}'w", n.base.name) } else { format!("{}'w{}", n.base.name, ci + 1) };
            let mut node = SpaceExpr::graph(name, Arc::new(sub));
            for (k, fam) in &contributions {
                if let Some((pattern, anchor)) = fam {
                    let support = Subcomplex {
                        vertices: k.vertices.iter().filter(|v| vs.iter().any(|x| g.vertex_name(*x) == v.as_str())).cloned().collect(),
                        edges: k.edges.iter().filter(|e| es.iter().any(|x| g.edge_name(*x) == e.as_str())).cloned().collect(),
                    };
                    if !support.is_empty() {
                        node = node.seq(support, pattern.clone(), anchor.clone());
                    }
                }
            }
            out.push(Piece { expr: node, in_base: true });
        }
    }
    for a in &n.attachments {
        out.extend(wild_pieces(&a.child)?.into_iter().map(|p| Piece { in_base: false, ..p }));
    }
    Ok(out)
}

/// `w(e)` as a finite disjoint union of pieces.
pub fn wild_set(e: &SpaceExpr) -> Result<Vec<SpaceExpr>, WildError> {
    Ok(wild_pieces(e)?.into_iter().map(|p| p.expr).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SccClass {
    None,
    One,
    Many,
}

impl SccClass {
    pub fn of(b1: u64) -> Self {
        match b1 {
            0 => SccClass::None,
            1 => SccClass::One,
            _ => SccClass::Many,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LevelSummary {
    pub pieces: Count,
    pub betti1: Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WildProfile {
    /// Summaries of `w⁰ ⊇ w¹ ⊇ …`, non-empty levels only.
    pub tower: Vec<LevelSummary>,
    pub wrk: Count,
    /// Total first Betti number of the last non-empty level.
    pub top_b1: Option<u64>,
    pub scc_class: Option<SccClass>,
    pub stable: bool,
}

/// Iterates the wild set until it vanishes.
pub fn profile(e: &SpaceExpr) -> Result<WildProfile, WildError> {
    e.validate()?;
    if e.contains_selfwild() {
        return Ok(WildProfile {
            tower: vec![LevelSummary { pieces: Count::Finite(1), betti1: Count::Infinite }],
            wrk: Count::Infinite,
            top_b1: None,
            scc_class: None,
            stable: true,
        });
    }
    if *e == SpaceExpr::ZeroDimWild {
        return Ok(WildProfile {
            tower: vec![
                LevelSummary { pieces: Count::Finite(1), betti1: Count::Infinite },
                LevelSummary { pieces: Count::Infinite, betti1: Count::Finite(0) },
            ],
            wrk: Count::Finite(2),
            top_b1: Some(0),
            scc_class: Some(SccClass::None),
            stable: false,
        });
    }
    if e.contains_zerodim() {
        return Err(WildError::Unstable("nested zero-dimensional wild atom".into()));
    }
    let mut tower = Vec::new();
    let mut level = vec![e.clone()];
    while !level.is_empty() {
        tower.push(LevelSummary { pieces: level.len().into(), betti1: level.iter().map(betti1).sum() });
        let mut next = Vec::new();
        for p in &level {
            next.extend(wild_set(p)?);
        }
        level = next;
    }
    let top_b1 = tower.last().and_then(|l| l.betti1.finite()).unwrap_or(0);
    Ok(WildProfile {
        wrk: tower.len().into(),
        tower,
        top_b1: Some(top_b1),
        scc_class: Some(SccClass::of(top_b1)),
        stable: true,
    })
}

pub fn wrk(e: &SpaceExpr) -> Result<Count, WildError> {
    Ok(profile(e)?.wrk)
}

/// `n − 1` if the top level has no cycle, `n` otherwise.
pub fn cat(e: &SpaceExpr) -> Result<Count, WildError> {
    Ok(formulas(&profile(e)?).0)
}

/// `2n − 2`, `2n − 1` or `2n` by cycle class of the top level.
pub fn tc(e: &SpaceExpr) -> Result<Count, WildError> {
    Ok(formulas(&profile(e)?).1)
}

/// `(cat, tc)` from a profile.
pub fn formulas(p: &WildProfile) -> (Count, Count) {
    let (Count::Finite(n), Some(class)) = (p.wrk, p.scc_class) else {
        return (Count::Infinite, Count::Infinite);
    };
    match class {
        SccClass::None => (Count::Finite(n - 1), Count::Finite(2 * n - 2)),
        SccClass::One => (Count::Finite(n), Count::Finite(2 * n - 1)),
        SccClass::Many => (Count::Finite(n), Count::Finite(2 * n)),
    }
}

/// Hand-built expressions used in tests, docs and the acceptance suite.
pub mod examples {
    use super::*;
    use crate::graph::{fixtures, GraphSpec};

    pub fn circle_graph(name: &str) -> SpaceExpr {
        let g = GraphSpec::new().vertex("o").edge("loop", "o", "o").build().unwrap();
        SpaceExpr::graph(name, Arc::new(g))
    }

    fn point(name: &str) -> Arc<MultiGraph> {
        let _ = name;
        Arc::new(fixtures::point())
    }

    fn v(name: &str) -> PointSpec {
        PointSpec::Vertex(name.into())
    }

    /// Copies of a circle shrinking to a single point.
    pub fn earring() -> SpaceExpr {
        let g = point("P");
        let k = Subcomplex::whole(&g);
        SpaceExpr::graph("P", g).seq(k, circle_graph("S"), v("o"))
    }

    /// A circle with shrinking circles accumulating on all of it.
    pub fn wild_circle() -> SpaceExpr {
        let c = Arc::new(fixtures::cycle(3));
        let k = Subcomplex::whole(&c);
        SpaceExpr::graph("C", c).seq(k, circle_graph("S"), v("o"))
    }

    /// Shrinking copies of [`wild_circle`] at a point, glued along the circle.
    pub fn nested_rank3() -> SpaceExpr {
        let g = point("P");
        let k = Subcomplex::whole(&g);
        SpaceExpr::graph("P", g).seq(k, wild_circle(), v("c0"))
    }

    /// A wedge of two circles with shrinking circles everywhere.
    pub fn wild_figure_eight() -> SpaceExpr {
        let f = Arc::new(fixtures::figure_eight());
        let k = Subcomplex::whole(&f);
        SpaceExpr::graph("F", f).seq(k, circle_graph("S"), v("o"))
    }

    /// An earring whose base is an arc `v – u`, copies at `v`.
    pub fn earring_on_arc() -> SpaceExpr {
        let g = Arc::new(GraphSpec::new().vertex("v").vertex("u").edge("vu", "v", "u").build().unwrap());
        let k = Subcomplex::from_names(&g, &["v"]).unwrap();
        SpaceExpr::graph("A", g).seq(k, circle_graph("S"), v("o"))
    }

    /// Shrinking earrings glued at `anchor` of [`earring_on_arc`].
    pub fn earring_of_earrings(anchor: &str) -> SpaceExpr {
        let g = point("P");
        let k = Subcomplex::whole(&g);
        SpaceExpr::graph("P", g).seq(k, earring_on_arc(), v(anchor))
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;
    use crate::graph::fixtures;

    fn triple(e: &SpaceExpr) -> (Count, Count, Count) {
        (wrk(e).unwrap(), cat(e).unwrap(), tc(e).unwrap())
    }

    fn f(n: u64) -> Count {
        Count::Finite(n)
    }

    #[test]
    fn graphs_have_rank_one() {
        let e = SpaceExpr::graph("K", Arc::new(fixtures::complete(4)));
        assert_eq!(triple(&e), (f(1), f(1), f(2)));
        assert!(wild_set(&e).unwrap().is_empty());
        let t = SpaceExpr::graph("T", Arc::new(fixtures::path(3)));
        assert_eq!(triple(&t), (f(1), f(0), f(0)));
        let c = SpaceExpr::graph("C", Arc::new(fixtures::cycle(3)));
        assert_eq!(triple(&c), (f(1), f(1), f(1)));
    }

    #[test]
    fn earring_wild_set_is_a_point() {
        let w = wild_set(&earring()).unwrap();
        assert_eq!(w.len(), 1);
        let g = &w[0].as_plain_graph().unwrap().graph;
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn wild_circle_wild_set_is_the_circle() {
        let w = wild_set(&wild_circle()).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].as_plain_graph().unwrap().graph.betti1(), 1);
    }

    #[test]
    fn golden_triples() {
        assert_eq!(triple(&earring()), (f(2), f(1), f(2)));
        assert_eq!(triple(&wild_circle()), (f(2), f(2), f(3)));
        assert_eq!(triple(&nested_rank3()), (f(3), f(2), f(4)));
        assert_eq!(triple(&wild_figure_eight()), (f(2), f(2), f(4)));
        assert_eq!(triple(&SpaceExpr::SelfWild), (Count::Infinite, Count::Infinite, Count::Infinite));
        assert_eq!(triple(&SpaceExpr::ZeroDimWild), (f(2), f(1), f(2)));
    }

    #[test]
    fn selfwild_anywhere_is_infinite() {
        let e = earring().attach(PointSpec::Vertex("v".into()), SpaceExpr::SelfWild, PointSpec::Vertex("x".into()));
        assert_eq!(wrk(&e).unwrap(), Count::Infinite);
    }

    #[test]
    fn simply_connected_families_add_nothing() {
        let g = Arc::new(fixtures::path(2));
        let hair = SpaceExpr::graph("H", Arc::new(fixtures::path(2)));
        let k = Subcomplex::whole(&g);
        let e = SpaceExpr::graph("B", g).seq(k, hair, PointSpec::Vertex("p0".into()));
        assert!(!contains_scc(&e));
        assert_eq!(triple(&e), (f(1), f(0), f(0)));
    }

    #[test]
    fn disconnected_supports_split_into_pieces() {
        let g = Arc::new(fixtures::path(3));
        let k = Subcomplex::from_names(&g, &["p0", "p2"]).unwrap();
        let e = SpaceExpr::graph("B", g).seq(k, circle_graph("S"), PointSpec::Vertex("o".into()));
        let w = wild_set(&e).unwrap();
        assert_eq!(w.len(), 2);
        let p = profile(&e).unwrap();
        assert_eq!(p.tower[1], LevelSummary { pieces: f(2), betti1: f(0) });
    }

    #[test]
    fn supports_merge_over_the_same_base() {
        let g = Arc::new(fixtures::path(3));
        let k1 = Subcomplex::from_names(&g, &["q1"]).unwrap();
        let k2 = Subcomplex::from_names(&g, &["q2"]).unwrap();
        let e = SpaceExpr::graph("B", g)
            .seq(k1, circle_graph("S"), PointSpec::Vertex("o".into()))
            .seq(k2, circle_graph("S"), PointSpec::Vertex("o".into()));
        let w = wild_set(&e).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].as_plain_graph().unwrap().graph.edge_count(), 2);
    }

    #[test]
    fn ambiguous_and_missing_names() {
        let g = crate::graph::GraphSpec::new().vertex("x").edge("x2", "x", "x").build().unwrap();
        assert!(Subcomplex::from_names(&g, &["x", "x2"]).is_ok());
        assert!(matches!(Subcomplex::from_names(&g, &["nope"]), Err(WildError::Malformed(_))));
    }

    #[test]
    fn depth_bounds_rank() {
        for e in [earring(), wild_circle(), nested_rank3(), wild_figure_eight()] {
            assert!(wrk(&e).unwrap().finite().unwrap() as usize <= e.depth() + 1);
        }
    }
}
