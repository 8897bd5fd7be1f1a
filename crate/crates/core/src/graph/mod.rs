//! Finite multigraphs with a unit-length geometric realization.
//!
//! Every edge is realized as a copy of `[0, 1]`, parametrized from its first
//! endpoint. Loops and parallel edges are allowed. Identifiers are kept as
//! names for I/O, but all internal references use the dense indices
//! [`VertexId`] and [`EdgeId`], which follow declaration order. "Smallest
//! identifier" tie-breaking always refers to that index order.

mod deforest;
mod forest;
mod metric;
mod path;
mod point;
pub mod text;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use deforest::{deforest, Collapse, CollapseHomotopy};
pub use forest::{spanning_forest, tree_path, SpanningForest};
pub use metric::{FloatPoint, PathMetric};
pub use path::{PLPath, Step};
pub use point::GraphPoint;

/// Exact parameter type used for points and paths.
pub type Rational = num_rational::Rational64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v#{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e#{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("dangling endpoint: edge `{edge}` references undeclared vertex `{vertex}`")]
    DanglingEndpoint { edge: String, vertex: String },
    #[error("invalid identifier `{0}`")]
    InvalidId(String),
    #[error("graph is not connected ({0} components)")]
    Disconnected(usize),
    #[error("graph contains a cycle")]
    NotATree,
    #[error("graph is not a single cycle")]
    NotACycle,
    #[error("points lie in different components")]
    DifferentComponents,
    #[error("point does not lie in the spanning forest")]
    OffForest,
    #[error("edge parameter {0} is outside [0, 1]")]
    ParameterOutOfRange(Rational),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
}

/// Raw description of a graph, before validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    /// `(edge id, endpoint0, endpoint1)`
    pub edges: Vec<(String, String, String)>,
}

impl GraphSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, id: impl Into<String>) -> Self {
        self.vertices.push(id.into());
        self
    }

    pub fn edge(mut self, id: impl Into<String>, a: impl Into<String>, b: impl Into<String>) -> Self {
        self.edges.push((id.into(), a.into(), b.into()));
        self
    }

    pub fn build(&self) -> Result<MultiGraph, GraphError> {
        build_graph(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRecord {
    pub name: String,
    pub ends: [VertexId; 2],
}

impl EdgeRecord {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }

    /// Parameter of endpoint `v` on this edge (`0` or `1`; `0` for loops).
    pub fn param_of(&self, v: VertexId) -> Option<Rational> {
        if self.ends[0] == v {
            Some(Rational::from_integer(0))
        } else if self.ends[1] == v {
            Some(Rational::from_integer(1))
        } else {
            None
        }
    }

    pub fn other(&self, v: VertexId) -> VertexId {
        if self.ends[0] == v {
            self.ends[1]
        } else {
            self.ends[0]
        }
    }
}

/// A validated finite multigraph.
#[derive(Debug, Clone)]
pub struct MultiGraph {
    vertex_names: Vec<String>,
    edges: Vec<EdgeRecord>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
    incidence: Vec<Vec<EdgeId>>,
    component: Vec<usize>,
    component_count: usize,
}

impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_names == other.vertex_names && self.edges == other.edges
    }
}

impl Eq for MultiGraph {}

pub fn is_valid_id(id: &str) -> bool {
    !id.is_empty()
        && id
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | '\''))
}

/// Validates a [`GraphSpec`] and computes its connected components.
pub fn build_graph(spec: &GraphSpec) -> Result<MultiGraph, GraphError> {
    let mut vertex_index = HashMap::with_capacity(spec.vertices.len());
    for (i, name) in spec.vertices.iter().enumerate() {
        if !is_valid_id(name) {
            return Err(GraphError::InvalidId(name.clone()));
        }
        if vertex_index.insert(name.clone(), VertexId(i)).is_some() {
            return Err(GraphError::DuplicateId(name.clone()));
        }
    }
    let mut edge_index = HashMap::with_capacity(spec.edges.len());
    let mut edges = Vec::with_capacity(spec.edges.len());
    for (i, (name, a, b)) in spec.edges.iter().enumerate() {
        if !is_valid_id(name) {
            return Err(GraphError::InvalidId(name.clone()));
        }
        if edge_index.insert(name.clone(), EdgeId(i)).is_some() {
            return Err(GraphError::DuplicateId(name.clone()));
        }
        let lookup = |v: &String| {
            vertex_index
                .get(v)
                .copied()
                .ok_or_else(|| GraphError::DanglingEndpoint { edge: name.clone(), vertex: v.clone() })
        };
        edges.push(EdgeRecord { name: name.clone(), ends: [lookup(a)?, lookup(b)?] });
    }
    Ok(MultiGraph::assemble(spec.vertices.clone(), edges, vertex_index, edge_index))
}

impl MultiGraph {
    fn assemble(
        vertex_names: Vec<String>,
        edges: Vec<EdgeRecord>,
        vertex_index: HashMap<String, VertexId>,
        edge_index: HashMap<String, EdgeId>,
    ) -> Self {
        let n = vertex_names.len();
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            incidence[e.ends[0].0].push(EdgeId(i));
            if !e.is_loop() {
                incidence[e.ends[1].0].push(EdgeId(i));
            }
        }
        let mut uf = UnionFind::new(n);
        for e in &edges {
            uf.union(e.ends[0].0, e.ends[1].0);
        }
        let mut label = HashMap::new();
        let mut component = vec![0; n];
        for (v, c) in component.iter_mut().enumerate() {
            let root = uf.find(v);
            let next = label.len();
            *c = *label.entry(root).or_insert(next);
        }
        MultiGraph {
            vertex_names,
            edges,
            vertex_index,
            edge_index,
            incidence,
            component,
            component_count: label.len(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edge(&self, e: EdgeId) -> &EdgeRecord {
        &self.edges[e.0]
    }

    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0].name
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    /// Edges incident to `v`, in id order; a loop is listed once.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.0]
    }

    /// Degree of `v`; a loop contributes 2.
    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v.0]
            .iter()
            .map(|&e| if self.edge(e).is_loop() { 2 } else { 1 })
            .sum()
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.component[v.0]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count <= 1
    }

    pub fn ensure_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected(self.component_count))
        }
    }

    /// First Betti number `|E| - |V| + #components`.
    pub fn betti1(&self) -> usize {
        self.edges.len() + self.component_count - self.vertex_names.len()
    }

    pub fn spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self.vertex_names.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| {
                    (
                        e.name.clone(),
                        self.vertex_names[e.ends[0].0].clone(),
                        self.vertex_names[e.ends[1].0].clone(),
                    )
                })
                .collect(),
        }
    }

    /// The subgraph spanned by the given vertices and edges, keeping names.
    ///
    /// Endpoints of listed edges are added automatically. The returned maps
    /// send subgraph ids to ids of `self`.
    pub fn subgraph(&self, vertices: &[VertexId], edges: &[EdgeId]) -> (MultiGraph, Vec<VertexId>, Vec<EdgeId>) {
        let mut keep_v = vec![false; self.vertex_count()];
        for v in vertices {
            keep_v[v.0] = true;
        }
        let mut keep_e = vec![false; self.edge_count()];
        for e in edges {
            keep_e[e.0] = true;
            for v in self.edge(*e).ends {
                keep_v[v.0] = true;
            }
        }
        let vmap: Vec<VertexId> = self.vertices().filter(|v| keep_v[v.0]).collect();
        let emap: Vec<EdgeId> = self.edge_ids().filter(|e| keep_e[e.0]).collect();
        let mut spec = GraphSpec::new();
        for v in &vmap {
            spec.vertices.push(self.vertex_name(*v).to_owned());
        }
        for e in &emap {
            let rec = self.edge(*e);
            spec.edges.push((
                rec.name.clone(),
                self.vertex_name(rec.ends[0]).to_owned(),
                self.vertex_name(rec.ends[1]).to_owned(),
            ));
        }
        let sub = build_graph(&spec).expect("subgraph of a valid graph is valid");
        (sub, vmap, emap)
    }

    /// Looks up a point given by names.
    pub fn point(&self, edge_or_vertex: &str, t: Option<Rational>) -> Result<GraphPoint, GraphError> {
        match t {
            None => self
                .vertex_by_name(edge_or_vertex)
                .map(GraphPoint::Vertex)
                .ok_or_else(|| GraphError::UnknownVertex(edge_or_vertex.to_owned())),
            Some(t) => {
                let e = self
                    .edge_by_name(edge_or_vertex)
                    .ok_or_else(|| GraphError::UnknownEdge(edge_or_vertex.to_owned()))?;
                GraphPoint::on_edge(self, e, t)
            }
        }
    }
}

/// LS-category of a connected graph: `0` for trees, `1` otherwise.
pub fn cat_graph(g: &MultiGraph) -> Result<usize, GraphError> {
    g.ensure_connected()?;
    Ok(usize::from(g.betti1() > 0))
}

/// Topological complexity of a connected graph: `0`, `1` or `2` by cycle count.
pub fn tc_graph(g: &MultiGraph) -> Result<usize, GraphError> {
    g.ensure_connected()?;
    Ok(g.betti1().min(2))
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Small named fixtures used throughout tests, benches and docs.
pub mod fixtures {
    use super::{GraphSpec, MultiGraph};

    pub fn point() -> MultiGraph {
        GraphSpec::new().vertex("v").build().unwrap()
    }

    pub fn path(n: usize) -> MultiGraph {
        let mut s = GraphSpec::new();
        for i in 0..n {
            s = s.vertex(format!("p{i}"));
        }
        for i in 1..n {
            s = s.edge(format!("q{i}"), format!("p{}", i - 1), format!("p{i}"));
        }
        s.build().unwrap()
    }

    pub fn cycle(n: usize) -> MultiGraph {
        let mut s = GraphSpec::new();
        for i in 0..n {
            s = s.vertex(format!("c{i}"));
        }
        for i in 0..n {
            s = s.edge(format!("d{i}"), format!("c{i}"), format!("c{}", (i + 1) % n));
        }
        s.build().unwrap()
    }

    pub fn circle_with_hair() -> MultiGraph {
        GraphSpec::new()
            .vertex("a")
            .vertex("b")
            .vertex("c")
            .vertex("h")
            .edge("ab", "a", "b")
            .edge("bc", "b", "c")
            .edge("ca", "c", "a")
            .edge("hair", "a", "h")
            .build()
            .unwrap()
    }

    pub fn figure_eight() -> MultiGraph {
        GraphSpec::new().vertex("v").edge("x", "v", "v").edge("y", "v", "v").build().unwrap()
    }

    pub fn theta() -> MultiGraph {
        GraphSpec::new()
            .vertex("a")
            .vertex("b")
            .edge("t0", "a", "b")
            .edge("t1", "a", "b")
            .edge("t2", "a", "b")
            .build()
            .unwrap()
    }

    pub fn complete(n: usize) -> MultiGraph {
        let mut s = GraphSpec::new();
        for i in 0..n {
            s = s.vertex(format!("k{i}"));
        }
        for i in 0..n {
            for j in i + 1..n {
                s = s.edge(format!("k{i}k{j}"), format!("k{i}"), format!("k{j}"));
            }
        }
        s.build().unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_is_valid() {
        let g = fixtures::point();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.betti1(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn theta_allows_parallel_edges() {
        let g = fixtures::theta();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.betti1(), 2);
    }

    #[test]
    fn dangling_endpoint_names_offender() {
        let err = GraphSpec::new().vertex("a").vertex("b").edge("e", "a", "c").build().unwrap_err();
        assert_eq!(err, GraphError::DanglingEndpoint { edge: "e".into(), vertex: "c".into() });
        assert!(err.to_string().contains("dangling endpoint"));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let err = GraphSpec::new().vertex("a").vertex("a").build().unwrap_err();
        assert_eq!(err, GraphError::DuplicateId("a".into()));
        let err = GraphSpec::new().vertex("a").edge("e", "a", "a").edge("e", "a", "a").build().unwrap_err();
        assert_eq!(err, GraphError::DuplicateId("e".into()));
    }

    #[test]
    fn betti_numbers() {
        assert_eq!(fixtures::cycle(3).betti1(), 1);
        assert_eq!(fixtures::complete(4).betti1(), 3);
        assert_eq!(fixtures::path(5).betti1(), 0);
        assert_eq!(fixtures::figure_eight().betti1(), 2);
        // forest with two components
        let f = GraphSpec::new().vertex("a").vertex("b").vertex("c").edge("e", "a", "b").build().unwrap();
        assert_eq!(f.component_count(), 2);
        assert_eq!(f.betti1(), 0);
    }

    #[test]
    fn loops_count_as_cycles() {
        let g = GraphSpec::new().vertex("v").edge("l", "v", "v").build().unwrap();
        assert_eq!(g.betti1(), 1);
        assert_eq!(g.degree(VertexId(0)), 2);
    }

    #[test]
    fn cat_and_tc_table() {
        assert_eq!(cat_graph(&fixtures::point()).unwrap(), 0);
        assert_eq!(cat_graph(&fixtures::path(4)).unwrap(), 0);
        assert_eq!(cat_graph(&fixtures::theta()).unwrap(), 1);
        assert_eq!(tc_graph(&fixtures::path(4)).unwrap(), 0);
        assert_eq!(tc_graph(&fixtures::cycle(5)).unwrap(), 1);
        assert_eq!(tc_graph(&fixtures::figure_eight()).unwrap(), 2);
        assert_eq!(tc_graph(&fixtures::complete(4)).unwrap(), 2);
    }

    #[test]
    fn disconnected_rejected() {
        let g = GraphSpec::new().vertex("a").vertex("b").build().unwrap();
        assert_eq!(cat_graph(&g), Err(GraphError::Disconnected(2)));
        assert_eq!(tc_graph(&g), Err(GraphError::Disconnected(2)));
    }
}
