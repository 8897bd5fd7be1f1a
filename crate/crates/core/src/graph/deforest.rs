use std::collections::BTreeSet;

use super::{EdgeId, GraphError, GraphPoint, MultiGraph, PLPath, Step, VertexId};

/// One elementary free-edge collapse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Collapse {
    pub edge: EdgeId,
    /// Endpoint that survives.
    pub retained: VertexId,
    /// Degree-one endpoint that disappears with the edge.
    pub removed: VertexId,
}

/// A strong deformation retraction of a graph onto its core, recorded as a
/// sequence of free-edge collapses.
///
/// The retraction `r` sends every collapsed edge to the image of its retained
/// endpoint and is the identity on the core. `slide(x)` is the straight-line
/// homotopy track from `x` to `r(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseHomotopy {
    graph: MultiGraph,
    core: MultiGraph,
    collapses: Vec<Collapse>,
    core_vertices: Vec<VertexId>,
    core_edges: Vec<EdgeId>,
    vertex_to_core: Vec<Option<VertexId>>,
    edge_to_core: Vec<Option<EdgeId>>,
    /// Image of every vertex of `graph` under `r`, in graph ids.
    vertex_image: Vec<VertexId>,
    /// Edge along which each removed vertex slides, towards the retained end.
    slide_edge: Vec<Option<(EdgeId, VertexId)>>,
}

/// Repeatedly collapses the free edge at the smallest degree-one vertex.
pub fn deforest(g: &MultiGraph) -> Result<CollapseHomotopy, GraphError> {
    g.ensure_connected()?;
    let n = g.vertex_count();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive_v = vec![true; n];
    let mut alive_e = vec![true; g.edge_count()];
    let mut leaves: BTreeSet<VertexId> = g.vertices().filter(|v| degree[v.0] == 1).collect();
    let mut remaining = n;
    let mut collapses = Vec::new();
    while let Some(leaf) = leaves.pop_first() {
        if remaining == 1 {
            break;
        }
        let edge = *g
            .incident(leaf)
            .iter()
            .find(|e| alive_e[e.0])
            .expect("degree-one vertex has a live edge");
        let retained = g.edge(edge).other(leaf);
        alive_e[edge.0] = false;
        alive_v[leaf.0] = false;
        remaining -= 1;
        degree[leaf.0] = 0;
        degree[retained.0] -= 1;
        collapses.push(Collapse { edge, retained, removed: leaf });
        if degree[retained.0] == 1 {
            leaves.insert(retained);
        }
    }
    let core_v: Vec<VertexId> = g.vertices().filter(|v| alive_v[v.0]).collect();
    let core_e: Vec<EdgeId> = g.edge_ids().filter(|e| alive_e[e.0]).collect();
    Ok(CollapseHomotopy::from_collapses(g, collapses, &core_v, &core_e))
}

impl CollapseHomotopy {
    /// The identity retraction of `g` onto itself.
    pub fn identity(g: &MultiGraph) -> Self {
        let v: Vec<VertexId> = g.vertices().collect();
        let e: Vec<EdgeId> = g.edge_ids().collect();
        Self::from_collapses(g, Vec::new(), &v, &e)
    }

    fn from_collapses(g: &MultiGraph, collapses: Vec<Collapse>, core_v: &[VertexId], core_e: &[EdgeId]) -> Self {
        let (core, core_vertices, core_edges) = g.subgraph(core_v, core_e);
        let mut vertex_to_core = vec![None; g.vertex_count()];
        for (i, v) in core_vertices.iter().enumerate() {
            vertex_to_core[v.0] = Some(VertexId(i));
        }
        let mut edge_to_core = vec![None; g.edge_count()];
        for (i, e) in core_edges.iter().enumerate() {
            edge_to_core[e.0] = Some(EdgeId(i));
        }
        let mut slide_edge = vec![None; g.vertex_count()];
        let mut vertex_image: Vec<VertexId> = g.vertices().collect();
        for c in collapses.iter().rev() {
            slide_edge[c.removed.0] = Some((c.edge, c.retained));
            vertex_image[c.removed.0] = vertex_image[c.retained.0];
        }
        CollapseHomotopy {
            graph: g.clone(),
            core,
            collapses,
            core_vertices,
            core_edges,
            vertex_to_core,
            edge_to_core,
            vertex_image,
            slide_edge,
        }
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn core(&self) -> &MultiGraph {
        &self.core
    }

    pub fn collapses(&self) -> &[Collapse] {
        &self.collapses
    }

    pub fn is_identity(&self) -> bool {
        self.collapses.is_empty()
    }

    /// Whether `e` survives in the core.
    pub fn edge_in_core(&self, e: EdgeId) -> bool {
        self.edge_to_core[e.0].is_some()
    }

    /// `r(x)` as a point of the ambient graph.
    pub fn retract(&self, p: &GraphPoint) -> GraphPoint {
        match *p {
            GraphPoint::Vertex(v) => GraphPoint::Vertex(self.vertex_image[v.0]),
            GraphPoint::Edge { edge, .. } if self.edge_to_core[edge.0].is_some() => *p,
            GraphPoint::Edge { edge, .. } => {
                let retained = self.collapsed_retained(edge);
                GraphPoint::Vertex(self.vertex_image[retained.0])
            }
        }
    }

    fn collapsed_retained(&self, edge: EdgeId) -> VertexId {
        self.collapses
            .iter()
            .find(|c| c.edge == edge)
            .map(|c| c.retained)
            .expect("non-core edge was collapsed")
    }

    /// `r(x)` expressed in core ids.
    pub fn retract_to_core(&self, p: &GraphPoint) -> GraphPoint {
        self.to_core(&self.retract(p)).expect("retraction lands in the core")
    }

    pub fn to_core(&self, p: &GraphPoint) -> Option<GraphPoint> {
        match *p {
            GraphPoint::Vertex(v) => self.vertex_to_core[v.0].map(GraphPoint::Vertex),
            GraphPoint::Edge { edge, t } => self.edge_to_core[edge.0].map(|e| GraphPoint::Edge { edge: e, t }),
        }
    }

    pub fn from_core(&self, p: &GraphPoint) -> GraphPoint {
        match *p {
            GraphPoint::Vertex(v) => GraphPoint::Vertex(self.core_vertices[v.0]),
            GraphPoint::Edge { edge, t } => GraphPoint::Edge { edge: self.core_edges[edge.0], t },
        }
    }

    pub fn core_edge_to_graph(&self, e: EdgeId) -> EdgeId {
        self.core_edges[e.0]
    }

    pub fn core_vertex_to_graph(&self, v: VertexId) -> VertexId {
        self.core_vertices[v.0]
    }

    pub fn graph_edge_to_core(&self, e: EdgeId) -> Option<EdgeId> {
        self.edge_to_core[e.0]
    }

    /// Image of a closed edge of the ambient graph: either a core edge or a vertex.
    pub fn edge_image(&self, e: EdgeId) -> Result<EdgeId, GraphPoint> {
        match self.edge_to_core[e.0] {
            Some(ce) => Ok(ce),
            None => Err(self.retract_to_core(&GraphPoint::Vertex(self.collapsed_retained(e)))),
        }
    }

    /// Maps a path in the core to the ambient graph.
    pub fn path_from_core(&self, path: &PLPath) -> PLPath {
        let steps = path.steps().iter().map(|s| Step { edge: self.core_edges[s.edge.0], ..*s });
        PLPath::from_steps(&self.graph, self.from_core(&path.start()), steps)
    }

    /// The deformation track `D(x, ·)` from `x` to `r(x)`.
    pub fn slide(&self, p: &GraphPoint) -> PLPath {
        let g = &self.graph;
        let mut path = PLPath::constant(*p);
        let mut at = match *p {
            GraphPoint::Vertex(v) => v,
            GraphPoint::Edge { edge, t } => {
                if self.edge_to_core[edge.0].is_some() {
                    return path;
                }
                let retained = self.collapsed_retained(edge);
                let to = g.edge(edge).param_of(retained).unwrap();
                path.push(g, Step { edge, from: t, to });
                retained
            }
        };
        while let Some((edge, next)) = self.slide_edge[at.0] {
            let rec = g.edge(edge);
            path.push(g, Step { edge, from: rec.param_of(at).unwrap(), to: rec.param_of(next).unwrap() });
            at = next;
        }
        path
    }
}
