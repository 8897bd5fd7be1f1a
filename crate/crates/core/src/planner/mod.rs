//! Stratified motion plans on connected graphs.
//!
//! A [`MotionPlan`] is a nested sequence of closed regions
//! `F₀ ⊆ F₁ ⊆ … ⊆ Fₙ = G × G` with one rule per difference `Fⱼ \ Fⱼ₋₁`.
//! [`plan_graph`] always produces `tc_graph(G) + 1` strata.

pub mod cycle;
pub mod filtration;
pub mod region;
pub mod verify;

use std::sync::Arc;

use thiserror::Error;

use crate::graph::{
    deforest, spanning_forest, tree_path, CollapseHomotopy, GraphError, GraphPoint, MultiGraph, PLPath,
    SpanningForest, Step,
};
pub use cycle::CycleEmbedding;
pub use filtration::{cat_filtration, product_cat_filtration, CatFiltration, ProductFiltration, ProductPlan};
pub use region::{Cell, CellSet, Primitive, Region};
pub use verify::{verify_plan, verify_plan_sequential, CheckResult, VerifyParams, VerifyReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has a cycle")]
    HasCycle,
    #[error("graph is not a single cycle")]
    NotACycle,
    #[error("homotopy does not retract onto the plan's graph")]
    CoreMismatch,
}

/// How a rule turns a pair of points into a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanRule {
    /// Unique reduced path in a spanning tree.
    Tree(Arc<SpanningForest>),
    /// Forward rotation by half the perimeter.
    CycleRotate(Arc<CycleEmbedding>),
    /// The shorter of the two arcs.
    CycleGeodesic(Arc<CycleEmbedding>),
    /// Slide each coordinate off a non-tree edge to its smaller endpoint,
    /// then follow the tree.
    EdgeEvacuate(Arc<SpanningForest>),
    /// `slide(x) · inner(r(x), r(y)) · slide(y)⁻¹`; `inner` runs on the core.
    Lifted { map: Arc<CollapseHomotopy>, inner: Box<PlanRule> },
}

impl PlanRule {
    pub fn name(&self) -> String {
        match self {
            PlanRule::Tree(_) => "tree".into(),
            PlanRule::CycleRotate(_) => "cycle-rotate".into(),
            PlanRule::CycleGeodesic(_) => "cycle-geodesic".into(),
            PlanRule::EdgeEvacuate(_) => "edge-evacuate".into(),
            PlanRule::Lifted { inner, .. } => format!("lifted({})", inner.name()),
        }
    }

    pub fn apply(&self, g: &MultiGraph, x: &GraphPoint, y: &GraphPoint) -> PLPath {
        match self {
            PlanRule::Tree(forest) => tree_path(g, forest, *x, *y).expect("tree rule outside its stratum"),
            PlanRule::CycleRotate(c) => {
                let s = c.position(x).expect("point off the cycle");
                c.arc(g, s, c.half_length(), true)
            }
            PlanRule::CycleGeodesic(c) => {
                let s = c.position(x).expect("point off the cycle");
                let t = c.position(y).expect("point off the cycle");
                let d = c.wrap(t - s);
                if d <= c.half_length() {
                    c.arc(g, s, d, true)
                } else {
                    c.arc(g, s, c.length() - d, false)
                }
            }
            PlanRule::EdgeEvacuate(forest) => {
                let ex = evacuate(g, forest, x);
                let ey = evacuate(g, forest, y);
                let middle = tree_path(g, forest, ex.end(), ey.end()).expect("evacuation leaves the tree");
                ex.then(g, &middle).then(g, &ey.reversed())
            }
            PlanRule::Lifted { map, inner } => {
                let core = map.core();
                let core_path = inner.apply(core, &map.retract_to_core(x), &map.retract_to_core(y));
                map.slide(x).then(g, &map.path_from_core(&core_path)).then(g, &map.slide(y).reversed())
            }
        }
    }
}

/// Path from `p` to the smaller endpoint of its edge, or constant on the tree.
fn evacuate(g: &MultiGraph, forest: &SpanningForest, p: &GraphPoint) -> PLPath {
    match *p {
        GraphPoint::Edge { edge, t } if !forest.contains_edge(edge) => {
            let [a, b] = g.edge(edge).ends;
            let to = g.edge(edge).param_of(a.min(b)).unwrap();
            PLPath::from_steps(g, *p, [Step { edge, from: t, to }])
        }
        _ => PLPath::constant(*p),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub region: Region,
    pub rule: PlanRule,
}

/// Deliberate corruptions, for negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Every returned path is reversed.
    SwapEndpoints,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotionPlan {
    graph: MultiGraph,
    strata: Vec<Stratum>,
    fault: Option<Fault>,
}

impl MotionPlan {
    pub fn new(graph: MultiGraph, strata: Vec<Stratum>) -> Self {
        MotionPlan { graph, strata, fault: None }
    }

    pub fn with_fault(mut self, fault: Fault) -> Self {
        self.fault = Some(fault);
        self
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    /// Index of the smallest stratum containing the pair.
    pub fn locate(&self, x: &GraphPoint, y: &GraphPoint) -> Option<usize> {
        self.strata.iter().position(|s| s.region.contains(&self.graph, x, y))
    }

    /// Applies rule `j` without checking membership.
    pub fn run_rule(&self, j: usize, x: &GraphPoint, y: &GraphPoint) -> PLPath {
        let path = self.strata[j].rule.apply(&self.graph, x, y);
        match self.fault {
            Some(Fault::SwapEndpoints) => path.reversed(),
            None => path,
        }
    }

    /// Panics if the pair is not covered, which cannot happen for plans built
    /// by this module.
    pub fn execute(&self, x: &GraphPoint, y: &GraphPoint) -> (usize, PLPath) {
        let j = self.locate(x, y).expect("pair not covered by the plan");
        (j, self.run_rule(j, x, y))
    }
}

pub fn execute(p: &MotionPlan, x: &GraphPoint, y: &GraphPoint) -> (usize, PLPath) {
    p.execute(x, y)
}

pub fn plan_tree(t: &MultiGraph) -> Result<MotionPlan, PlanError> {
    t.ensure_connected()?;
    if t.betti1() != 0 {
        return Err(PlanError::HasCycle);
    }
    let forest = Arc::new(spanning_forest(t));
    let all = CellSet::all(t, "G");
    Ok(MotionPlan::new(
        t.clone(),
        vec![Stratum { region: Region::product(all.clone(), all), rule: PlanRule::Tree(forest) }],
    ))
}

pub fn plan_circle(c: &MultiGraph) -> Result<MotionPlan, PlanError> {
    let cycle = Arc::new(CycleEmbedding::new(c).map_err(|_| PlanError::NotACycle)?);
    let all = CellSet::all(c, "C");
    let antipodal = Region::new(vec![Primitive::Shift { cycle: cycle.clone(), offset: cycle.half_length() }]);
    Ok(MotionPlan::new(
        c.clone(),
        vec![
            Stratum { region: antipodal, rule: PlanRule::CycleRotate(cycle.clone()) },
            Stratum { region: Region::product(all.clone(), all), rule: PlanRule::CycleGeodesic(cycle) },
        ],
    ))
}

/// Transports a plan on the core of `h` to the graph `h` retracts.
pub fn lift_plan(p: &MotionPlan, h: &Arc<CollapseHomotopy>) -> Result<MotionPlan, PlanError> {
    if p.graph() != h.core() {
        return Err(PlanError::CoreMismatch);
    }
    if h.is_identity() {
        return Ok(p.clone());
    }
    let strata = p
        .strata()
        .iter()
        .map(|s| Stratum {
            region: Region::new(vec![Primitive::Preimage { map: h.clone(), inner: s.region.clone() }]),
            rule: PlanRule::Lifted { map: h.clone(), inner: Box::new(s.rule.clone()) },
        })
        .collect();
    Ok(MotionPlan { graph: h.graph().clone(), strata, fault: p.fault })
}

pub fn plan_graph(g: &MultiGraph) -> Result<MotionPlan, PlanError> {
    g.ensure_connected()?;
    match g.betti1() {
        0 => plan_tree(g),
        1 => {
            let h = Arc::new(deforest(g)?);
            let core = plan_circle(h.core())?;
            lift_plan(&core, &h)
        }
        _ => {
            let forest = Arc::new(spanning_forest(g));
            let t = CellSet::forest(g, &forest, "T");
            let all = CellSet::all(g, "G");
            let evac = PlanRule::EdgeEvacuate(forest.clone());
            Ok(MotionPlan::new(
                g.clone(),
                vec![
                    Stratum { region: Region::product(t.clone(), t.clone()), rule: PlanRule::Tree(forest) },
                    Stratum {
                        region: Region::new(vec![
                            Primitive::Product(all.clone(), t.clone()),
                            Primitive::Product(t, all.clone()),
                        ]),
                        rule: evac.clone(),
                    },
                    Stratum { region: Region::product(all.clone(), all), rule: evac },
                ],
            ))
        }
    }
}
