//! Closed filtrations by categorical differences, and their products.

use thiserror::Error;

use super::region::{cell_representatives, CellSet};
use super::MotionPlan;
use crate::graph::{spanning_forest, GraphError, GraphPoint, MultiGraph, PLPath};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiltrationError {
    #[error("filtration has no levels")]
    Empty,
    #[error("level {0} is not closed")]
    NotClosed(usize),
    #[error("level {0} is not contained in the next level")]
    NotNested(usize),
    #[error("top level does not cover the space")]
    NotCovering,
    #[error("difference at level {0} is not categorical")]
    NotCategorical(usize),
    #[error("pieces of difference {0} are not separated")]
    NotSeparated(usize),
    #[error("difference {0} is not the union of its product pieces")]
    PieceMismatch(usize),
}

/// `F₀ ⊆ … ⊆ Fₙ = G` with each `Fᵢ \ Fᵢ₋₁` categorical in `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatFiltration {
    levels: Vec<CellSet>,
}

impl CatFiltration {
    pub fn new(levels: Vec<CellSet>) -> Self {
        CatFiltration { levels }
    }

    pub fn levels(&self) -> &[CellSet] {
        &self.levels
    }

    /// Number of levels minus one.
    pub fn length(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    /// `Fᵢ \ Fᵢ₋₁`.
    pub fn difference(&self, i: usize) -> CellSet {
        match i {
            0 => self.levels[0].clone(),
            _ => self.levels[i].minus(&self.levels[i - 1]),
        }
    }

    pub fn validate(&self, g: &MultiGraph) -> Result<(), FiltrationError> {
        if self.levels.is_empty() {
            return Err(FiltrationError::Empty);
        }
        for (i, l) in self.levels.iter().enumerate() {
            if !l.is_closed(g) {
                return Err(FiltrationError::NotClosed(i));
            }
        }
        for i in 0..self.length() {
            if !self.levels[i].is_subset(&self.levels[i + 1]) {
                return Err(FiltrationError::NotNested(i));
            }
        }
        if !CellSet::all(g, "").is_subset(self.levels.last().unwrap()) {
            return Err(FiltrationError::NotCovering);
        }
        for i in 0..self.levels.len() {
            if !self.difference(i).is_categorical(g) {
                return Err(FiltrationError::NotCategorical(i));
            }
        }
        Ok(())
    }
}

/// `[G]` for a tree, `[T, G]` otherwise, with `T` the canonical spanning tree.
pub fn cat_filtration(g: &MultiGraph) -> Result<CatFiltration, GraphError> {
    g.ensure_connected()?;
    let all = CellSet::all(g, "G");
    if g.betti1() == 0 {
        return Ok(CatFiltration::new(vec![all]));
    }
    let t = CellSet::forest(g, &spanning_forest(g), "T");
    Ok(CatFiltration::new(vec![t, all]))
}

/// `H_k = ⋃_{i+j=k} Fᵢ × Gⱼ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductFiltration {
    left: CatFiltration,
    right: CatFiltration,
}

impl ProductFiltration {
    pub fn length(&self) -> usize {
        self.left.length() + self.right.length()
    }

    /// Index pairs `(i, j)` with `i + j = k`.
    pub fn pairs(&self, k: usize) -> Vec<(usize, usize)> {
        (0..=self.left.length().min(k)).filter(|&i| k - i <= self.right.length()).map(|i| (i, k - i)).collect()
    }

    pub fn contains(&self, k: usize, p: &GraphPoint, q: &GraphPoint) -> bool {
        self.pairs(k).iter().any(|&(i, j)| self.left.levels[i].contains(p) && self.right.levels[j].contains(q))
    }

    fn in_pieces(&self, k: usize, p: &GraphPoint, q: &GraphPoint) -> bool {
        self.pairs(k).iter().any(|&(i, j)| self.left.difference(i).contains(p) && self.right.difference(j).contains(q))
    }

    /// Human-readable level descriptions.
    pub fn describe(&self) -> Vec<String> {
        (0..=self.length())
            .map(|k| {
                self.pairs(k)
                    .iter()
                    .map(|&(i, j)| format!("{} x {}", self.left.levels[i].label(), self.right.levels[j].label()))
                    .collect::<Vec<_>>()
                    .join(" u ")
            })
            .collect()
    }

    /// Exhaustive check over pairs of cells.
    pub fn validate(&self, x: &MultiGraph, y: &MultiGraph) -> Result<(), FiltrationError> {
        let n = self.length();
        let px = cell_representatives(x);
        let py = cell_representatives(y);
        for p in &px {
            for q in &py {
                let member: Vec<bool> = (0..=n).map(|k| self.contains(k, p, q)).collect();
                if let Some(k) = (0..n).find(|&k| member[k] && !member[k + 1]) {
                    return Err(FiltrationError::NotNested(k));
                }
                if !member[n] {
                    return Err(FiltrationError::NotCovering);
                }
                for k in 0..=n {
                    let diff = member[k] && (k == 0 || !member[k - 1]);
                    if diff != self.in_pieces(k, p, q) {
                        return Err(FiltrationError::PieceMismatch(k));
                    }
                }
            }
        }
        for k in 0..=n {
            let pieces: Vec<(CellSet, CellSet)> =
                self.pairs(k).iter().map(|&(i, j)| (self.left.difference(i), self.right.difference(j))).collect();
            for (a, b) in &pieces {
                if a.is_empty() || b.is_empty() {
                    continue;
                }
                if !a.is_categorical(x) || !b.is_categorical(y) {
                    return Err(FiltrationError::NotCategorical(k));
                }
            }
            for (s, (a, b)) in pieces.iter().enumerate() {
                for (c, d) in &pieces[s + 1..] {
                    let apart = |a: &CellSet, b: &CellSet, c: &CellSet, d: &CellSet| {
                        !a.closure(x).intersects(c) || !b.closure(y).intersects(d)
                    };
                    if !apart(a, b, c, d) || !apart(c, d, a, b) {
                        return Err(FiltrationError::NotSeparated(k));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Validates both factors and forms their product.
pub fn product_cat_filtration(
    x: &MultiGraph,
    f: &CatFiltration,
    y: &MultiGraph,
    g: &CatFiltration,
) -> Result<ProductFiltration, FiltrationError> {
    f.validate(x)?;
    g.validate(y)?;
    Ok(ProductFiltration { left: f.clone(), right: g.clone() })
}

/// A motion plan on `X × Y` from plans on each factor; the pair lands in
/// stratum `i + j`.
#[derive(Debug, Clone)]
pub struct ProductPlan {
    pub left: MotionPlan,
    pub right: MotionPlan,
}

impl ProductPlan {
    pub fn strata_count(&self) -> usize {
        self.left.strata().len() + self.right.strata().len() - 1
    }

    pub fn execute(&self, from: (GraphPoint, GraphPoint), to: (GraphPoint, GraphPoint)) -> (usize, (PLPath, PLPath)) {
        let (i, a) = self.left.execute(&from.0, &to.0);
        let (j, b) = self.right.execute(&from.1, &to.1);
        (i + j, (a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cat_graph, fixtures, VertexId};
    use crate::planner::plan_graph;

    #[test]
    fn graph_filtrations_are_valid() {
        for g in [fixtures::point(), fixtures::path(4), fixtures::cycle(3), fixtures::figure_eight(), fixtures::complete(4)] {
            let f = cat_filtration(&g).unwrap();
            f.validate(&g).unwrap();
            assert_eq!(f.length(), cat_graph(&g).unwrap());
        }
    }

    #[test]
    fn whole_graph_is_not_categorical() {
        let g = fixtures::cycle(3);
        let f = CatFiltration::new(vec![CellSet::all(&g, "G")]);
        assert_eq!(f.validate(&g), Err(FiltrationError::NotCategorical(0)));
    }

    #[test]
    fn open_level_rejected() {
        let g = fixtures::path(2);
        let f = CatFiltration::new(vec![CellSet::from_cells(&g, "e", [], g.edge_ids()), CellSet::all(&g, "G")]);
        assert_eq!(f.validate(&g), Err(FiltrationError::NotClosed(0)));
    }

    #[test]
    fn circle_squared() {
        let g = fixtures::cycle(4);
        let f = cat_filtration(&g).unwrap();
        let p = product_cat_filtration(&g, &f, &g, &f).unwrap();
        assert_eq!(p.length(), 2);
        p.validate(&g, &g).unwrap();
        assert_eq!(p.pairs(1), vec![(0, 1), (1, 0)]);
        assert_eq!(p.describe()[1], "T x G u G x T");
    }

    #[test]
    fn trivial_product() {
        let g = fixtures::point();
        let f = cat_filtration(&g).unwrap();
        let p = product_cat_filtration(&g, &f, &g, &f).unwrap();
        assert_eq!(p.length(), 0);
        p.validate(&g, &g).unwrap();
    }

    #[test]
    fn product_plan_adds_indices() {
        let c = fixtures::cycle(4);
        let t = fixtures::path(2);
        let pp = ProductPlan { left: plan_graph(&c).unwrap(), right: plan_graph(&t).unwrap() };
        assert_eq!(pp.strata_count(), 2);
        let v = GraphPoint::Vertex(VertexId(0));
        let w = GraphPoint::Vertex(VertexId(2));
        let (k, (a, b)) = pp.execute((v, v), (w, GraphPoint::Vertex(VertexId(1))));
        assert_eq!(k, 0);
        assert_eq!((a.end(), b.end()), (w, GraphPoint::Vertex(VertexId(1))));
    }
}
