use num_traits::{Signed, ToPrimitive, Zero};

use super::metric::FloatPoint;
use super::{EdgeId, GraphPoint, MultiGraph, Rational};

/// One monotone traversal of part of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub edge: EdgeId,
    pub from: Rational,
    pub to: Rational,
}

impl Step {
    pub fn length(&self) -> Rational {
        (self.to - self.from).abs()
    }

    pub fn reversed(&self) -> Step {
        Step { edge: self.edge, from: self.to, to: self.from }
    }
}

/// A piecewise-affine path, uniformly parametrized by arclength over `[0, 1]`.
///
/// A constant path has no steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLPath {
    start: GraphPoint,
    end: GraphPoint,
    steps: Vec<Step>,
}

impl PLPath {
    pub fn constant(p: GraphPoint) -> Self {
        PLPath { start: p, end: p, steps: Vec::new() }
    }

    /// Builds a path from steps, dropping degenerate ones.
    ///
    /// Panics if consecutive steps do not join up or a step is not inside its edge.
    pub fn from_steps(g: &MultiGraph, start: GraphPoint, steps: impl IntoIterator<Item = Step>) -> Self {
        let mut path = PLPath::constant(start);
        for s in steps {
            path.push(g, s);
        }
        path
    }

    /// Appends a step; it must start where the path currently ends.
    pub fn push(&mut self, g: &MultiGraph, step: Step) {
        if step.from == step.to {
            return;
        }
        let lo = Rational::zero();
        let hi = Rational::from_integer(1);
        assert!(
            step.from >= lo && step.from <= hi && step.to >= lo && step.to <= hi,
            "step parameters outside the edge"
        );
        let begin = GraphPoint::at(g, step.edge, step.from);
        assert_eq!(begin, self.end, "discontinuous path step");
        // merge with a previous step continuing along the same edge
        if let Some(last) = self.steps.last_mut() {
            if last.edge == step.edge
                && last.to == step.from
                && (last.to - last.from).signum() == (step.to - step.from).signum()
            {
                last.to = step.to;
                if last.from == last.to {
                    self.steps.pop();
                }
                self.end = GraphPoint::at(g, step.edge, step.to);
                return;
            }
        }
        self.steps.push(step);
        self.end = GraphPoint::at(g, step.edge, step.to);
    }

    pub fn append(&mut self, g: &MultiGraph, other: &PLPath) {
        assert_eq!(self.end, other.start, "concatenating paths that do not meet");
        for s in &other.steps {
            self.push(g, *s);
        }
    }

    pub fn then(mut self, g: &MultiGraph, other: &PLPath) -> Self {
        self.append(g, other);
        self
    }

    pub fn reversed(&self) -> PLPath {
        PLPath {
            start: self.end,
            end: self.start,
            steps: self.steps.iter().rev().map(Step::reversed).collect(),
        }
    }

    pub fn start(&self) -> GraphPoint {
        self.start
    }

    pub fn end(&self) -> GraphPoint {
        self.end
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_constant(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn length(&self) -> Rational {
        self.steps.iter().map(Step::length).sum()
    }

    /// Exact evaluation at time `tau ∈ [0, 1]`.
    pub fn eval(&self, g: &MultiGraph, tau: Rational) -> GraphPoint {
        if self.steps.is_empty() || tau <= Rational::zero() {
            return self.start;
        }
        if tau >= Rational::from_integer(1) {
            return self.end;
        }
        let mut remaining = tau * self.length();
        for s in &self.steps {
            let len = s.length();
            if remaining <= len {
                let t = if s.to > s.from { s.from + remaining } else { s.from - remaining };
                return GraphPoint::at(g, s.edge, t);
            }
            remaining -= len;
        }
        self.end
    }

    /// Floating-point evaluation, used only for sampling-based checks.
    pub fn eval_f64(&self, tau: f64) -> FloatPoint {
        if self.steps.is_empty() || tau <= 0.0 {
            return FloatPoint::from(self.start);
        }
        if tau >= 1.0 {
            return FloatPoint::from(self.end);
        }
        let lens: Vec<f64> = self.steps.iter().map(|s| s.length().to_f64().unwrap_or(0.0)).collect();
        let total: f64 = lens.iter().sum();
        let mut remaining = tau * total;
        for (s, len) in self.steps.iter().zip(&lens) {
            if remaining <= *len {
                let from = s.from.to_f64().unwrap_or(0.0);
                let to = s.to.to_f64().unwrap_or(0.0);
                let t = if to > from { from + remaining } else { from - remaining };
                return FloatPoint::OnEdge(s.edge, t.clamp(0.0, 1.0));
            }
            remaining -= len;
        }
        FloatPoint::from(self.end)
    }

    /// `true` when no step immediately retraces the previous one.
    pub fn is_reduced(&self) -> bool {
        self.steps.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            !(a.edge == b.edge && (a.to - a.from).signum() != (b.to - b.from).signum())
        })
    }

    /// Structural validity: steps join up and the declared endpoints match.
    pub fn is_well_formed(&self, g: &MultiGraph) -> bool {
        let mut at = self.start;
        for s in &self.steps {
            if s.from == s.to || GraphPoint::at(g, s.edge, s.from) != at {
                return false;
            }
            at = GraphPoint::at(g, s.edge, s.to);
        }
        at == self.end
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{fixtures, VertexId};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn length_and_eval() {
        let g = fixtures::path(3);
        let p = PLPath::from_steps(
            &g,
            GraphPoint::Vertex(VertexId(0)),
            [
                Step { edge: EdgeId(0), from: q(0, 1), to: q(1, 1) },
                Step { edge: EdgeId(1), from: q(0, 1), to: q(1, 2) },
            ],
        );
        assert_eq!(p.length(), q(3, 2));
        assert_eq!(p.eval(&g, q(0, 1)), GraphPoint::Vertex(VertexId(0)));
        assert_eq!(p.eval(&g, q(2, 3)), GraphPoint::Vertex(VertexId(1)));
        assert_eq!(p.eval(&g, q(1, 1)), GraphPoint::Edge { edge: EdgeId(1), t: q(1, 2) });
        assert!(p.is_well_formed(&g));
    }

    #[test]
    fn consecutive_steps_on_one_edge_merge() {
        let g = fixtures::path(2);
        let p = PLPath::from_steps(
            &g,
            GraphPoint::Vertex(VertexId(0)),
            [
                Step { edge: EdgeId(0), from: q(0, 1), to: q(1, 3) },
                Step { edge: EdgeId(0), from: q(1, 3), to: q(2, 3) },
            ],
        );
        assert_eq!(p.steps().len(), 1);
        assert_eq!(p.length(), q(2, 3));
    }

    #[test]
    fn reversal_is_involutive() {
        let g = fixtures::path(3);
        let p = PLPath::from_steps(
            &g,
            GraphPoint::Edge { edge: EdgeId(0), t: q(1, 4) },
            [
                Step { edge: EdgeId(0), from: q(1, 4), to: q(1, 1) },
                Step { edge: EdgeId(1), from: q(0, 1), to: q(1, 1) },
            ],
        );
        assert_eq!(p.reversed().reversed(), p);
        assert_eq!(p.reversed().start(), p.end());
    }

    #[test]
    #[should_panic(expected = "discontinuous")]
    fn discontinuity_panics() {
        let g = fixtures::path(3);
        PLPath::from_steps(
            &g,
            GraphPoint::Vertex(VertexId(0)),
            [Step { edge: EdgeId(1), from: q(0, 1), to: q(1, 1) }],
        );
    }
}
