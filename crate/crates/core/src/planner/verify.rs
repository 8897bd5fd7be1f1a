//! Sampling verifier for motion plans.
//!
//! Every sample `i` draws from its own ChaCha8 stream, so the report does not
//! depend on how samples are scheduled. Continuity is only compared between a
//! sample and its partner when the straight segment joining them stays inside
//! one stratum difference; membership along the segment is decided exactly
//! from the region breakpoints.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use super::region::{cell_representatives, evaluation_points, Segment, Track, SAMPLE_DENOM};
use super::MotionPlan;
use crate::graph::{tc_graph, GraphPoint, MultiGraph, PLPath, PathMetric};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyParams {
    pub samples: usize,
    pub delta: f64,
    pub eps: f64,
    pub time_samples: usize,
    pub seed: u64,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams { samples: 10_000, delta: 1e-3, eps: 5e-2, time_samples: 32, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    fn new(name: &str, witness: Option<String>) -> Self {
        CheckResult { name: name.into(), passed: witness.is_none(), witness }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub strata_count: usize,
    pub expected_strata: usize,
    pub samples: usize,
    pub continuity_pairs: usize,
    pub max_deviation: f64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Default)]
struct Outcome {
    coverage: Option<String>,
    section: Option<String>,
    continuity: Option<String>,
    compared: bool,
    deviation: f64,
}

struct Ctx<'a> {
    plan: &'a MotionPlan,
    metric: PathMetric,
    params: VerifyParams,
    spread: i64,
}

fn pair_str(g: &MultiGraph, x: &GraphPoint, y: &GraphPoint) -> String {
    format!("({}, {})", x.display(g), y.display(g))
}

impl Ctx<'_> {
    fn segment(&self, i: usize) -> Segment {
        let g = self.plan.graph();
        let mut rng = ChaCha8Rng::seed_from_u64(self.params.seed);
        rng.set_stream(i as u64);
        if rng.random_bool(0.5) {
            (Track::random(g, &mut rng, self.spread), Track::random(g, &mut rng, self.spread))
        } else {
            let strata = self.plan.strata();
            let j = rng.random_range(0..strata.len());
            strata[j].region.sample(g, &mut rng, self.spread)
        }
    }

    fn section(&self, x: &GraphPoint, y: &GraphPoint, path: &PLPath) -> Option<String> {
        let g = self.plan.graph();
        (path.start() != *x || path.end() != *y || !path.is_well_formed(g)).then(|| {
            format!("{} -> path from {} to {}", pair_str(g, x, y), path.start().display(g), path.end().display(g))
        })
    }

    /// Whether every point of the segment lies in difference `j`.
    fn segment_in_difference(&self, seg: &Segment, j: usize) -> bool {
        let g = self.plan.graph();
        let mut bps = Vec::new();
        for s in &self.plan.strata()[..=j] {
            s.region.segment_breakpoints(seg, &mut bps);
        }
        evaluation_points(bps).into_iter().all(|s| self.plan.locate(&seg.0.at(g, s), &seg.1.at(g, s)) == Some(j))
    }

    fn deviation(&self, a: &PLPath, b: &PLPath) -> f64 {
        let n = self.params.time_samples.max(2);
        (0..n)
            .map(|k| {
                let tau = k as f64 / (n - 1) as f64;
                self.metric.distance(a.eval_f64(tau), b.eval_f64(tau))
            })
            .fold(0.0, f64::max)
    }

    fn run(&self, i: usize) -> Outcome {
        let g = self.plan.graph();
        let seg = self.segment(i);
        let (x0, y0) = (seg.0.start(g), seg.1.start(g));
        let (x1, y1) = (seg.0.end(g), seg.1.end(g));
        let mut out = Outcome::default();
        let (Some(j0), Some(j1)) = (self.plan.locate(&x0, &y0), self.plan.locate(&x1, &y1)) else {
            let (x, y) = if self.plan.locate(&x0, &y0).is_none() { (x0, y0) } else { (x1, y1) };
            out.coverage = Some(pair_str(g, &x, &y));
            return out;
        };
        let p0 = self.plan.run_rule(j0, &x0, &y0);
        let p1 = self.plan.run_rule(j1, &x1, &y1);
        out.section = self.section(&x0, &y0, &p0).or_else(|| self.section(&x1, &y1, &p1));
        let close = self.metric.point_distance(x0, x1).max(self.metric.point_distance(y0, y1)) < self.params.delta;
        if j0 == j1 && close && self.segment_in_difference(&seg, j0) {
            out.compared = true;
            out.deviation = self.deviation(&p0, &p1);
            if out.deviation > self.params.eps {
                out.continuity = Some(format!(
                    "stratum {j0}: {} vs {} deviate by {:.4}",
                    pair_str(g, &x0, &y0),
                    pair_str(g, &x1, &y1),
                    out.deviation
                ));
            }
        }
        out
    }
}

fn structural_checks(plan: &MotionPlan) -> Vec<CheckResult> {
    let g = plan.graph();
    let strata = plan.strata();
    let closed = strata.iter().position(|s| !s.region.is_closed(g)).map(|j| format!("stratum {j}"));
    let cells = cell_representatives(g);
    let mut reps: Vec<(GraphPoint, GraphPoint)> = cells.iter().flat_map(|x| cells.iter().map(move |y| (*x, *y))).collect();
    for s in strata {
        reps.extend(s.region.representatives(g));
    }
    let mut nesting = None;
    let mut coverage = None;
    for (x, y) in &reps {
        let member: Vec<bool> = strata.iter().map(|s| s.region.contains(g, x, y)).collect();
        if nesting.is_none() {
            if let Some(j) = (0..member.len().saturating_sub(1)).find(|&j| member[j] && !member[j + 1]) {
                nesting = Some(format!("stratum {j}: {}", pair_str(g, x, y)));
            }
        }
        if coverage.is_none() && !member.last().copied().unwrap_or(false) {
            coverage = Some(pair_str(g, x, y));
        }
    }
    vec![CheckResult::new("closed", closed), CheckResult::new("nesting", nesting), CheckResult::new("coverage", coverage)]
}

fn verify(plan: &MotionPlan, g: &MultiGraph, params: &VerifyParams, parallel: bool) -> VerifyReport {
    let ctx = Ctx {
        plan,
        metric: PathMetric::new(plan.graph()),
        params: *params,
        spread: ((params.delta / 2.0) * SAMPLE_DENOM as f64).ceil() as i64 - 1,
    };
    let outcomes: Vec<Outcome> = if parallel {
        #[cfg(feature = "parallel")]
        {
            (0..params.samples).into_par_iter().map(|i| ctx.run(i)).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            (0..params.samples).map(|i| ctx.run(i)).collect()
        }
    } else {
        (0..params.samples).map(|i| ctx.run(i)).collect()
    };

    let mut checks = structural_checks(plan);
    let first = |f: fn(&Outcome) -> &Option<String>| outcomes.iter().find_map(|o| f(o).clone());
    if let Some(w) = first(|o| &o.coverage) {
        let cov = checks.iter_mut().find(|c| c.name == "coverage").unwrap();
        if cov.passed {
            *cov = CheckResult::new("coverage", Some(w));
        }
    }
    checks.push(CheckResult::new("section", first(|o| &o.section)));
    checks.push(CheckResult::new("continuity", first(|o| &o.continuity)));
    let expected = tc_graph(g).map(|t| t + 1).unwrap_or(0);
    let count = plan.strata().len();
    checks.push(CheckResult::new(
        "strata-count",
        (count != expected).then(|| format!("{count} strata, expected {expected}")),
    ));
    VerifyReport {
        passed: checks.iter().all(|c| c.passed),
        strata_count: count,
        expected_strata: expected,
        samples: params.samples,
        continuity_pairs: outcomes.iter().filter(|o| o.compared).count(),
        max_deviation: outcomes.iter().map(|o| o.deviation).fold(0.0, f64::max),
        checks,
    }
}

/// Verifies a plan for `g`, evaluating samples in parallel when the
/// `parallel` feature is enabled.
pub fn verify_plan(plan: &MotionPlan, g: &MultiGraph, params: &VerifyParams) -> VerifyReport {
    verify(plan, g, params, true)
}

pub fn verify_plan_sequential(plan: &MotionPlan, g: &MultiGraph, params: &VerifyParams) -> VerifyReport {
    verify(plan, g, params, false)
}
