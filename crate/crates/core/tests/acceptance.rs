//! Acceptance criteria 1–8, one PASS/FAIL line each.
//!
//! Oracles here are computed independently of the library: Betti numbers by
//! breadth-first search, wild towers by iterating `wild_set` directly.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wildcat::cohomology::{tc_lower_bound, zero_divisor_cuplength};
use wildcat::graph::{cat_graph, fixtures, tc_graph, MultiGraph};
use wildcat::planner::{cat_filtration, plan_graph, product_cat_filtration, verify_plan, VerifyParams};
use wildcat::random::{random_expr, random_graph};
use wildcat::wild::{self, examples, Count, SpaceExpr};

/// `|E| − |V| + #components`, components by BFS.
fn betti1_oracle(g: &MultiGraph) -> usize {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.ends[0].0].push(e.ends[1].0);
        adj[e.ends[1].0].push(e.ends[0].0);
    }
    let mut seen = vec![false; n];
    let mut comps = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        comps += 1;
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    g.edge_count() + comps - n
}

fn fixture_corpus() -> Vec<(String, MultiGraph)> {
    vec![
        ("point".into(), fixtures::point()),
        ("path".into(), fixtures::path(3)),
        ("C3".into(), fixtures::cycle(3)),
        ("circle-with-hair".into(), fixtures::circle_with_hair()),
        ("figure-eight".into(), fixtures::figure_eight()),
        ("theta".into(), fixtures::theta()),
        ("K4".into(), fixtures::complete(4)),
    ]
}

fn random_graphs(seed: u64, n: usize) -> Vec<(String, MultiGraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|i| (format!("random #{i}"), random_graph(&mut rng, 20))).collect()
}

fn random_exprs(seed: u64, n: usize, max_depth: usize) -> Vec<SpaceExpr> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|i| random_expr(&mut rng, i % (max_depth + 1))).collect()
}

type Outcome = Result<String, String>;

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let r = f();
    let dt = t.elapsed();
    match (r, limit) {
        (Ok(_), Some(l)) if dt > l => Err(format!("took {dt:.2?}, limit {l:?}")),
        (Ok(m), _) => Ok(format!("{m}; {dt:.2?}")),
        (Err(m), _) => Err(m),
    }
}

fn criterion1() -> Outcome {
    let mut corpus = random_graphs(1, 50);
    corpus.extend(fixture_corpus());
    timed(Some(Duration::from_secs(1)), || {
        for (name, g) in &corpus {
            let b = betti1_oracle(g);
            let want = (usize::from(b > 0), b.min(2));
            let got = (cat_graph(g).map_err(|e| e.to_string())?, tc_graph(g).map_err(|e| e.to_string())?);
            if got != want {
                return Err(format!("{name}: (cat, tc) = {got:?}, expected {want:?}"));
            }
        }
        Ok(format!("{} graphs", corpus.len()))
    })
}

fn criterion2() -> Outcome {
    let mut corpus = random_graphs(1, 50);
    corpus.extend(fixture_corpus());
    timed(None, || {
        for (name, g) in &corpus {
            let tc = betti1_oracle(g).min(2);
            let strata = plan_graph(g).map_err(|e| e.to_string())?.strata().len();
            let lower = tc_lower_bound(g).map_err(|e| e.to_string())?;
            if strata != tc + 1 || lower != tc {
                return Err(format!("{name}: {strata} strata, lower bound {lower}, tc {tc}"));
            }
        }
        Ok(format!("{} graphs", corpus.len()))
    })
}

fn criterion3() -> Outcome {
    let mut corpus = vec![("K4".to_owned(), fixtures::complete(4))];
    corpus.extend(random_graphs(3, 20));
    let params = VerifyParams { samples: 10_000, delta: 1e-3, eps: 5e-2, ..VerifyParams::default() };
    timed(Some(Duration::from_secs(30)), || {
        let mut pairs = 0;
        let mut worst: f64 = 0.0;
        for (name, g) in &corpus {
            let plan = plan_graph(g).map_err(|e| e.to_string())?;
            let r = verify_plan(&plan, g, &params);
            if !r.passed {
                let failed: Vec<String> =
                    r.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())).collect();
                return Err(format!("{name}: {}", failed.join("; ")));
            }
            pairs += r.continuity_pairs;
            worst = worst.max(r.max_deviation);
        }
        Ok(format!("{} graphs x 10^4 queries, {pairs} continuity pairs, max deviation {worst:.2e}", corpus.len()))
    })
}

fn criterion4() -> Outcome {
    let f = Count::Finite;
    let cases = [
        ("earring", examples::earring(), (f(2), f(1), f(2))),
        ("wild circle", examples::wild_circle(), (f(2), f(2), f(3))),
        ("nested", examples::nested_rank3(), (f(3), f(2), f(4))),
        ("wild figure-eight", examples::wild_figure_eight(), (f(2), f(2), f(4))),
        ("selfwild", SpaceExpr::SelfWild, (Count::Infinite, Count::Infinite, Count::Infinite)),
        ("zerodimwild", SpaceExpr::ZeroDimWild, (f(2), f(1), f(2))),
    ];
    timed(None, || {
        for (name, e, want) in &cases {
            let got = (wild::wrk(e), wild::cat(e), wild::tc(e));
            let got = match got {
                (Ok(a), Ok(b), Ok(c)) => (a, b, c),
                _ => return Err(format!("{name}: {got:?}")),
            };
            if got != *want {
                return Err(format!("{name}: {got:?}, expected {want:?}"));
            }
        }
        Ok(format!("{} expressions", cases.len()))
    })
}

/// Number of non-empty levels, iterating the wild set by hand.
fn rank_oracle(e: &SpaceExpr) -> (u64, usize) {
    let mut level = vec![e.clone()];
    let mut n = 0;
    let mut top = Count::Finite(0);
    while !level.is_empty() {
        n += 1;
        top = level.iter().map(wild::betti1).sum();
        level = level.iter().flat_map(|p| wild::wild_set(p).expect("stable")).collect();
    }
    (n, top.finite().expect("the top level has no wild points") as usize)
}

fn criterion5() -> Outcome {
    let exprs = random_exprs(5, 200, 4);
    timed(Some(Duration::from_secs(10)), || {
        let mut branches = [0usize; 3];
        for (i, e) in exprs.iter().enumerate() {
            let (n, b1) = rank_oracle(e);
            let want = match b1 {
                0 => (n - 1, 2 * n - 2),
                1 => (n, 2 * n - 1),
                _ => (n, 2 * n),
            };
            branches[b1.min(2)] += 1;
            let (c, t) = match (wild::cat(e), wild::tc(e)) {
                (Ok(Count::Finite(c)), Ok(Count::Finite(t))) => (c, t),
                other => return Err(format!("expression {i}: {other:?}")),
            };
            if (c, t) != want {
                return Err(format!("expression {i}: (cat, tc) = ({c}, {t}), expected {want:?}: {e}"));
            }
            if c >= 1 && !(c <= t && t <= 2 * c) {
                return Err(format!("expression {i}: cat {c}, tc {t} out of range"));
            }
        }
        Ok(format!("200 expressions, branches none/one/many = {branches:?}"))
    })
}

fn criterion6() -> Outcome {
    let corpus = random_graphs(6, 10);
    timed(None, || {
        for (name, g) in &corpus {
            let f = cat_filtration(g).map_err(|e| e.to_string())?;
            let p = product_cat_filtration(g, &f, g, &f).map_err(|e| format!("{name}: {e}"))?;
            p.validate(g, g).map_err(|e| format!("{name}: {e}"))?;
            let cat = usize::from(betti1_oracle(g) > 0);
            if p.length() > 2 * cat {
                return Err(format!("{name}: length {} > 2 cat = {}", p.length(), 2 * cat));
            }
        }
        Ok(format!("{} graphs", corpus.len()))
    })
}

fn criterion7() -> Outcome {
    let exprs = random_exprs(7, 50, 3);
    timed(None, || {
        let mut checked = 0;
        for (i, e) in exprs.iter().enumerate() {
            let tc = wild::tc(e).map_err(|err| err.to_string())?.finite().unwrap() as usize;
            let mut last = 0;
            for n in [1, 2, 4, 8] {
                let g = wild::truncate(e, n).map_err(|err| err.to_string())?;
                let b = betti1_oracle(&g);
                if b < last {
                    return Err(format!("expression {i}: betti1 drops from {last} to {b} at depth {n}"));
                }
                last = b;
                let t = tc_graph(&g).map_err(|err| err.to_string())?;
                if tc >= 2 {
                    checked += 1;
                    if t > tc {
                        return Err(format!("expression {i}: tc(truncate) = {t} > tc = {tc}"));
                    }
                }
            }
        }
        Ok(format!("50 expressions, {checked} bounded truncations"))
    })
}

fn criterion8() -> Outcome {
    let corpus = random_graphs(8, 100);
    timed(None, || {
        for (name, g) in &corpus {
            let want = betti1_oracle(g).min(2);
            let got = zero_divisor_cuplength(g).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!("{name}: cup-length {got}, expected {want}"));
            }
        }
        Ok(format!("{} graphs", corpus.len()))
    })
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("graph table", criterion1),
        ("tight planner", criterion2),
        ("plan soundness", criterion3),
        ("golden values", criterion4),
        ("formula shape", criterion5),
        ("product filtration", criterion6),
        ("truncation cross-check", criterion7),
        ("cohomology oracle", criterion8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(m) => println!("criterion {} ({name}): PASS ({m})", i + 1),
            Err(m) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL ({m})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
