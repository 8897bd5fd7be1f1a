//! Filtration certificates: the level structure behind the `cat` and `TC`
//! upper bounds, labelled by the reason each difference is categorical.

use serde::Serialize;

use super::{formulas, profile, Count, SccClass, SpaceExpr, WildError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertKind {
    Cat,
    Tc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    ContractiblePieces,
    DendritePieces,
    SpanningTreePieces,
    GraphMinusTreePieces,
    ProductBox,
    CircleAntidiagonal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertLevel {
    pub index: usize,
    pub reason: Reason,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertKind,
    /// Number of levels minus one; equals the invariant it bounds.
    pub length: usize,
    pub levels: Vec<CertLevel>,
}

impl Certificate {
    fn new(kind: CertKind, levels: Vec<(Reason, String)>) -> Self {
        Certificate {
            kind,
            length: levels.len() - 1,
            levels: levels.into_iter().enumerate().map(|(index, (reason, description))| CertLevel { index, reason, description }).collect(),
        }
    }
}

fn rank_and_class(e: &SpaceExpr) -> Result<(u64, SccClass), WildError> {
    let p = profile(e)?;
    match (p.wrk, p.scc_class) {
        (Count::Finite(n), Some(c)) => Ok((n, c)),
        _ => Err(WildError::InfiniteRank),
    }
}

/// Levels `w^{n-1} ⊆ w^{n-2} ⊆ … ⊆ X`, with the top level split by a
/// spanning tree when it carries a cycle.
pub fn cat_certificate(e: &SpaceExpr) -> Result<Certificate, WildError> {
    let (n, class) = rank_and_class(e)?;
    let top = n - 1;
    let mut levels = Vec::new();
    if class == SccClass::None {
        levels.push((Reason::DendritePieces, format!("w^{top}")));
    } else {
        levels.push((Reason::SpanningTreePieces, format!("spanning tree of w^{top}")));
        levels.push((Reason::GraphMinusTreePieces, format!("w^{top} minus spanning tree")));
    }
    for j in (0..top).rev() {
        levels.push((Reason::ContractiblePieces, format!("w^{j} minus w^{}", j + 1)));
    }
    let c = Certificate::new(CertKind::Cat, levels);
    debug_assert_eq!(Count::Finite(c.length as u64), formulas(&profile(e)?).0);
    Ok(c)
}

/// Product strata `H_k`, with the lowest strata split by the cycle class
/// of the top wild level.
pub fn tc_certificate(e: &SpaceExpr) -> Result<Certificate, WildError> {
    let (n, class) = rank_and_class(e)?;
    let top = n - 1;
    let mut levels = match class {
        SccClass::None => vec![(Reason::DendritePieces, format!("w^{top} x w^{top}"))],
        SccClass::One => vec![(Reason::CircleAntidiagonal, format!("w^{top} x w^{top} off the antipodal set"))],
        SccClass::Many => vec![
            (Reason::SpanningTreePieces, "T x T".to_owned()),
            (Reason::GraphMinusTreePieces, "T x G u G x T".to_owned()),
            (Reason::GraphMinusTreePieces, "G x G".to_owned()),
        ],
    };
    let total = match class {
        SccClass::None => 2 * n - 1,
        SccClass::One => 2 * n,
        SccClass::Many => 2 * n + 1,
    } as usize;
    while levels.len() < total {
        let k = levels.len();
        levels.push((Reason::ProductBox, format!("H_{k}: boxes of total level {k}")));
    }
    Ok(Certificate::new(CertKind::Tc, levels))
}

#[cfg(test)]
mod tests {
    use super::super::examples::*;
    use super::*;
    use crate::graph::fixtures;
    use std::sync::Arc;

    fn reasons(c: &Certificate) -> Vec<Reason> {
        c.levels.iter().map(|l| l.reason).collect()
    }

    #[test]
    fn circle_has_two_strata() {
        let c = SpaceExpr::graph("C", Arc::new(fixtures::cycle(3)));
        let t = tc_certificate(&c).unwrap();
        assert_eq!(t.levels.len(), 2);
        assert_eq!(t.levels[0].reason, Reason::CircleAntidiagonal);
    }

    #[test]
    fn dendrite_has_length_zero() {
        let d = SpaceExpr::graph("T", Arc::new(fixtures::path(3)));
        assert_eq!(cat_certificate(&d).unwrap().length, 0);
        assert_eq!(reasons(&tc_certificate(&d).unwrap()), vec![Reason::DendritePieces]);
    }

    #[test]
    fn figure_eight_uses_spanning_tree() {
        let f = SpaceExpr::graph("F", Arc::new(fixtures::figure_eight()));
        let t = tc_certificate(&f).unwrap();
        assert_eq!(
            reasons(&t),
            vec![Reason::SpanningTreePieces, Reason::GraphMinusTreePieces, Reason::GraphMinusTreePieces]
        );
        let c = cat_certificate(&f).unwrap();
        assert_eq!(reasons(&c), vec![Reason::SpanningTreePieces, Reason::GraphMinusTreePieces]);
    }

    #[test]
    fn lengths_match_invariants() {
        for e in [earring(), wild_circle(), nested_rank3(), wild_figure_eight(), SpaceExpr::ZeroDimWild] {
            let (c, t) = formulas(&profile(&e).unwrap());
            assert_eq!(Count::Finite(cat_certificate(&e).unwrap().length as u64), c);
            assert_eq!(Count::Finite(tc_certificate(&e).unwrap().length as u64), t);
        }
    }

    #[test]
    fn infinite_rank_has_no_certificate() {
        assert_eq!(cat_certificate(&SpaceExpr::SelfWild), Err(WildError::InfiniteRank));
    }

    #[test]
    fn nested_cat_levels() {
        let c = cat_certificate(&nested_rank3()).unwrap();
        assert_eq!(reasons(&c), vec![Reason::DendritePieces, Reason::ContractiblePieces, Reason::ContractiblePieces]);
        assert_eq!(c.levels[2].description, "w^0 minus w^1");
    }
}
