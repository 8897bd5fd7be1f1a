use super::{profile, SpaceExpr, WildError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stability {
    pub stable: bool,
    /// Why the expression is not stable.
    pub diagnostic: Option<String>,
}

/// Whether every family whose pattern has a non-empty wild set glues along
/// a connected wild set containing its anchor, at every level of the tower.
///
/// Vacuously true when the rank is infinite. Families whose pattern wild set
/// comes from an attachment of the pattern are rejected.
pub fn is_w_stable(e: &SpaceExpr) -> Stability {
    if *e == SpaceExpr::ZeroDimWild {
        return Stability { stable: false, diagnostic: Some("handled by the zero-dimensional special case".into()) };
    }
    match profile(e) {
        Ok(_) => Stability { stable: true, diagnostic: None },
        Err(WildError::Unstable(d)) => Stability { stable: false, diagnostic: Some(d) },
        Err(other) => Stability { stable: false, diagnostic: Some(other.to_string()) },
    }
}

#[cfg(test)]
mod tests {
    use super::super::examples::*;
    use super::*;

    #[test]
    fn anchor_outside_wild_set() {
        let s = is_w_stable(&earring_of_earrings("u"));
        assert!(!s.stable);
        assert!(s.diagnostic.unwrap().contains("anchor (vertex u)"));
        assert!(is_w_stable(&earring_of_earrings("v")).stable);
    }

    #[test]
    fn atoms() {
        assert!(is_w_stable(&SpaceExpr::SelfWild).stable);
        let z = is_w_stable(&SpaceExpr::ZeroDimWild);
        assert!(!z.stable);
        assert!(z.diagnostic.unwrap().contains("zero-dimensional"));
    }

    #[test]
    fn examples_are_stable() {
        for e in [earring(), wild_circle(), nested_rank3(), wild_figure_eight()] {
            assert!(is_w_stable(&e).stable);
        }
    }
}
