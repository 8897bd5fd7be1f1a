//! Machine-readable summary of an expression, emitted as JSON by the CLI.

use serde::Serialize;

use crate::planner::VerifyReport;
use crate::wild::{cat_certificate, formulas, profile, tc_certificate, Certificate, Count, LevelSummary, SccClass, SpaceExpr, WildError, WildProfile};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificates {
    pub cat: Certificate,
    pub tc: Certificate,
}

/// Keys serialize in declaration order; optional sections are omitted when
/// absent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub wrk: Count,
    pub cat: Count,
    pub tc: Count,
    pub stable: bool,
    /// `null` when the rank is infinite.
    pub scc_class: Option<SccClass>,
    pub tower: Vec<LevelSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Certificates>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerifyReport>,
}

impl Report {
    pub fn from_profile(p: &WildProfile) -> Self {
        let (cat, tc) = formulas(p);
        Report {
            wrk: p.wrk,
            cat,
            tc,
            stable: p.stable,
            scc_class: p.scc_class,
            tower: p.tower.clone(),
            certificates: None,
            verification: None,
        }
    }

    pub fn for_expr(e: &SpaceExpr) -> Result<Self, WildError> {
        Ok(Self::from_profile(&profile(e)?))
    }

    pub fn with_certificates(mut self, e: &SpaceExpr) -> Result<Self, WildError> {
        self.certificates = Some(Certificates { cat: cat_certificate(e)?, tc: tc_certificate(e)? });
        Ok(self)
    }

    pub fn with_verification(mut self, v: VerifyReport) -> Self {
        self.verification = Some(v);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wild::examples::earring;

    #[test]
    fn key_order_and_infinity() {
        let r = Report::for_expr(&SpaceExpr::SelfWild).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(r#"{"wrk":"inf","cat":"inf","tc":"inf","stable":true,"scc_class":null,"tower":"#), "{s}");
        let r = Report::for_expr(&earring()).unwrap().with_certificates(&earring()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["scc_class"], "none");
        assert_eq!(v["certificates"]["tc"]["levels"][0]["reason"], "dendrite-pieces");
        assert_eq!(v["tower"][1]["betti1"], 0);
    }
}
