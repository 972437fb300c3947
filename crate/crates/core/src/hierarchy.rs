//! The four-step hierarchy and its implication chain.
//!
//! directed missing-face structure ⇒ dual shellable ⇒ dual totally
//! deletable ⇒ totally fillable. The report computes all four verdicts and
//! then asserts the chain on every consecutive pair of definite verdicts: a
//! definite "yes" followed by a definite "no" is an internal error and
//! surfaces loudly, which is exactly how the property suites use it.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::config::Budgets;
use crate::deletable::is_totally_deletable;
use crate::directed_mf::is_directed_mf;
use crate::duality::alexander_dual;
use crate::error::{Error, Result};
use crate::filling::is_totally_fillable;
use crate::shelling::{is_shellable, verify_shelling, Shellability};

#[derive(Clone, Debug, Serialize)]
pub struct HierarchyReport {
    pub directed_mf: String,
    pub dual_shellable: String,
    pub dual_totally_deletable: String,
    pub totally_fillable: String,
}

impl HierarchyReport {
    pub fn verdicts(&self) -> [&str; 4] {
        [
            &self.directed_mf,
            &self.dual_shellable,
            &self.dual_totally_deletable,
            &self.totally_fillable,
        ]
    }

    /// A definite yes must never be followed by a definite no.
    fn check_chain(&self) -> Result<()> {
        let v = self.verdicts();
        for i in 0..3 {
            for j in i + 1..4 {
                if v[i] == "yes" && v[j] == "no" {
                    return Err(Error::internal(format!(
                        "implication chain violated: step {} is yes but step {} is no \
                         (directedMF ⇒ dualShellable ⇒ dualTotallyDeletable ⇒ totallyFillable)",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Run all four checks on `k` and assert the implication chain.
pub fn hierarchy_report(k: &SimplicialComplex, budgets: &Budgets) -> Result<HierarchyReport> {
    let directed_mf = is_directed_mf(k, budgets).verdict().to_string();

    let dual = alexander_dual(k, k.ground_set())?;
    let dual_shellable = match is_shellable(&dual, budgets) {
        Shellability::Shellable(cert) => {
            verify_shelling(&dual, &cert.order)?;
            "yes"
        }
        Shellability::NotShellable => "no",
        Shellability::Unknown(_) => "unknown",
    }
    .to_string();

    let dual_totally_deletable = is_totally_deletable(&dual, budgets).overall;

    let totally_fillable = is_totally_fillable(k, budgets)?.verdict().to_string();

    let report = HierarchyReport {
        directed_mf,
        dual_shellable,
        dual_totally_deletable,
        totally_fillable,
    };
    report.check_chain()?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::VertexSet;

    #[test]
    fn boundary_of_simplex_is_all_yes() {
        let k = crate::generate::boundary_of_simplex(4).unwrap();
        let r = hierarchy_report(&k, &Budgets::default()).unwrap();
        assert_eq!(r.verdicts(), ["yes"; 4]);
    }

    #[test]
    fn dual_of_paper_example_separates_the_classes() {
        let k = crate::generate::paper6();
        let dual = alexander_dual(&k, VertexSet::full(6)).unwrap();
        let r = hierarchy_report(&dual, &Budgets::default()).unwrap();
        assert_eq!(r.directed_mf, "no");
        assert_eq!(r.dual_shellable, "no");
        assert_eq!(r.dual_totally_deletable, "yes");
        assert_eq!(r.totally_fillable, "yes");
    }

    #[test]
    fn projective_plane_fails_everything() {
        let k = crate::generate::real_projective_plane();
        let r = hierarchy_report(&k, &Budgets::default()).unwrap();
        assert_eq!(r.verdicts(), ["no"; 4]);
    }

    #[test]
    fn points_are_directed_mf() {
        let k = crate::generate::disjoint_points(3).unwrap();
        let r = hierarchy_report(&k, &Budgets::default()).unwrap();
        assert_eq!(r.verdicts(), ["yes"; 4]);
    }
}
