//! Fillings: collections of minimal non-faces whose addition makes the
//! complex contractible.
//!
//! Contractibility is undecidable in general, so a tiered certificate is
//! used:
//!
//! * **T1** — the filled complex collapses: certified contractible.
//! * **T2** — trivial reduced integer homology and a fundamental-group
//!   presentation that simplifies to the trivial one within the Tietze
//!   budget: certified contractible.
//! * **T3** — nontrivial reduced homology (or Euler characteristic ≠ 1):
//!   certified non-contractible.
//! * otherwise **Unknown**, honestly.
//!
//! The search enumerates subsets of the minimal non-faces in
//! `(cardinality, lex)` order and returns the first certified filling, so
//! results are canonical. Adding a minimal non-face contributes exactly one
//! new face, which pins the Euler characteristic of each candidate ahead of
//! time and filters most of them arithmetically.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::collapse::{is_collapsible, verify_collapse, Collapsibility, CollapseCertificate};
use crate::complex::SimplicialComplex;
use crate::config::Budgets;
use crate::error::{Error, Result};
use crate::homology::reduced_homology;
use crate::par;
use crate::pi1::{edge_path_group_is_trivial, Pi1};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum ContractibilityEvidence {
    /// T1: replayable collapse of the complex.
    Collapse(CollapseCertificate),
    /// T2: acyclic over ℤ and simply connected after bounded simplification.
    AcyclicSimplyConnected { tietze_moves: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub enum Contractibility {
    Contractible(ContractibilityEvidence),
    NonContractible(String),
    Unknown(String),
}

/// Tiered contractibility certificate for an arbitrary complex.
pub fn certify_contractible(k: &SimplicialComplex, budgets: &Budgets) -> Result<Contractibility> {
    if k.is_void() || k.is_empty_complex() {
        return Ok(Contractibility::NonContractible(
            "no points to contract to".to_string(),
        ));
    }
    if k.euler_characteristic() != 1 {
        return Ok(Contractibility::NonContractible(format!(
            "Euler characteristic {} != 1",
            k.euler_characteristic()
        )));
    }
    let hom = reduced_homology(k)?;
    if !hom.is_acyclic() {
        return Ok(Contractibility::NonContractible(format!(
            "nontrivial reduced homology {:?}",
            hom.nonzero()
        )));
    }
    match is_collapsible(k, budgets)? {
        Collapsibility::Collapsible(cert) => {
            verify_collapse(k, &cert)?;
            return Ok(Contractibility::Contractible(
                ContractibilityEvidence::Collapse(cert),
            ));
        }
        Collapsibility::NotCollapsible | Collapsibility::Unknown(_) => {}
    }
    match edge_path_group_is_trivial(k, budgets.tietze_moves) {
        Pi1::Trivial { moves } => Ok(Contractibility::Contractible(
            ContractibilityEvidence::AcyclicSimplyConnected {
                tietze_moves: moves,
            },
        )),
        Pi1::Inconclusive => Ok(Contractibility::Unknown(
            "acyclic but neither collapsible within budget nor visibly simply connected"
                .to_string(),
        )),
    }
}

/// A certified filling of one complex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FillingCertificate {
    pub filling: Vec<VertexSet>,
    pub evidence: ContractibilityEvidence,
}

#[derive(Clone, Debug, Serialize)]
pub enum FillingOutcome {
    Fillable(FillingCertificate),
    NoFilling,
    Unknown(String),
}

impl FillingOutcome {
    pub fn verdict(&self) -> &'static str {
        match self {
            FillingOutcome::Fillable(_) => "yes",
            FillingOutcome::NoFilling => "no",
            FillingOutcome::Unknown(_) => "unknown",
        }
    }
}

/// The complex together with some of its minimal non-faces added as
/// simplices. Every proper subset of a minimal non-face is already a face,
/// so each added set contributes itself and nothing else.
pub fn filled_complex(k: &SimplicialComplex, filling: &[VertexSet]) -> Result<SimplicialComplex> {
    let mut facets = k.facets().to_vec();
    facets.extend_from_slice(filling);
    SimplicialComplex::from_facets(facets, k.ground_set())
}

/// Search for a filling of `k` in `(cardinality, lex)` order over subsets of
/// the minimal non-faces; the first certified candidate wins.
pub fn find_filling(k: &SimplicialComplex, budgets: &Budgets) -> Result<FillingOutcome> {
    let mnfs = k.minimal_non_faces();
    let need: i64 = 1 - k.euler_characteristic();
    let signed = |s: VertexSet| -> i64 {
        if s.is_empty() {
            // adding the empty simplex to the void complex contributes the
            // empty face only, which does not change χ over dims >= 0
            0
        } else if (s.len() - 1).is_multiple_of(2) {
            1
        } else {
            -1
        }
    };

    let n = mnfs.len();
    let mut candidates = 0u64;
    let mut any_unknown = false;
    for r in 0..=n {
        let mut combo: Vec<usize> = (0..r).collect();
        loop {
            candidates += 1;
            if candidates > budgets.fill_candidates {
                return Ok(FillingOutcome::Unknown(format!(
                    "filling search exceeded {} candidates",
                    budgets.fill_candidates
                )));
            }
            let sum: i64 = combo.iter().map(|&i| signed(mnfs[i])).sum();
            if sum == need {
                let filling: Vec<VertexSet> = combo.iter().map(|&i| mnfs[i]).collect();
                let filled = filled_complex(k, &filling)?;
                match certify_contractible(&filled, budgets)? {
                    Contractibility::Contractible(evidence) => {
                        return Ok(FillingOutcome::Fillable(FillingCertificate {
                            filling,
                            evidence,
                        }));
                    }
                    Contractibility::NonContractible(_) => {}
                    Contractibility::Unknown(_) => any_unknown = true,
                }
            }
            // advance the r-combination in lexicographic order
            if r == 0 {
                break;
            }
            let mut i = r as isize - 1;
            while i >= 0 && combo[i as usize] == i as usize + n - r {
                i -= 1;
            }
            if i < 0 {
                break;
            }
            let i = i as usize;
            combo[i] += 1;
            for j in i + 1..r {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    if any_unknown {
        Ok(FillingOutcome::Unknown(
            "some candidates could not be certified either way".to_string(),
        ))
    } else {
        Ok(FillingOutcome::NoFilling)
    }
}

/// Verify a filling certificate: the members must be minimal non-faces and
/// the evidence must replay on the filled complex.
pub fn verify_filling(k: &SimplicialComplex, cert: &FillingCertificate) -> Result<()> {
    let mnfs = k.minimal_non_faces();
    for s in &cert.filling {
        if !mnfs.contains(s) {
            return Err(Error::internal(format!(
                "{} is not a minimal non-face",
                s
            )));
        }
    }
    let filled = filled_complex(k, &cert.filling)?;
    match &cert.evidence {
        ContractibilityEvidence::Collapse(c) => verify_collapse(&filled, c),
        ContractibilityEvidence::AcyclicSimplyConnected { .. } => {
            let hom = reduced_homology(&filled)?;
            if !hom.is_acyclic() {
                return Err(Error::internal(
                    "claimed acyclic filled complex has homology",
                ));
            }
            match edge_path_group_is_trivial(&filled, u64::MAX / 2) {
                Pi1::Trivial { .. } => Ok(()),
                Pi1::Inconclusive => Err(Error::internal(
                    "claimed simply connected filled complex did not simplify",
                )),
            }
        }
    }
}

/// The system-wide chosen fillings: one canonical filling per nonempty
/// subset of the ground set. Serialized as a list of `{subset, filling}`
/// pairs so it survives JSON, whose map keys must be strings.
#[derive(Clone, Debug, Default)]
pub struct ChosenFillings {
    pub by_subset: BTreeMap<VertexSet, Vec<VertexSet>>,
}

#[derive(Serialize, Deserialize)]
struct FillingPair {
    subset: VertexSet,
    filling: Vec<VertexSet>,
}

impl Serialize for ChosenFillings {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.by_subset.iter().map(|(s, f)| FillingPair {
            subset: *s,
            filling: f.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for ChosenFillings {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<FillingPair>::deserialize(deserializer)?;
        Ok(ChosenFillings {
            by_subset: pairs.into_iter().map(|p| (p.subset, p.filling)).collect(),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub enum TotallyFillable {
    TotallyFillable {
        fillings: ChosenFillings,
        certificates: Vec<(VertexSet, FillingCertificate)>,
    },
    /// Some full subcomplex is certified unfillable.
    No { witness: VertexSet },
    /// Some full subcomplex could not be decided within budget.
    Unknown { witness: VertexSet, reason: String },
}

impl TotallyFillable {
    pub fn verdict(&self) -> &'static str {
        match self {
            TotallyFillable::TotallyFillable { .. } => "yes",
            TotallyFillable::No { .. } => "no",
            TotallyFillable::Unknown { .. } => "unknown",
        }
    }

    pub fn fillings(&self) -> Option<&ChosenFillings> {
        match self {
            TotallyFillable::TotallyFillable { fillings, .. } => Some(fillings),
            _ => None,
        }
    }
}

/// Standard collapse of a full simplex toward its least vertex, used as the
/// fast-path evidence when `I` is already a face.
fn cone_collapse(simplex: VertexSet) -> CollapseCertificate {
    let apex = simplex.min_vertex().expect("nonempty simplex");
    let mut others: Vec<VertexSet> = simplex
        .without(apex)
        .subsets()
        .filter(|t| !t.is_empty())
        .collect();
    // largest first, so every pair (τ, τ ∪ apex) is free when reached
    others.sort();
    others.reverse();
    CollapseCertificate {
        steps: others
            .into_iter()
            .map(|t| crate::collapse::CollapseStep {
                free_face: t,
                cofacet: t.with(apex),
            })
            .collect(),
    }
}

/// Fillings for every nonempty `I ⊆ V`. Subsets that are faces of `k` get
/// the empty filling through the cone fast path; the rest run the full
/// search in the work pool, merged in canonical order.
pub fn is_totally_fillable(k: &SimplicialComplex, budgets: &Budgets) -> Result<TotallyFillable> {
    let ground = k.ground_set();
    let subsets: Vec<VertexSet> = ground.subsets().filter(|s| !s.is_empty()).collect();
    let outcomes = par::map_slice(&subsets, |i| -> Result<(VertexSet, FillingOutcome)> {
        if k.is_face(*i) {
            return Ok((
                *i,
                FillingOutcome::Fillable(FillingCertificate {
                    filling: Vec::new(),
                    evidence: ContractibilityEvidence::Collapse(cone_collapse(*i)),
                }),
            ));
        }
        let sub = k.full_subcomplex(*i)?;
        Ok((*i, find_filling(&sub, budgets)?))
    });

    let mut fillings = ChosenFillings::default();
    let mut certificates = Vec::new();
    for outcome in outcomes {
        let (i, out) = outcome?;
        match out {
            FillingOutcome::Fillable(cert) => {
                let sub = if k.is_face(i) {
                    SimplicialComplex::full_simplex(i)
                } else {
                    k.full_subcomplex(i)?
                };
                verify_filling(&sub, &cert)?;
                fillings.by_subset.insert(i, cert.filling.clone());
                certificates.push((i, cert));
            }
            FillingOutcome::NoFilling => return Ok(TotallyFillable::No { witness: i }),
            FillingOutcome::Unknown(reason) => {
                return Ok(TotallyFillable::Unknown { witness: i, reason })
            }
        }
    }
    Ok(TotallyFillable::TotallyFillable {
        fillings,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(vals: &[u32]) -> VertexSet {
        VertexSet::from_vertices(vals.iter().map(|v| v - 1))
    }

    #[test]
    fn boundary_fills_to_the_simplex() {
        for m in 2..=5u32 {
            let k = SimplicialComplex::boundary_simplex(VertexSet::full(m)).unwrap();
            match find_filling(&k, &Budgets::default()).unwrap() {
                FillingOutcome::Fillable(cert) => {
                    assert_eq!(cert.filling, vec![VertexSet::full(m)]);
                    verify_filling(&k, &cert).unwrap();
                }
                other => panic!("expected a filling, got {}", other.verdict()),
            }
        }
    }

    #[test]
    fn three_points_fill_with_two_edges() {
        let k = crate::generate::disjoint_points(3).unwrap();
        match find_filling(&k, &Budgets::default()).unwrap() {
            FillingOutcome::Fillable(cert) => {
                assert_eq!(cert.filling, vec![vs(&[1, 2]), vs(&[1, 3])]);
                verify_filling(&k, &cert).unwrap();
            }
            other => panic!("expected a filling, got {}", other.verdict()),
        }
    }

    #[test]
    fn contractible_complex_fills_with_nothing() {
        let k = crate::generate::paper6();
        match find_filling(&k, &Budgets::default()).unwrap() {
            FillingOutcome::Fillable(cert) => assert!(cert.filling.is_empty()),
            other => panic!("expected the empty filling, got {}", other.verdict()),
        }
    }

    #[test]
    fn projective_plane_has_no_filling() {
        let k = crate::generate::real_projective_plane();
        match find_filling(&k, &Budgets::default()).unwrap() {
            FillingOutcome::NoFilling => {}
            other => panic!("expected no filling, got {}", other.verdict()),
        }
    }

    #[test]
    fn ghost_vertices_fill_with_singletons() {
        // {∅} on two ghost vertices: fillable by a single point
        let e = SimplicialComplex::empty_complex(VertexSet::full(2));
        match find_filling(&e, &Budgets::default()).unwrap() {
            FillingOutcome::Fillable(cert) => {
                assert_eq!(cert.filling, vec![vs(&[1])]);
            }
            other => panic!("expected a filling, got {}", other.verdict()),
        }
    }

    #[test]
    fn two_points_totally_fillable() {
        let k = crate::generate::disjoint_points(2).unwrap();
        match is_totally_fillable(&k, &Budgets::default()).unwrap() {
            TotallyFillable::TotallyFillable { fillings, .. } => {
                assert_eq!(fillings.by_subset[&vs(&[1])], Vec::<VertexSet>::new());
                assert_eq!(fillings.by_subset[&vs(&[2])], Vec::<VertexSet>::new());
                assert_eq!(fillings.by_subset[&vs(&[1, 2])], vec![vs(&[1, 2])]);
            }
            other => panic!("expected totally fillable, got {}", other.verdict()),
        }
    }

    #[test]
    fn zero_skeleton_of_triangle_totally_fillable() {
        let k = crate::generate::disjoint_points(3).unwrap();
        assert_eq!(
            is_totally_fillable(&k, &Budgets::default()).unwrap().verdict(),
            "yes"
        );
    }

    #[test]
    fn rp2_is_not_totally_fillable() {
        let k = crate::generate::real_projective_plane();
        match is_totally_fillable(&k, &Budgets::default()).unwrap() {
            TotallyFillable::No { witness } => assert_eq!(witness, VertexSet::full(6)),
            other => panic!("expected no, got {}", other.verdict()),
        }
    }
}
