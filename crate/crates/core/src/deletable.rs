//! Deletability: collapsible after removing some facets.
//!
//! A complex is deletable when removing `r >= 0` of its facets leaves a
//! collapsible complex. The search runs through facet subsets in
//! `(cardinality, lex)` order, so the certificate has the smallest possible
//! `r`.
//!
//! Totally deletable asks for deletability of the complex itself and of
//! every iterated link `lk_K(S ∪ {v})`. Iterated links are what Alexander
//! duality turns into full subcomplexes — `(K_I)^∨ = lk_{K^∨}(V - I)` — so
//! this is the family that makes "dual totally deletable ⇒ totally
//! fillable" an actual implication. Restricting links of full subcomplexes
//! instead would let the six-vertex projective plane (which is self-dual
//! and certainly not fillable) slip through.
//!
//! Degenerate convention: the void complex and `{∅}` count as deletable.
//! Shellable complexes must be deletable and iterated links inside
//! shellable complexes degenerate to exactly these two complexes (the link
//! of a facet is `{∅}`, the link of a non-face is void), so the convention
//! is forced by the implication chain.

use std::collections::HashMap;

use serde::Serialize;

use crate::collapse::{
    collapse_search, nonempty_faces, verify_collapse_on_faces, Collapsibility,
    CollapseCertificate,
};
use crate::complex::SimplicialComplex;
use crate::config::Budgets;
use crate::error::{Error, Result};
use crate::par;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, Serialize)]
pub struct DeletabilityCertificate {
    pub removed: Vec<VertexSet>,
    pub collapse: CollapseCertificate,
}

#[derive(Clone, Debug, Serialize)]
pub enum Deletability {
    Deletable(DeletabilityCertificate),
    NotDeletable,
    Unknown(String),
}

impl Deletability {
    pub fn verdict(&self) -> &'static str {
        match self {
            Deletability::Deletable(_) => "yes",
            Deletability::NotDeletable => "no",
            Deletability::Unknown(_) => "unknown",
        }
    }
}

/// Smallest-`r` deletability certificate, found by increasing-cardinality
/// search over facet subsets.
pub fn is_deletable(k: &SimplicialComplex, budgets: &Budgets) -> Deletability {
    if k.is_void() || k.is_empty_complex() {
        return Deletability::Deletable(DeletabilityCertificate {
            removed: Vec::new(),
            collapse: CollapseCertificate::default(),
        });
    }
    let Some(faces) = k.all_faces_capped(budgets.max_faces) else {
        return Deletability::Unknown(format!(
            "complex exceeds the face cap of {}",
            budgets.max_faces
        ));
    };
    let all_faces: Vec<VertexSet> = faces.into_iter().filter(|f| !f.is_empty()).collect();
    let facets = k.facets().to_vec();
    let mut any_unknown = false;
    let mut candidates = 0u64;
    for r in 0..=facets.len() {
        for combo in index_combinations(facets.len(), r) {
            candidates += 1;
            if candidates > budgets.deletion_candidates {
                return Deletability::Unknown(format!(
                    "deletability search exceeded {} facet subsets",
                    budgets.deletion_candidates
                ));
            }
            let removed: Vec<VertexSet> = combo.iter().map(|&i| facets[i]).collect();
            let mut remaining: crate::collapse::FaceSet = all_faces
                .iter()
                .copied()
                .filter(|f| !removed.contains(f))
                .collect();
            match collapse_search(&mut remaining, budgets.collapse_nodes) {
                Collapsibility::Collapsible(collapse) => {
                    return Deletability::Deletable(DeletabilityCertificate {
                        removed,
                        collapse,
                    });
                }
                Collapsibility::NotCollapsible => {}
                Collapsibility::Unknown(_) => any_unknown = true,
            }
        }
    }
    if any_unknown {
        Deletability::Unknown("some collapse searches hit their node budget".to_string())
    } else {
        Deletability::NotDeletable
    }
}

/// Replay a deletability certificate: the removed sets must be facets, and
/// the rest must collapse to a point (degenerate complexes carry empty
/// certificates).
pub fn verify_deletability(k: &SimplicialComplex, cert: &DeletabilityCertificate) -> Result<()> {
    if k.is_void() || k.is_empty_complex() {
        if cert.removed.is_empty() && cert.collapse.steps.is_empty() {
            return Ok(());
        }
        return Err(Error::internal(
            "degenerate complex with a nonempty deletability certificate",
        ));
    }
    for f in &cert.removed {
        if !k.facets().contains(f) {
            return Err(Error::internal(format!("{} is not a facet", f)));
        }
    }
    let mut faces = nonempty_faces(k);
    for f in &cert.removed {
        faces.remove(f);
    }
    verify_collapse_on_faces(&mut faces, &cert.collapse)
}

/// All `r`-subsets of `0..n` in lexicographic order.
fn index_combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        out.push(idx.clone());
        if r == 0 {
            return out;
        }
        let mut i = r as isize - 1;
        while i >= 0 && idx[i as usize] == i as usize + n - r {
            i -= 1;
        }
        if i < 0 {
            return out;
        }
        let i = i as usize;
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TotallyDeletableEntry {
    pub removed_set: VertexSet,
    pub vertex: u32,
    pub verdict: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TotallyDeletableReport {
    pub overall: String,
    /// Deletability of the complex itself (the empty iterate).
    pub root_verdict: String,
    pub entries: Vec<TotallyDeletableEntry>,
    /// First failing `(S, v)` pair if any.
    pub witness: Option<(VertexSet, u32)>,
}

impl TotallyDeletableReport {
    pub fn is_yes(&self) -> bool {
        self.overall == "yes"
    }
}

/// Check the complex itself and the iterated link `lk_K(S ∪ {v})` for every
/// `S ⊆ V` (possibly empty, `S != V`) and `v ∈ V - S`. Distinct pairs with
/// the same union share a link, so the deletability searches run once per
/// distinct link in the work pool; results are merged back in canonical
/// `(S, v)` order.
pub fn is_totally_deletable(k: &SimplicialComplex, budgets: &Budgets) -> TotallyDeletableReport {
    let ground = k.ground_set();
    let mut pairs: Vec<(VertexSet, u32)> = Vec::new();
    for s in ground.subsets() {
        if s == ground {
            continue;
        }
        for v in ground.difference(s).iter() {
            pairs.push((s, v));
        }
    }
    pairs.sort();

    let mut link_sets: Vec<VertexSet> = pairs.iter().map(|&(s, v)| s.with(v)).collect();
    link_sets.push(VertexSet::EMPTY); // the complex itself
    link_sets.sort();
    link_sets.dedup();
    let index_of: HashMap<VertexSet, usize> = link_sets
        .iter()
        .enumerate()
        .map(|(i, w)| (*w, i))
        .collect();

    let verdicts: Vec<&'static str> = par::map_slice(&link_sets, |w| {
        let link = k.link_of_set(*w);
        let out = is_deletable(&link, budgets);
        if let Deletability::Deletable(cert) = &out {
            // certificates are never trusted without replay
            if verify_deletability(&link, cert).is_err() {
                return "unknown";
            }
        }
        match out {
            Deletability::Deletable(_) => "yes",
            Deletability::NotDeletable => "no",
            Deletability::Unknown(_) => "unknown",
        }
    });

    let root_verdict = verdicts[index_of[&VertexSet::EMPTY]].to_string();
    let mut entries = Vec::with_capacity(pairs.len());
    let mut witness = None;
    let mut any_no = root_verdict == "no";
    let mut any_unknown = root_verdict == "unknown";
    for &(s, v) in &pairs {
        let verdict = verdicts[index_of[&s.with(v)]];
        if verdict == "no" && witness.is_none() {
            witness = Some((s, v));
        }
        any_no |= verdict == "no";
        any_unknown |= verdict == "unknown";
        entries.push(TotallyDeletableEntry {
            removed_set: s,
            vertex: v,
            verdict: verdict.to_string(),
        });
    }
    let overall = if any_no {
        "no"
    } else if any_unknown {
        "unknown"
    } else {
        "yes"
    };
    TotallyDeletableReport {
        overall: overall.to_string(),
        root_verdict,
        entries,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(vals: &[u32]) -> VertexSet {
        VertexSet::from_vertices(vals.iter().map(|v| v - 1))
    }

    #[test]
    fn collapsible_complex_needs_no_removal() {
        let k = SimplicialComplex::full_simplex(VertexSet::full(3));
        match is_deletable(&k, &Budgets::default()) {
            Deletability::Deletable(cert) => {
                assert!(cert.removed.is_empty());
                verify_deletability(&k, &cert).unwrap();
            }
            other => panic!("expected deletable, got {}", other.verdict()),
        }
    }

    #[test]
    fn hollow_triangle_removes_one_edge() {
        let k = SimplicialComplex::boundary_simplex(VertexSet::full(3)).unwrap();
        match is_deletable(&k, &Budgets::default()) {
            Deletability::Deletable(cert) => {
                assert_eq!(cert.removed.len(), 1);
                verify_deletability(&k, &cert).unwrap();
            }
            other => panic!("expected deletable, got {}", other.verdict()),
        }
    }

    #[test]
    fn degenerate_complexes_are_deletable_by_convention() {
        let e = SimplicialComplex::empty_complex(VertexSet::full(2));
        assert_eq!(is_deletable(&e, &Budgets::default()).verdict(), "yes");
        let v = SimplicialComplex::void(VertexSet::full(2));
        assert_eq!(is_deletable(&v, &Budgets::default()).verdict(), "yes");
    }

    #[test]
    fn paper_example_is_totally_deletable() {
        let k = crate::generate::paper6();
        let report = is_totally_deletable(&k, &Budgets::default());
        assert!(report.is_yes(), "witness: {:?}", report.witness);
        assert_eq!(report.entries.len(), 6 * 32); // Σ_S |V - S| = 6·2^5
    }

    #[test]
    fn full_simplex_is_totally_deletable() {
        let k = SimplicialComplex::full_simplex(VertexSet::full(4));
        assert!(is_totally_deletable(&k, &Budgets::default()).is_yes());
    }

    #[test]
    fn two_disjoint_hollow_triangles_need_two_removals() {
        let k = SimplicialComplex::from_facets(
            [
                vs(&[1, 2]),
                vs(&[1, 3]),
                vs(&[2, 3]),
                vs(&[4, 5]),
                vs(&[4, 6]),
                vs(&[5, 6]),
            ],
            VertexSet::full(6),
        )
        .unwrap();
        // two circles: χ = 0, and only removing one edge per circle leaves a
        // forest, which is still disconnected, so nothing with r <= 2 works
        let out = is_deletable(&k, &Budgets::default());
        assert_eq!(out.verdict(), "no");
    }

    #[test]
    fn rp2_is_not_deletable() {
        // facet removal drops χ below 1 and RP² itself has no free face, so
        // the whole enumeration refutes quickly
        let k = crate::generate::real_projective_plane();
        let out = is_deletable(&k, &Budgets::default());
        assert_eq!(out.verdict(), "no");
    }
}
