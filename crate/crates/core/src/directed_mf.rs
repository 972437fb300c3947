//! Directed missing-face structure and the induced dual shellings.
//!
//! A complex qualifies when it is the union of the boundaries of its minimal
//! non-faces and those boundaries can be added one at a time so that each new
//! boundary meets the union of the previous ones in a controlled way. Each
//! step of the filtration `K_i = K_{i-1} ∪ ∂σ_i` records a witness for the
//! intersection `K_{i-1} ∩ ∂σ_i`:
//!
//! * the closure of a single face (possibly the empty face),
//! * a cone (the skeleton families need this: the third triangle boundary of
//!   the complete graph on four vertices meets the first two in a path), or
//! * all of `∂σ_i`, a redundant attachment that changes nothing.
//!
//! Cones are collapsible, so every accepted step glues a boundary along
//! contractible overlap or not at all. The search orders all minimal
//! non-faces; since redundant steps are allowed, this accepts exactly the
//! complexes where some subcollection of boundaries with single-face/cone
//! steps covers the complex.
//!
//! The ordering lemma: if minimal non-faces can be ordered so that for all
//! `i < j` there is `k < j` with `σ_k ∪ σ_j ⊆ σ_i ∪ σ_j` and
//! `|σ_k ∪ σ_j| = |σ_j| + 1`, then the complementary facet ordering of the
//! Alexander dual is a shelling. [`derive_mf_ordering`] produces the
//! ordering (1-dimensional minimal non-faces in lexicographic order, the
//! remaining ones in filtration order) and fails loudly if the predicate
//! does not hold, since that would contradict the implication this module
//! is built on.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::config::Budgets;
use crate::duality::alexander_dual;
use crate::error::{Error, Result};
use crate::shelling::verify_shelling;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MfStepWitness {
    /// First boundary; the intersection with the void complex is vacuous.
    First,
    /// The intersection is the downward closure of this single face.
    SingleFace(VertexSet),
    /// The intersection is a cone with this apex.
    Cone { apex: u32 },
    /// `∂σ_i` was already contained in the union.
    AlreadyPresent,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DirectedMfCertificate {
    pub order: Vec<VertexSet>,
    pub witnesses: Vec<MfStepWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub enum DirectedMf {
    DirectedMf(DirectedMfCertificate),
    No,
    Unknown(String),
}

impl DirectedMf {
    pub fn verdict(&self) -> &'static str {
        match self {
            DirectedMf::DirectedMf(_) => "yes",
            DirectedMf::No => "no",
            DirectedMf::Unknown(_) => "unknown",
        }
    }
}

/// Proper subsets of `sigma` that are already faces, i.e. the face set of
/// `K_{i-1} ∩ ∂σ`.
fn overlap(faceset: &BTreeSet<VertexSet>, sigma: VertexSet) -> Vec<VertexSet> {
    sigma
        .subsets()
        .filter(|t| *t != sigma && faceset.contains(t))
        .collect()
}

fn classify_overlap(x: &[VertexSet], sigma: VertexSet) -> Option<MfStepWitness> {
    let total = if sigma.is_empty() {
        0u64
    } else {
        (1u64 << sigma.len()) - 1
    };
    if x.len() as u64 == total && total > 0 {
        return Some(MfStepWitness::AlreadyPresent);
    }
    let maximal: Vec<VertexSet> = x
        .iter()
        .filter(|f| !x.iter().any(|g| f.is_proper_subset_of(*g)))
        .copied()
        .collect();
    match maximal.len() {
        0 => None, // only possible when the union is void, handled as First
        1 => Some(MfStepWitness::SingleFace(maximal[0])),
        _ => {
            let common = maximal
                .iter()
                .fold(VertexSet::full(crate::vertex_set::MAX_VERTICES), |a, m| {
                    a.intersection(*m)
                });
            common.min_vertex().map(|apex| MfStepWitness::Cone { apex })
        }
    }
}

/// Search for a directed missing-face filtration over all minimal non-faces.
pub fn is_directed_mf(k: &SimplicialComplex, budgets: &Budgets) -> DirectedMf {
    let mnfs = k.minimal_non_faces();
    // the union of all minimal non-face boundaries must be the whole complex:
    // every facet has to sit strictly inside some minimal non-face
    if !k
        .facets()
        .iter()
        .all(|f| mnfs.iter().any(|s| f.is_proper_subset_of(*s)))
    {
        return DirectedMf::No;
    }
    if mnfs.is_empty() {
        // the full simplex: no boundaries to build from
        return DirectedMf::No;
    }

    let n = mnfs.len();
    if n > 128 {
        return DirectedMf::Unknown(format!(
            "filtration search not attempted on {} minimal non-faces",
            n
        ));
    }
    let mut faceset: BTreeSet<VertexSet> = BTreeSet::new();
    let mut order: Vec<usize> = Vec::new();
    let mut witnesses: Vec<MfStepWitness> = Vec::new();
    let mut placed_mask: u128 = 0;
    let mut failed: HashSet<u128> = HashSet::new();
    let mut nodes = 0u64;
    let mut exhausted = false;

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        mnfs: &[VertexSet],
        faceset: &mut BTreeSet<VertexSet>,
        order: &mut Vec<usize>,
        witnesses: &mut Vec<MfStepWitness>,
        placed_mask: &mut u128,
        failed: &mut HashSet<u128>,
        nodes: &mut u64,
        budget: u64,
        exhausted: &mut bool,
    ) -> bool {
        if order.len() == mnfs.len() {
            return true;
        }
        *nodes += 1;
        if *nodes > budget {
            *exhausted = true;
            return false;
        }
        if failed.contains(placed_mask) {
            return false;
        }
        for i in 0..mnfs.len() {
            if *placed_mask & (1 << i) != 0 {
                continue;
            }
            let sigma = mnfs[i];
            let witness = if order.is_empty() {
                Some(MfStepWitness::First)
            } else {
                classify_overlap(&overlap(faceset, sigma), sigma)
            };
            let Some(witness) = witness else { continue };
            let added: Vec<VertexSet> = sigma
                .subsets()
                .filter(|t| *t != sigma && !faceset.contains(t))
                .collect();
            for t in &added {
                faceset.insert(*t);
            }
            *placed_mask |= 1 << i;
            order.push(i);
            witnesses.push(witness);
            if dfs(
                mnfs,
                faceset,
                order,
                witnesses,
                placed_mask,
                failed,
                nodes,
                budget,
                exhausted,
            ) {
                return true;
            }
            witnesses.pop();
            order.pop();
            *placed_mask &= !(1 << i);
            for t in &added {
                faceset.remove(t);
            }
            if *exhausted {
                return false;
            }
        }
        failed.insert(*placed_mask);
        false
    }

    let found = dfs(
        &mnfs,
        &mut faceset,
        &mut order,
        &mut witnesses,
        &mut placed_mask,
        &mut failed,
        &mut nodes,
        budgets.order_nodes,
        &mut exhausted,
    );
    if found {
        DirectedMf::DirectedMf(DirectedMfCertificate {
            order: order.into_iter().map(|i| mnfs[i]).collect(),
            witnesses,
        })
    } else if exhausted {
        DirectedMf::Unknown(format!(
            "filtration search exceeded {} nodes",
            budgets.order_nodes
        ))
    } else {
        DirectedMf::No
    }
}

/// Independent replay of a filtration certificate: rebuilds the filtration
/// and verifies every recorded witness literally, then checks that the final
/// union is the whole complex.
pub fn verify_directed_mf(k: &SimplicialComplex, cert: &DirectedMfCertificate) -> Result<()> {
    let mut expected = k.minimal_non_faces();
    expected.sort();
    let mut got = cert.order.clone();
    got.sort();
    if expected != got {
        return Err(Error::internal(
            "filtration order is not a permutation of the minimal non-faces",
        ));
    }
    if cert.order.len() != cert.witnesses.len() {
        return Err(Error::internal("witness count does not match the order"));
    }
    let mut faceset: BTreeSet<VertexSet> = BTreeSet::new();
    for (i, (sigma, witness)) in cert.order.iter().zip(&cert.witnesses).enumerate() {
        let x: Vec<VertexSet> = sigma
            .subsets()
            .filter(|t| *t != *sigma && faceset.contains(t))
            .collect();
        match witness {
            MfStepWitness::First => {
                if i != 0 {
                    return Err(Error::internal("First witness after step 1"));
                }
            }
            MfStepWitness::SingleFace(f) => {
                let closure: BTreeSet<VertexSet> = f.subsets().collect();
                let xs: BTreeSet<VertexSet> = x.iter().copied().collect();
                if xs != closure {
                    return Err(Error::internal(format!(
                        "step {}: overlap is not the closure of {}",
                        i + 1,
                        f
                    )));
                }
            }
            MfStepWitness::Cone { apex } => {
                if !x.contains(&VertexSet::singleton(*apex)) {
                    return Err(Error::internal(format!(
                        "step {}: cone apex {} is not in the overlap",
                        i + 1,
                        apex + 1
                    )));
                }
                let xs: BTreeSet<VertexSet> = x.iter().copied().collect();
                for t in &x {
                    if !xs.contains(&t.with(*apex)) {
                        return Err(Error::internal(format!(
                            "step {}: overlap is not a cone with apex {}",
                            i + 1,
                            apex + 1
                        )));
                    }
                }
            }
            MfStepWitness::AlreadyPresent => {
                let want = if sigma.is_empty() {
                    0
                } else {
                    (1usize << sigma.len()) - 1
                };
                if x.len() != want || want == 0 {
                    return Err(Error::internal(format!(
                        "step {}: ∂{} is not already contained in the union",
                        i + 1,
                        sigma
                    )));
                }
            }
        }
        for t in sigma.subsets() {
            if t != *sigma {
                faceset.insert(t);
            }
        }
    }
    let union_faces = faceset;
    let k_faces = k.all_faces();
    if union_faces != k_faces {
        return Err(Error::internal(
            "union of the boundaries does not equal the complex",
        ));
    }
    Ok(())
}

/// The ordering predicate behind the dual-shelling lemma.
pub fn lemma_shelling_predicate(order: &[VertexSet]) -> bool {
    for j in 0..order.len() {
        for i in 0..j {
            let target = order[i].union(order[j]);
            let ok = (0..j).any(|k| {
                let u = order[k].union(order[j]);
                u.is_subset_of(target) && u.len() == order[j].len() + 1
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Ordering of all minimal non-faces induced by a filtration certificate:
/// minimal non-faces of cardinality at most two in `(cardinality, lex)`
/// order, then the rest in filtration order. The result must satisfy the
/// ordering predicate; failure is surfaced loudly.
pub fn derive_mf_ordering(
    k: &SimplicialComplex,
    cert: &DirectedMfCertificate,
) -> Result<Vec<VertexSet>> {
    let mut small: Vec<VertexSet> = cert.order.iter().filter(|s| s.len() <= 2).copied().collect();
    small.sort_by(|a, b| a.card_lex_cmp(*b));
    let rest: Vec<VertexSet> = cert.order.iter().filter(|s| s.len() > 2).copied().collect();
    let mut ordering = small;
    ordering.extend(rest);

    let mut expected = k.minimal_non_faces();
    expected.sort();
    let mut got = ordering.clone();
    got.sort();
    if expected != got {
        return Err(Error::internal(
            "derived ordering does not enumerate the minimal non-faces",
        ));
    }
    if !lemma_shelling_predicate(&ordering) {
        return Err(Error::internal(
            "derived minimal-non-face ordering violates the shelling predicate; \
             this contradicts the dual-shellability of directed filtrations",
        ));
    }
    Ok(ordering)
}

#[derive(Clone, Debug, Serialize)]
pub enum ViaOrdering {
    /// A predicate-satisfying ordering, with the induced dual shelling
    /// independently verified.
    Ordered {
        mnf_order: Vec<VertexSet>,
        dual_order: Vec<VertexSet>,
    },
    /// The sufficient condition failed or the search ran out of budget; this
    /// does not prove the complex is not dual shellable.
    Inconclusive(String),
}

/// Search for an ordering of the minimal non-faces satisfying the lemma
/// predicate; on success the complementary ordering is checked to be a
/// shelling of the Alexander dual by the independent replay.
pub fn dual_shellable_via_ordering(k: &SimplicialComplex, budgets: &Budgets) -> Result<ViaOrdering> {
    let mnfs = k.minimal_non_faces();
    let n = mnfs.len();
    if n > 128 {
        return Ok(ViaOrdering::Inconclusive(format!(
            "ordering search not attempted on {} minimal non-faces",
            n
        )));
    }
    let mut order: Vec<usize> = Vec::new();
    let mut placed_mask: u128 = 0;
    let mut failed: HashSet<u128> = HashSet::new();
    let mut nodes = 0u64;
    let mut exhausted = false;

    fn placeable(mnfs: &[VertexSet], order: &[usize], candidate: usize) -> bool {
        let sigma = mnfs[candidate];
        order.iter().all(|&i| {
            let target = mnfs[i].union(sigma);
            order.iter().any(|&h| {
                let u = mnfs[h].union(sigma);
                u.is_subset_of(target) && u.len() == sigma.len() + 1
            })
        })
    }

    fn dfs(
        mnfs: &[VertexSet],
        order: &mut Vec<usize>,
        placed_mask: &mut u128,
        failed: &mut HashSet<u128>,
        nodes: &mut u64,
        budget: u64,
        exhausted: &mut bool,
    ) -> bool {
        if order.len() == mnfs.len() {
            return true;
        }
        *nodes += 1;
        if *nodes > budget {
            *exhausted = true;
            return false;
        }
        if failed.contains(placed_mask) {
            return false;
        }
        for i in 0..mnfs.len() {
            if *placed_mask & (1 << i) != 0 || !placeable(mnfs, order, i) {
                continue;
            }
            *placed_mask |= 1 << i;
            order.push(i);
            if dfs(mnfs, order, placed_mask, failed, nodes, budget, exhausted) {
                return true;
            }
            order.pop();
            *placed_mask &= !(1 << i);
            if *exhausted {
                return false;
            }
        }
        failed.insert(*placed_mask);
        false
    }

    let found = dfs(
        &mnfs,
        &mut order,
        &mut placed_mask,
        &mut failed,
        &mut nodes,
        budgets.order_nodes,
        &mut exhausted,
    );
    if !found {
        return Ok(ViaOrdering::Inconclusive(if exhausted {
            format!("ordering search exceeded {} nodes", budgets.order_nodes)
        } else {
            "no ordering satisfies the sufficient condition".to_string()
        }));
    }
    let mnf_order: Vec<VertexSet> = order.into_iter().map(|i| mnfs[i]).collect();
    let ground = k.ground_set();
    let dual = alexander_dual(k, ground)?;
    let dual_order: Vec<VertexSet> = mnf_order
        .iter()
        .map(|s| s.complement_in(ground))
        .collect();
    verify_shelling(&dual, &dual_order)?;
    Ok(ViaOrdering::Ordered {
        mnf_order,
        dual_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(vals: &[u32]) -> VertexSet {
        VertexSet::from_vertices(vals.iter().map(|v| v - 1))
    }

    fn budgets() -> Budgets {
        Budgets::default()
    }

    #[test]
    fn boundary_of_simplex_is_directed_mf() {
        let k = SimplicialComplex::boundary_simplex(VertexSet::full(3)).unwrap();
        match is_directed_mf(&k, &budgets()) {
            DirectedMf::DirectedMf(cert) => {
                assert_eq!(cert.order, vec![VertexSet::full(3)]);
                verify_directed_mf(&k, &cert).unwrap();
            }
            other => panic!("expected yes, got {}", other.verdict()),
        }
    }

    #[test]
    fn full_simplex_is_not() {
        let k = SimplicialComplex::full_simplex(VertexSet::full(3));
        assert!(matches!(is_directed_mf(&k, &budgets()), DirectedMf::No));
    }

    #[test]
    fn three_points_yield_the_expected_order() {
        let k = crate::generate::disjoint_points(3).unwrap();
        match is_directed_mf(&k, &budgets()) {
            DirectedMf::DirectedMf(cert) => {
                verify_directed_mf(&k, &cert).unwrap();
                assert_eq!(cert.order, vec![vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]);
                assert_eq!(cert.witnesses[2], MfStepWitness::AlreadyPresent);
                let ordering = derive_mf_ordering(&k, &cert).unwrap();
                assert_eq!(ordering, vec![vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]);
            }
            other => panic!("expected yes, got {}", other.verdict()),
        }
    }

    #[test]
    fn complete_graph_on_four_vertices() {
        // needs a cone step: the third triangle boundary meets the union of
        // the first two in a path
        let k = crate::generate::skeleton_of_simplex(3, 1).unwrap();
        match is_directed_mf(&k, &budgets()) {
            DirectedMf::DirectedMf(cert) => {
                verify_directed_mf(&k, &cert).unwrap();
                assert!(cert
                    .witnesses
                    .iter()
                    .any(|w| matches!(w, MfStepWitness::Cone { .. })));
                derive_mf_ordering(&k, &cert).unwrap();
            }
            other => panic!("expected yes, got {}", other.verdict()),
        }
    }

    #[test]
    fn skeletons_pass_and_simplices_fail() {
        for n in 1..=4u32 {
            for kk in 0..=n as i32 {
                let k = crate::generate::skeleton_of_simplex(n, kk).unwrap();
                let out = is_directed_mf(&k, &budgets());
                if kk == n as i32 {
                    assert!(matches!(out, DirectedMf::No), "Δ^{} accepted", n);
                } else {
                    assert_eq!(out.verdict(), "yes", "skeleton({}, {})", n, kk);
                }
            }
        }
    }

    #[test]
    fn predicate_on_lex_pairs() {
        let order = vec![vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])];
        assert!(lemma_shelling_predicate(&order));
    }

    #[test]
    fn via_ordering_on_boundary() {
        let k = SimplicialComplex::boundary_simplex(VertexSet::full(4)).unwrap();
        match dual_shellable_via_ordering(&k, &budgets()).unwrap() {
            ViaOrdering::Ordered { mnf_order, .. } => {
                assert_eq!(mnf_order, vec![VertexSet::full(4)])
            }
            ViaOrdering::Inconclusive(why) => panic!("inconclusive: {}", why),
        }
    }

    #[test]
    fn paper_example_is_not_an_mf_complex() {
        // the filled triangles are not inside any minimal non-face boundary
        let k = crate::generate::paper6();
        assert!(matches!(is_directed_mf(&k, &budgets()), DirectedMf::No));
    }
}
