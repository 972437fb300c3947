//! Shellability: orderings of facets with pure codimension-one attachments.
//!
//! An ordering `σ_1, ..., σ_k` of the facets is a shelling when for every
//! `i >= 2` the complex `⟨σ_1,...,σ_{i-1}⟩ ∩ ⟨σ_i⟩` is pure of dimension
//! `|σ_i| - 2`. Non-pure complexes are allowed; the definition applies
//! verbatim. Complexes with at most one facet (including the void complex
//! and `{∅}`) are shellable vacuously.
//!
//! The search backtracks over facet orderings, memoizing sets of placed
//! facets that admit no completion — whether a facet can be placed next
//! depends only on the set already placed. Certificates are replay-verified
//! by [`verify_shelling`], a literal face-set check sharing no code with the
//! search.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::config::Budgets;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ShellingCertificate {
    pub order: Vec<VertexSet>,
}

#[derive(Clone, Debug, Serialize)]
pub enum Shellability {
    Shellable(ShellingCertificate),
    NotShellable,
    Unknown(String),
}

impl Shellability {
    pub fn verdict(&self) -> &'static str {
        match self {
            Shellability::Shellable(_) => "yes",
            Shellability::NotShellable => "no",
            Shellability::Unknown(_) => "unknown",
        }
    }
}

/// Can `facet` be attached after the facets in `placed`?
///
/// The attachment complex `⟨placed⟩ ∩ ⟨facet⟩` is generated by the pairwise
/// intersections, so it is pure of dimension `|facet| - 2` exactly when each
/// `facet ∩ g` extends to some `facet ∩ h` of cardinality `|facet| - 1`.
fn can_place(facet: VertexSet, placed: &[VertexSet]) -> bool {
    if placed.is_empty() {
        return true;
    }
    let want = facet.len() - 1;
    placed.iter().all(|g| {
        let fg = facet.intersection(*g);
        placed.iter().any(|h| {
            let fh = facet.intersection(*h);
            fh.len() == want && fg.is_subset_of(fh)
        })
    })
}

/// Backtracking search for a shelling.
pub fn is_shellable(k: &SimplicialComplex, budgets: &Budgets) -> Shellability {
    let facets = k.facets().to_vec();
    if facets.len() <= 1 {
        return Shellability::Shellable(ShellingCertificate { order: facets });
    }
    let n = facets.len();
    if n > 128 {
        return Shellability::Unknown(format!(
            "shelling search not attempted on {} facets",
            n
        ));
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed: Vec<VertexSet> = Vec::with_capacity(n);
    let mut placed_mask: u128 = 0;
    let mut failed: HashSet<u128> = HashSet::new();
    let mut nodes = 0u64;
    let mut exhausted = false;

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        facets: &[VertexSet],
        order: &mut Vec<usize>,
        placed: &mut Vec<VertexSet>,
        placed_mask: &mut u128,
        failed: &mut HashSet<u128>,
        nodes: &mut u64,
        budget: u64,
        exhausted: &mut bool,
    ) -> bool {
        if order.len() == facets.len() {
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
        for i in 0..facets.len() {
            if *placed_mask & (1 << i) != 0 || !can_place(facets[i], placed) {
                continue;
            }
            *placed_mask |= 1 << i;
            order.push(i);
            placed.push(facets[i]);
            if dfs(
                facets,
                order,
                placed,
                placed_mask,
                failed,
                nodes,
                budget,
                exhausted,
            ) {
                return true;
            }
            placed.pop();
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
        &facets,
        &mut order,
        &mut placed,
        &mut placed_mask,
        &mut failed,
        &mut nodes,
        budgets.order_nodes,
        &mut exhausted,
    );
    if found {
        Shellability::Shellable(ShellingCertificate {
            order: order.into_iter().map(|i| facets[i]).collect(),
        })
    } else if exhausted {
        Shellability::Unknown(format!(
            "shelling search exceeded {} nodes",
            budgets.order_nodes
        ))
    } else {
        Shellability::NotShellable
    }
}

/// Literal replay of a shelling: builds the face sets of the growing facet
/// prefix, intersects with the face set of the incoming facet, and checks
/// that the maximal common faces all have cardinality `|σ_i| - 1`.
pub fn verify_shelling(k: &SimplicialComplex, order: &[VertexSet]) -> Result<()> {
    let mut sorted_input: Vec<VertexSet> = order.to_vec();
    sorted_input.sort();
    let mut expected = k.facets().to_vec();
    expected.sort();
    if sorted_input != expected {
        return Err(Error::internal(
            "shelling order is not a permutation of the facets",
        ));
    }
    let mut prefix_faces: BTreeSet<VertexSet> = BTreeSet::new();
    for (i, sigma) in order.iter().enumerate() {
        if i > 0 {
            let sigma_faces: BTreeSet<VertexSet> = sigma.subsets().collect();
            let common: Vec<VertexSet> = sigma_faces
                .iter()
                .filter(|f| prefix_faces.contains(f))
                .copied()
                .collect();
            let maximal: Vec<VertexSet> = common
                .iter()
                .filter(|f| !common.iter().any(|g| f.is_proper_subset_of(*g)))
                .copied()
                .collect();
            let want = sigma.len() as i64 - 1;
            for m in &maximal {
                if m.len() as i64 != want {
                    return Err(Error::internal(format!(
                        "step {}: attachment of {} contains the maximal common face {} \
                         of cardinality {} != {}",
                        i + 1,
                        sigma,
                        m,
                        m.len(),
                        want
                    )));
                }
            }
        }
        for f in sigma.subsets() {
            prefix_faces.insert(f);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(vals: &[u32]) -> VertexSet {
        VertexSet::from_vertices(vals.iter().map(|v| v - 1))
    }

    #[test]
    fn boundary_of_simplex_any_order() {
        // facets of ∂Δ^[m] pairwise intersect in cardinality m - 2, so any
        // ordering is a shelling
        let k = SimplicialComplex::boundary_simplex(VertexSet::full(4)).unwrap();
        let mut order = k.facets().to_vec();
        verify_shelling(&k, &order).unwrap();
        order.reverse();
        verify_shelling(&k, &order).unwrap();
    }

    #[test]
    fn zero_dimensional_complexes_shell() {
        let k = crate::generate::disjoint_points(4).unwrap();
        match is_shellable(&k, &Budgets::default()) {
            Shellability::Shellable(cert) => verify_shelling(&k, &cert.order).unwrap(),
            other => panic!("points should shell, got {}", other.verdict()),
        }
    }

    #[test]
    fn skeleton_is_shellable_but_not_in_every_order() {
        let k = crate::generate::skeleton_of_simplex(3, 1).unwrap();
        match is_shellable(&k, &Budgets::default()) {
            Shellability::Shellable(cert) => verify_shelling(&k, &cert.order).unwrap(),
            other => panic!("1-skeleton of Δ^3 should shell, got {}", other.verdict()),
        }
        // an order starting with two disjoint edges is not a shelling
        let bad = vec![
            vs(&[1, 2]),
            vs(&[3, 4]),
            vs(&[1, 3]),
            vs(&[1, 4]),
            vs(&[2, 3]),
            vs(&[2, 4]),
        ];
        assert!(verify_shelling(&k, &bad).is_err());
    }

    #[test]
    fn paper_example_is_not_shellable() {
        let k = crate::generate::paper6();
        assert!(matches!(
            is_shellable(&k, &Budgets::default()),
            Shellability::NotShellable
        ));
    }

    #[test]
    fn disjoint_edges_are_not_shellable() {
        let k =
            SimplicialComplex::from_facets([vs(&[1, 2]), vs(&[3, 4])], VertexSet::full(4))
                .unwrap();
        assert!(matches!(
            is_shellable(&k, &Budgets::default()),
            Shellability::NotShellable
        ));
    }

    #[test]
    fn degenerate_complexes_shell_vacuously() {
        let e = SimplicialComplex::empty_complex(VertexSet::full(2));
        assert_eq!(is_shellable(&e, &Budgets::default()).verdict(), "yes");
        let v = SimplicialComplex::void(VertexSet::full(2));
        assert_eq!(is_shellable(&v, &Budgets::default()).verdict(), "yes");
    }

    #[test]
    fn rp2_is_not_shellable() {
        let k = crate::generate::real_projective_plane();
        assert!(matches!(
            is_shellable(&k, &Budgets::default()),
            Shellability::NotShellable
        ));
    }
}
