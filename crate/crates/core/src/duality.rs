//! Alexander duality over an explicit ground set.
//!
//! The dual of `L` with respect to a ground set `V` consists of the subsets
//! `σ ⊆ V` whose complement `V - σ` is not a face of `L`. It is computed
//! through the facet/minimal-non-face correspondence — the facets of `L^∨`
//! are the complements of the minimal non-faces of `L` — rather than by a
//! `2^|V|` sweep. The brute-force definition is kept in the test suite as an
//! oracle.
//!
//! Degenerate conventions, chosen so that the double dual is the identity on
//! face families: the dual of the full simplex on `V` is the void complex,
//! and the dual of the void complex is the full simplex.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Alexander dual of `l` over the ground set `v`.
pub fn alexander_dual(l: &SimplicialComplex, v: VertexSet) -> Result<SimplicialComplex> {
    if !l.vertex_set().is_subset_of(v) {
        return Err(Error::invalid(format!(
            "complex has a face outside the duality ground set {}",
            v
        )));
    }
    let rebased = l.with_ground_set(v)?;
    let facets: Vec<VertexSet> = rebased
        .minimal_non_faces()
        .into_iter()
        .map(|t| t.complement_in(v))
        .collect();
    SimplicialComplex::from_facets(facets, v)
}

/// One verified facet ↔ minimal-non-face pair: `sigma` is a facet of `L` and
/// `sigma_dual = V - sigma` is a minimal non-face of `L^∨`.
#[derive(Clone, Debug, Serialize)]
pub struct FacetDualPair {
    pub sigma: VertexSet,
    pub sigma_dual: VertexSet,
}

/// The bijection between facets of `l` and minimal non-faces of its dual,
/// checked pair by pair before it is returned.
pub fn dual_facet_correspondence(
    l: &SimplicialComplex,
    v: VertexSet,
) -> Result<Vec<FacetDualPair>> {
    let dual = alexander_dual(l, v)?;
    let dual_mnf = dual.with_ground_set(v)?.minimal_non_faces();
    let rebased = l.with_ground_set(v)?;
    let facets = rebased.facets();
    if facets.len() != dual_mnf.len() {
        return Err(Error::internal(format!(
            "facet/minimal-non-face counts differ: {} facets vs {} dual minimal non-faces",
            facets.len(),
            dual_mnf.len()
        )));
    }
    let mut pairs = Vec::with_capacity(facets.len());
    for &f in facets {
        let c = f.complement_in(v);
        if !dual_mnf.contains(&c) {
            return Err(Error::internal(format!(
                "complement {} of facet {} is not a minimal non-face of the dual",
                c, f
            )));
        }
        pairs.push(FacetDualPair {
            sigma: f,
            sigma_dual: c,
        });
    }
    Ok(pairs)
}

/// Check the deletion/link identity `dl_L(v)^∨ = lk_{L^∨}(v)`, with the dual
/// of the deletion taken over `V - {v}` and the dual of `L` over `V`.
/// Always true; exposed as a self-test.
pub fn deletion_link_duality_check(
    l: &SimplicialComplex,
    v: VertexSet,
    vertex: u32,
) -> Result<bool> {
    if !v.contains(vertex) {
        return Err(Error::invalid(format!(
            "vertex {} is outside the ground set {}",
            vertex + 1,
            v
        )));
    }
    let rebased = l.with_ground_set(v)?;
    let lhs = if rebased.vertex_set().contains(vertex) {
        alexander_dual(&rebased.deletion(vertex)?, v.without(vertex))?
    } else {
        // deleting a ghost vertex leaves the face family unchanged
        alexander_dual(&rebased.with_ground_set(v.without(vertex))?, v.without(vertex))?
    };
    let dual = alexander_dual(&rebased, v)?;
    let rhs = if dual.vertex_set().contains(vertex) {
        dual.link(vertex)?
    } else {
        // a ghost vertex of the dual has a void link
        SimplicialComplex::void(v.without(vertex))
    };
    Ok(lhs.facets() == rhs.facets() && lhs.ground_set() == rhs.ground_set())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(vals: &[u32]) -> VertexSet {
        VertexSet::from_vertices(vals.iter().map(|v| v - 1))
    }

    #[test]
    fn dual_of_triangle_boundary() {
        let k = SimplicialComplex::boundary_simplex(VertexSet::full(3)).unwrap();
        let d = alexander_dual(&k, VertexSet::full(3)).unwrap();
        // single minimal non-face [3] -> dual has the single facet ∅
        assert!(d.is_empty_complex());
        let dd = alexander_dual(&d, VertexSet::full(3)).unwrap();
        assert_eq!(dd.facets(), k.facets());
    }

    #[test]
    fn dual_of_skeleton_is_a_skeleton() {
        // k-skeleton of Δ^[m] dualizes to the (m-k-3)-skeleton
        let m = 5u32;
        for k in 0..(m as i32 - 1) {
            let skel = SimplicialComplex::full_simplex(VertexSet::full(m))
                .skeleton(k)
                .unwrap();
            let dual = alexander_dual(&skel, VertexSet::full(m)).unwrap();
            let expect_dim = m as i32 - k - 3;
            if expect_dim < 0 {
                assert!(dual.is_empty_complex() || dual.is_void());
            } else {
                let expect = SimplicialComplex::full_simplex(VertexSet::full(m))
                    .skeleton(expect_dim)
                    .unwrap();
                assert_eq!(dual.facets(), expect.facets());
            }
        }
    }

    #[test]
    fn degenerate_duals() {
        let v = VertexSet::full(3);
        let full = SimplicialComplex::full_simplex(v);
        let d = alexander_dual(&full, v).unwrap();
        assert!(d.is_void());
        let void = SimplicialComplex::void(v);
        let d = alexander_dual(&void, v).unwrap();
        assert_eq!(d.facets(), &[v]);
    }

    #[test]
    fn correspondence_on_triangle_boundary() {
        let k = SimplicialComplex::boundary_simplex(VertexSet::full(3)).unwrap();
        let pairs = dual_facet_correspondence(&k, VertexSet::full(3)).unwrap();
        let got: Vec<_> = pairs.iter().map(|p| (p.sigma, p.sigma_dual)).collect();
        assert_eq!(
            got,
            vec![
                (vs(&[1, 2]), vs(&[3])),
                (vs(&[1, 3]), vs(&[2])),
                (vs(&[2, 3]), vs(&[1])),
            ]
        );
    }

    #[test]
    fn correspondence_on_full_simplex() {
        let k = SimplicialComplex::full_simplex(VertexSet::full(3));
        let pairs = dual_facet_correspondence(&k, VertexSet::full(3)).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].sigma, VertexSet::full(3));
        assert_eq!(pairs[0].sigma_dual, VertexSet::EMPTY);
    }

    #[test]
    fn deletion_link_duality_small() {
        let k = SimplicialComplex::from_facets(
            [vs(&[1, 2, 3]), vs(&[3, 4]), vs(&[4, 5])],
            VertexSet::full(5),
        )
        .unwrap();
        for vert in 0..5 {
            assert!(deletion_link_duality_check(&k, VertexSet::full(5), vert).unwrap());
        }
    }
}
