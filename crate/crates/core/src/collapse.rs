//! Collapsibility by free-face collapsing with backtracking.
//!
//! A face `τ` is free when it has exactly one proper coface `σ` (necessarily
//! of one dimension higher); the elementary collapse removes the pair
//! `(τ, σ)`. A complex is collapsible when some sequence of elementary
//! collapses leaves a single vertex. Greedy collapsing can get stuck, so the
//! search backtracks, memoizing face sets that cannot reach a point.
//!
//! Verdicts are three-valued: a completed search that finds nothing is a
//! proof of non-collapsibility, while hitting the node budget yields an
//! explicit `Unknown`, never a silent false.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::config::Budgets;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CollapseStep {
    pub free_face: VertexSet,
    pub cofacet: VertexSet,
}

/// A replayable collapse sequence; applying the steps to the starting
/// complex leaves a single vertex.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CollapseCertificate {
    pub steps: Vec<CollapseStep>,
}

#[derive(Clone, Debug, Serialize)]
pub enum Collapsibility {
    Collapsible(CollapseCertificate),
    NotCollapsible,
    Unknown(String),
}

impl Collapsibility {
    pub fn verdict(&self) -> &'static str {
        match self {
            Collapsibility::Collapsible(_) => "yes",
            Collapsibility::NotCollapsible => "no",
            Collapsibility::Unknown(_) => "unknown",
        }
    }
}

/// The set of nonempty faces; the empty face never takes part in a collapse.
pub(crate) type FaceSet = BTreeSet<VertexSet>;

pub(crate) fn nonempty_faces(k: &SimplicialComplex) -> FaceSet {
    k.all_faces().into_iter().filter(|f| !f.is_empty()).collect()
}

/// Decide collapsibility of `k`. The void complex is rejected as input;
/// `{∅}` has no vertex to collapse to and is reported not collapsible.
pub fn is_collapsible(k: &SimplicialComplex, budgets: &Budgets) -> Result<Collapsibility> {
    if k.is_void() {
        return Err(Error::invalid("collapsibility of the void complex"));
    }
    if k.is_empty_complex() {
        return Ok(Collapsibility::NotCollapsible);
    }
    if k.all_faces_capped(budgets.max_faces).is_none() {
        return Ok(Collapsibility::Unknown(format!(
            "complex exceeds the face cap of {}",
            budgets.max_faces
        )));
    }
    let mut faces = nonempty_faces(k);
    Ok(collapse_search(&mut faces, budgets.collapse_nodes))
}

/// Search for a collapse of an explicit face set (shared with the
/// deletability search, which collapses facet-deleted complexes).
///
/// Faces are indexed once; states are subset bitmasks over the index space
/// with incrementally maintained coface counts, and the memo of failed
/// states is exact. Complexes with more than 128 nonempty faces fall back
/// to an `Unknown` verdict — at that size the exhaustive search is out of
/// desk range anyway.
pub(crate) fn collapse_search(faces: &mut FaceSet, node_budget: u64) -> Collapsibility {
    if faces.is_empty() {
        return Collapsibility::NotCollapsible;
    }
    // elementary collapses preserve the Euler characteristic and a point has
    // χ = 1, so anything else cannot collapse
    let chi: i64 = faces
        .iter()
        .map(|f| if (f.len() - 1) % 2 == 0 { 1i64 } else { -1 })
        .sum();
    if chi != 1 {
        return Collapsibility::NotCollapsible;
    }
    let list: Vec<VertexSet> = faces.iter().copied().collect();
    let n = list.len();
    if n > 128 {
        return Collapsibility::Unknown(format!(
            "collapse search not attempted on {} faces",
            n
        ));
    }

    // cofaces[i] = indices of faces strictly containing face i
    let cofaces: Vec<Vec<u8>> = list
        .iter()
        .map(|tau| {
            (0..n)
                .filter(|&j| tau.is_proper_subset_of(list[j]))
                .map(|j| j as u8)
                .collect()
        })
        .collect();
    let subfaces: Vec<Vec<u8>> = {
        let mut subs = vec![Vec::new(); n];
        for (i, cf) in cofaces.iter().enumerate() {
            for &j in cf {
                subs[j as usize].push(i as u8);
            }
        }
        subs
    };

    let mut search = Search {
        list: &list,
        cofaces: &cofaces,
        subfaces: &subfaces,
        alive: (if n == 128 { u128::MAX } else { (1u128 << n) - 1 }),
        alive_count: n,
        coface_count: cofaces.iter().map(|c| c.len() as i32).collect(),
        steps: Vec::new(),
        failed: HashSet::new(),
        nodes: 0,
        budget: node_budget,
        exhausted: false,
    };
    if search.dfs() {
        let steps = search.steps.clone();
        return Collapsibility::Collapsible(CollapseCertificate { steps });
    }
    if search.exhausted {
        Collapsibility::Unknown(format!("collapse search exceeded {} nodes", node_budget))
    } else {
        Collapsibility::NotCollapsible
    }
}

const MEMO_CAP: usize = 1 << 21;

struct Search<'a> {
    list: &'a [VertexSet],
    cofaces: &'a [Vec<u8>],
    subfaces: &'a [Vec<u8>],
    alive: u128,
    alive_count: usize,
    coface_count: Vec<i32>,
    steps: Vec<CollapseStep>,
    failed: HashSet<u128>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn remove(&mut self, i: usize) {
        self.alive &= !(1u128 << i);
        self.alive_count -= 1;
        for &s in &self.subfaces[i] {
            self.coface_count[s as usize] -= 1;
        }
    }

    fn restore(&mut self, i: usize) {
        self.alive |= 1u128 << i;
        self.alive_count += 1;
        for &s in &self.subfaces[i] {
            self.coface_count[s as usize] += 1;
        }
    }

    fn dfs(&mut self) -> bool {
        if self.alive_count == 1 {
            let only = self.alive.trailing_zeros() as usize;
            if self.list[only].len() == 1 {
                return true;
            }
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return false;
        }
        if self.failed.contains(&self.alive) {
            return false;
        }

        // free pairs: alive faces with exactly one alive coface; the faces
        // are indexed in canonical order, so scanning from the top tries the
        // largest cofacets first
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for tau in (0..self.list.len()).rev() {
            if self.alive & (1 << tau) == 0 || self.coface_count[tau] != 1 {
                continue;
            }
            let sigma = self.cofaces[tau]
                .iter()
                .map(|&j| j as usize)
                .find(|&j| self.alive & (1 << j) != 0)
                .expect("coface count says one is alive");
            pairs.push((tau, sigma));
        }
        pairs.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));

        for (tau, sigma) in pairs {
            self.remove(tau);
            self.remove(sigma);
            self.steps.push(CollapseStep {
                free_face: self.list[tau],
                cofacet: self.list[sigma],
            });
            if self.dfs() {
                return true;
            }
            self.steps.pop();
            self.restore(sigma);
            self.restore(tau);
            if self.exhausted {
                return false;
            }
        }
        if self.failed.len() < MEMO_CAP {
            self.failed.insert(self.alive);
        }
        false
    }
}

/// Independent replay of a collapse certificate: literal checks against the
/// face set, sharing nothing with the search above.
pub fn verify_collapse(k: &SimplicialComplex, cert: &CollapseCertificate) -> Result<()> {
    let mut faces = nonempty_faces(k);
    verify_collapse_on_faces(&mut faces, cert)
}

pub(crate) fn verify_collapse_on_faces(
    faces: &mut FaceSet,
    cert: &CollapseCertificate,
) -> Result<()> {
    for (i, step) in cert.steps.iter().enumerate() {
        let tau = step.free_face;
        let sigma = step.cofacet;
        if !faces.contains(&tau) || !faces.contains(&sigma) {
            return Err(Error::internal(format!(
                "collapse step {}: pair ({}, {}) not present",
                i, tau, sigma
            )));
        }
        if !tau.is_proper_subset_of(sigma) || sigma.len() != tau.len() + 1 {
            return Err(Error::internal(format!(
                "collapse step {}: {} is not a codimension-one face of {}",
                i, tau, sigma
            )));
        }
        let cofaces: Vec<VertexSet> = faces
            .iter()
            .copied()
            .filter(|rho| tau.is_proper_subset_of(*rho))
            .collect();
        if cofaces != vec![sigma] {
            return Err(Error::internal(format!(
                "collapse step {}: {} is not free (cofaces {:?})",
                i, tau, cofaces
            )));
        }
        faces.remove(&tau);
        faces.remove(&sigma);
    }
    if faces.len() != 1 || faces.iter().next().unwrap().len() != 1 {
        return Err(Error::internal(
            "collapse replay did not end at a single vertex",
        ));
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
    fn simplex_is_collapsible() {
        for m in 1..=5u32 {
            let k = SimplicialComplex::full_simplex(VertexSet::full(m));
            let out = is_collapsible(&k, &Budgets::default()).unwrap();
            match out {
                Collapsibility::Collapsible(cert) => verify_collapse(&k, &cert).unwrap(),
                other => panic!("Δ^[{}] should collapse, got {:?}", m, other.verdict()),
            }
        }
    }

    #[test]
    fn hollow_triangle_is_not() {
        let k = SimplicialComplex::boundary_simplex(VertexSet::full(3)).unwrap();
        let out = is_collapsible(&k, &Budgets::default()).unwrap();
        assert!(matches!(out, Collapsibility::NotCollapsible));
    }

    #[test]
    fn paper_six_vertex_example_collapses() {
        let k = crate::generate::paper6();
        let out = is_collapsible(&k, &Budgets::default()).unwrap();
        match out {
            Collapsibility::Collapsible(cert) => verify_collapse(&k, &cert).unwrap(),
            other => panic!("expected collapsible, got {:?}", other.verdict()),
        }
    }

    #[test]
    fn disconnected_pair_of_edges_is_not() {
        let k = SimplicialComplex::from_facets(
            [vs(&[1, 2]), vs(&[3, 4])],
            VertexSet::full(4),
        )
        .unwrap();
        // χ = 2, rejected before any search
        let out = is_collapsible(&k, &Budgets::default()).unwrap();
        assert!(matches!(out, Collapsibility::NotCollapsible));
    }

    #[test]
    fn empty_complex_and_void() {
        let e = SimplicialComplex::empty_complex(VertexSet::full(2));
        assert!(matches!(
            is_collapsible(&e, &Budgets::default()).unwrap(),
            Collapsibility::NotCollapsible
        ));
        let v = SimplicialComplex::void(VertexSet::full(2));
        assert!(is_collapsible(&v, &Budgets::default()).is_err());
    }

    #[test]
    fn budget_exhaustion_reports_unknown() {
        let k = crate::generate::paper6();
        let tight = Budgets {
            collapse_nodes: 1,
            ..Budgets::default()
        };
        let out = is_collapsible(&k, &tight).unwrap();
        assert!(matches!(out, Collapsibility::Unknown(_)));
    }
}
