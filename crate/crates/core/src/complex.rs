//! Simplicial complexes on a ground set, represented by their facet list.
//!
//! A complex is stored as the antichain of its maximal faces over an explicit
//! ground set. The ground set may strictly contain the vertex set: Alexander
//! duality is taken over the ground set, and a ground vertex carried by no
//! face ("ghost vertex") produces singleton minimal non-faces, which the
//! decomposition machinery must handle.
//!
//! Two degenerate complexes are distinguished:
//!
//! * the **void** complex with no faces at all (empty facet list), and
//! * the **empty** complex `{∅}` whose only face is the empty face
//!   (facet list `[∅]`).
//!
//! All values are immutable after construction and safe to share across
//! threads.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A single face together with its dimension (`|vertices| - 1`; the empty
/// face has dimension -1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Face {
    pub vertices: VertexSet,
}

impl Face {
    pub fn dimension(&self) -> i32 {
        self.vertices.len() as i32 - 1
    }
}

/// A simplicial complex given by its facets over a ground set.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    ground_set: VertexSet,
    /// Pairwise incomparable under inclusion, sorted canonically.
    facets: Vec<VertexSet>,
    /// Union of the facets; may be smaller than the ground set.
    vertex_set: VertexSet,
}

impl SimplicialComplex {
    /// Build a complex from generating sets, removing duplicates and
    /// dominated sets and storing facets in canonical sorted order.
    pub fn from_facets<I>(facets: I, ground_set: VertexSet) -> Result<SimplicialComplex>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let mut list: Vec<VertexSet> = Vec::new();
        for f in facets {
            if !f.is_subset_of(ground_set) {
                return Err(Error::invalid(format!(
                    "facet {} not contained in ground set {}",
                    f, ground_set
                )));
            }
            if list.iter().any(|g| f.is_subset_of(*g)) {
                continue;
            }
            list.retain(|g| !g.is_subset_of(f));
            list.push(f);
        }
        list.sort();
        let vertex_set = list
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f));
        Ok(SimplicialComplex {
            ground_set,
            facets: list,
            vertex_set,
        })
    }

    /// The void complex: no faces, not even the empty one.
    pub fn void(ground_set: VertexSet) -> SimplicialComplex {
        SimplicialComplex {
            ground_set,
            facets: Vec::new(),
            vertex_set: VertexSet::EMPTY,
        }
    }

    /// The complex `{∅}` whose only face is the empty face.
    pub fn empty_complex(ground_set: VertexSet) -> SimplicialComplex {
        SimplicialComplex {
            ground_set,
            facets: vec![VertexSet::EMPTY],
            vertex_set: VertexSet::EMPTY,
        }
    }

    /// The full simplex on `s`, over the ground set `s` itself.
    pub fn full_simplex(s: VertexSet) -> SimplicialComplex {
        SimplicialComplex {
            ground_set: s,
            facets: vec![s],
            vertex_set: s,
        }
    }

    /// Boundary of the simplex on `s`: all proper subsets of `s`.
    /// Requires `|s| >= 2`.
    pub fn boundary_simplex(s: VertexSet) -> Result<SimplicialComplex> {
        if s.len() < 2 {
            return Err(Error::invalid(format!(
                "boundary of simplex needs |S| >= 2, got {}",
                s
            )));
        }
        let facets = s.subsets_of_size(s.len() - 1);
        SimplicialComplex::from_facets(facets, s)
    }

    /// `Δ(V,S)`: the disjoint union of `∂Δ^S` and the vertices `V - S`.
    /// Requires `|S| >= 2` and `S ⊆ V`.
    pub fn delta_vs(v: VertexSet, s: VertexSet) -> Result<SimplicialComplex> {
        if s.len() < 2 {
            return Err(Error::invalid(format!(
                "Δ(V,S) needs |S| >= 2, got {}",
                s
            )));
        }
        if !s.is_subset_of(v) {
            return Err(Error::invalid(format!("S = {} must be a subset of V = {}", s, v)));
        }
        let mut facets = s.subsets_of_size(s.len() - 1);
        for w in v.difference(s).iter() {
            facets.push(VertexSet::singleton(w));
        }
        SimplicialComplex::from_facets(facets, v)
    }

    pub fn ground_set(&self) -> VertexSet {
        self.ground_set
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertex_set
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the complex `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<i32> {
        self.facets.last().map(|f| f.len() as i32 - 1)
    }

    pub fn is_face(&self, sigma: VertexSet) -> bool {
        self.facets.iter().any(|f| sigma.is_subset_of(*f))
    }

    /// Replace the ground set, keeping the face family. The new ground set
    /// must contain every face.
    pub fn with_ground_set(&self, ground_set: VertexSet) -> Result<SimplicialComplex> {
        if !self.vertex_set.is_subset_of(ground_set) {
            return Err(Error::invalid(format!(
                "ground set {} does not contain the vertex set {}",
                ground_set, self.vertex_set
            )));
        }
        Ok(SimplicialComplex {
            ground_set,
            facets: self.facets.clone(),
            vertex_set: self.vertex_set,
        })
    }

    /// All `d`-dimensional faces, each once, sorted. `d = -1` yields the
    /// empty face for any non-void complex. Out-of-range `d` yields nothing.
    pub fn faces(&self, d: i32) -> Vec<Face> {
        if d < -1 || self.is_void() {
            return Vec::new();
        }
        if d == -1 {
            return vec![Face {
                vertices: VertexSet::EMPTY,
            }];
        }
        let k = (d + 1) as u32;
        let mut seen = BTreeSet::new();
        for f in &self.facets {
            for s in f.subsets_of_size(k) {
                seen.insert(s);
            }
        }
        seen.into_iter().map(|vertices| Face { vertices }).collect()
    }

    /// Every face (excluding nothing; `∅` is included for non-void
    /// complexes), as a sorted set.
    pub fn all_faces(&self) -> BTreeSet<VertexSet> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                out.insert(s);
            }
        }
        out
    }

    /// Like [`all_faces`](Self::all_faces) but aborts once more than `cap`
    /// faces have been collected.
    pub fn all_faces_capped(&self, cap: usize) -> Option<BTreeSet<VertexSet>> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                out.insert(s);
                if out.len() > cap {
                    return None;
                }
            }
        }
        Some(out)
    }

    /// Number of faces per dimension, starting at dimension 0.
    pub fn face_vector(&self) -> Vec<u64> {
        let mut counts: Vec<u64> = Vec::new();
        for s in self.all_faces() {
            if s.is_empty() {
                continue;
            }
            let d = (s.len() - 1) as usize;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        counts
    }

    /// Euler characteristic `Σ (-1)^d f_d` over dimensions `d >= 0`.
    pub fn euler_characteristic(&self) -> i64 {
        self.face_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Full subcomplex `K_I = {σ ∈ K : σ ⊆ I}` over the ground set `I`.
    pub fn full_subcomplex(&self, i: VertexSet) -> Result<SimplicialComplex> {
        if i.is_empty() {
            return Err(Error::invalid("full subcomplex needs a nonempty index set"));
        }
        if self.is_void() {
            return Ok(SimplicialComplex::void(i));
        }
        SimplicialComplex::from_facets(self.facets.iter().map(|f| f.intersection(i)), i)
    }

    /// Link `lk_K(v) = {σ ∈ K : v ∉ σ, σ ∪ v ∈ K}` over the ground set
    /// `V - {v}`. `v` must be a vertex of the complex.
    pub fn link(&self, v: u32) -> Result<SimplicialComplex> {
        if !self.vertex_set.contains(v) {
            return Err(Error::invalid(format!(
                "{} is not a vertex of the complex",
                VertexSet::singleton(v)
            )));
        }
        let ground = self.ground_set.without(v);
        SimplicialComplex::from_facets(
            self.facets
                .iter()
                .filter(|f| f.contains(v))
                .map(|f| f.without(v)),
            ground,
        )
    }

    /// Iterated link at a vertex set: `lk_K(W) = {σ : σ ∩ W = ∅, σ ∪ W ∈ K}`
    /// over the ground set `V - W`. Void when `W` is not a face; equals the
    /// complex itself when `W = ∅`. Links at single vertices iterate to this.
    pub fn link_of_set(&self, w: VertexSet) -> SimplicialComplex {
        let ground = self.ground_set.difference(w);
        if !self.is_face(w) {
            return SimplicialComplex::void(ground);
        }
        SimplicialComplex::from_facets(
            self.facets
                .iter()
                .filter(|f| w.is_subset_of(**f))
                .map(|f| f.difference(w)),
            ground,
        )
        .expect("link facets stay inside the reduced ground set")
    }

    /// Deletion `dl_K(v) = {σ ∈ K : σ ⊆ V - {v}}` over the ground set
    /// `V - {v}`. `v` must be a vertex of the complex.
    pub fn deletion(&self, v: u32) -> Result<SimplicialComplex> {
        if !self.vertex_set.contains(v) {
            return Err(Error::invalid(format!(
                "{} is not a vertex of the complex",
                VertexSet::singleton(v)
            )));
        }
        let ground = self.ground_set.without(v);
        SimplicialComplex::from_facets(self.facets.iter().map(|f| f.without(v)), ground)
    }

    /// All minimal non-faces with respect to the ground set, sorted by
    /// `(cardinality, lex)`.
    ///
    /// A subset of the ground set is a minimal non-face when it is not a face
    /// but all of its proper subsets are. Equivalently, the minimal non-faces
    /// are the minimal transversals of the facet complements, which is how
    /// they are enumerated here (no `2^|V|` sweep). Ghost vertices yield
    /// singleton minimal non-faces; the void complex yields `[∅]`; the full
    /// simplex yields none.
    pub fn minimal_non_faces(&self) -> Vec<VertexSet> {
        let mut transversals = vec![VertexSet::EMPTY];
        for f in &self.facets {
            let edge = self.ground_set.difference(*f);
            let mut next: Vec<VertexSet> = Vec::new();
            for t in transversals {
                if t.intersects(edge) {
                    push_minimal(&mut next, t);
                } else {
                    for x in edge.iter() {
                        push_minimal(&mut next, t.with(x));
                    }
                }
            }
            transversals = next;
        }
        transversals.sort_by(|a, b| a.card_lex_cmp(*b));
        transversals
    }

    /// The `k`-skeleton: all faces of dimension at most `k`.
    /// Requires `0 <= k <= dim`.
    pub fn skeleton(&self, k: i32) -> Result<SimplicialComplex> {
        let dim = self
            .dim()
            .ok_or_else(|| Error::invalid("skeleton of the void complex"))?;
        if k < 0 || k > dim {
            return Err(Error::invalid(format!(
                "skeleton index {} out of range 0..={}",
                k, dim
            )));
        }
        let cap = (k + 1) as u32;
        let mut facets = Vec::new();
        for f in &self.facets {
            if f.len() <= cap {
                facets.push(*f);
            } else {
                facets.extend(f.subsets_of_size(cap));
            }
        }
        SimplicialComplex::from_facets(facets, self.ground_set)
    }

    /// Rename vertices through a permutation of `0..m` (`perm[old] = new`).
    pub fn relabel(&self, perm: &[u32]) -> Result<SimplicialComplex> {
        let map = |s: VertexSet| -> Result<VertexSet> {
            let mut out = VertexSet::EMPTY;
            for v in s.iter() {
                let img = *perm
                    .get(v as usize)
                    .ok_or_else(|| Error::invalid("permutation too short"))?;
                out = out.with(img);
            }
            Ok(out)
        };
        let ground = map(self.ground_set)?;
        let facets = self
            .facets
            .iter()
            .map(|f| map(*f))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(facets, ground)
    }
}

fn push_minimal(list: &mut Vec<VertexSet>, candidate: VertexSet) {
    if list.iter().any(|t| t.is_subset_of(candidate)) {
        return;
    }
    list.retain(|t| !candidate.is_subset_of(*t));
    list.push(candidate);
}

impl std::fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_void() {
            return write!(f, "⟨⟩ (void) on {}", self.ground_set);
        }
        write!(f, "⟨")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", facet)?;
        }
        write!(f, "⟩ on {}", self.ground_set)
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}
