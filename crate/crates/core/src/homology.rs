//! Independent exact verification layer: integer simplicial homology.
//!
//! Reduced homology over ℤ is computed from augmented simplicial chain
//! complexes via Smith normal form. This module deliberately re-enumerates
//! faces from the facet list with its own code path — it never calls the
//! face machinery used by the search and decomposition modules — so that its
//! verdicts remain an independent cross-check.
//!
//! Conventions: `H̃_{-1}` of the complex `{∅}` is ℤ (rank 1); any complex
//! with a vertex has `H̃_{-1} = 0`; the void complex is reported through a
//! dedicated flag and has no homology groups at all.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::filling::ChosenFillings;
use crate::par;
use crate::snf::{smith_normal_form, SmithDiagonal};
use crate::vertex_set::VertexSet;

/// Default cap on the number of faces materialized for one homology run.
pub const DEFAULT_MAX_FACES: usize = 1 << 20;

/// Faces per dimension plus the boundary matrices of the augmented chain
/// complex. Entry `faces[i]` holds the faces of dimension `i - 1`, so the
/// empty face sits at index 0.
pub struct ChainComplexData {
    pub faces: Vec<Vec<VertexSet>>,
    /// `boundaries[i]` is `∂` from dimension `i - 1` into dimension `i - 2`
    /// (entries in `{-1, 0, 1}`); `boundaries[0]` is empty.
    pub boundaries: Vec<BoundaryMatrix>,
}

pub struct BoundaryMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<i8>,
}

impl BoundaryMatrix {
    fn empty(rows: usize, cols: usize) -> Self {
        BoundaryMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }
}

/// Reduced integer homology, one group per dimension starting at -1.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HomologySummary {
    /// The void complex has no chain complex at all; flagged rather than
    /// given fake groups.
    pub is_void: bool,
    /// `groups[i]` is `H̃_{i-1}`.
    pub groups: Vec<HomologyGroup>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub rank: u64,
    pub torsion: Vec<u128>,
}

impl HomologySummary {
    fn void() -> Self {
        HomologySummary {
            is_void: true,
            groups: Vec::new(),
        }
    }

    pub fn rank(&self, dim: i32) -> u64 {
        if dim < -1 {
            return 0;
        }
        self.groups
            .get((dim + 1) as usize)
            .map_or(0, |g| g.rank)
    }

    pub fn torsion(&self, dim: i32) -> &[u128] {
        if dim < -1 {
            return &[];
        }
        self.groups
            .get((dim + 1) as usize)
            .map_or(&[], |g| g.torsion.as_slice())
    }

    /// All reduced homology vanishes, including `H̃_{-1}`. False for the
    /// void complex.
    pub fn is_acyclic(&self) -> bool {
        !self.is_void
            && self
                .groups
                .iter()
                .all(|g| g.rank == 0 && g.torsion.is_empty())
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    /// Dimensions with a nonzero group, with ranks and torsion, as a map for
    /// reports.
    pub fn nonzero(&self) -> BTreeMap<i32, HomologyGroup> {
        self.groups
            .iter()
            .enumerate()
            .filter(|(_, g)| g.rank != 0 || !g.torsion.is_empty())
            .map(|(i, g)| (i as i32 - 1, g.clone()))
            .collect()
    }
}

/// Enumerate the faces of the subcomplex `{σ ∈ K : σ ⊆ restrict}` from the
/// facet list alone, grouped by dimension (index 0 = the empty face).
fn faces_by_dim(
    facets: &[VertexSet],
    restrict: VertexSet,
    max_faces: usize,
) -> Result<Vec<Vec<VertexSet>>> {
    let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
    for f in facets {
        let g = f.intersection(restrict);
        for s in g.subsets() {
            seen.insert(s);
        }
        if seen.len() > max_faces {
            return Err(Error::SizeLimit(format!(
                "face enumeration exceeded {} faces",
                max_faces
            )));
        }
    }
    let mut by_dim: Vec<Vec<VertexSet>> = Vec::new();
    for s in seen {
        let level = s.len() as usize;
        if by_dim.len() <= level {
            by_dim.resize(level + 1, Vec::new());
        }
        by_dim[level].push(s);
    }
    Ok(by_dim)
}

fn boundary_matrix(lower: &[VertexSet], upper: &[VertexSet]) -> BoundaryMatrix {
    let mut m = BoundaryMatrix::empty(lower.len(), upper.len());
    let row_of: HashMap<VertexSet, usize> =
        lower.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    for (col, s) in upper.iter().enumerate() {
        for (j, v) in s.iter().enumerate() {
            let face = s.without(v);
            let row = row_of[&face];
            m.entries[row * upper.len() + col] = if j % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

fn check_dd_zero(lower: &BoundaryMatrix, upper: &BoundaryMatrix) -> Result<()> {
    // ∂_{d-1} ∘ ∂_d must vanish
    for i in 0..lower.rows {
        for k in 0..upper.cols {
            let mut acc: i32 = 0;
            for j in 0..lower.cols {
                acc += lower.entries[i * lower.cols + j] as i32
                    * upper.entries[j * upper.cols + k] as i32;
            }
            if acc != 0 {
                return Err(Error::internal("∂∂ != 0 in assembled chain complex"));
            }
        }
    }
    Ok(())
}

/// Assemble the augmented chain complex of the subcomplex of `facets`
/// restricted to `restrict`, verifying `∂∂ = 0`.
fn chain_complex_restricted(
    facets: &[VertexSet],
    restrict: VertexSet,
    max_faces: usize,
) -> Result<ChainComplexData> {
    let faces = faces_by_dim(facets, restrict, max_faces)?;
    let mut boundaries: Vec<BoundaryMatrix> = Vec::with_capacity(faces.len());
    for i in 0..faces.len() {
        if i == 0 {
            boundaries.push(BoundaryMatrix::empty(0, faces[0].len()));
        } else {
            boundaries.push(boundary_matrix(&faces[i - 1], &faces[i]));
        }
    }
    for i in 2..boundaries.len() {
        check_dd_zero(&boundaries[i - 1], &boundaries[i])?;
    }
    Ok(ChainComplexData { faces, boundaries })
}

/// Public entry point for the assembled chain complex of a whole complex.
pub fn chain_complex(k: &SimplicialComplex) -> Result<ChainComplexData> {
    chain_complex_restricted(k.facets(), k.ground_set(), DEFAULT_MAX_FACES)
}

fn homology_from_chain(data: &ChainComplexData) -> Result<HomologySummary> {
    if data.faces.is_empty() {
        return Ok(HomologySummary::void());
    }
    let levels = data.faces.len();
    let mut snfs: Vec<SmithDiagonal> = Vec::with_capacity(levels);
    for b in &data.boundaries {
        snfs.push(smith_normal_form(b.rows, b.cols, &b.entries));
    }
    let mut groups = Vec::with_capacity(levels);
    for i in 0..levels {
        let n = data.faces[i].len() as i64;
        let rank_in = snfs[i].rank() as i64;
        let (rank_out, torsion) = if i + 1 < levels {
            (snfs[i + 1].rank() as i64, snfs[i + 1].torsion())
        } else {
            (0, Vec::new())
        };
        let betti = n - rank_in - rank_out;
        if betti < 0 {
            return Err(Error::internal("negative betti rank from SNF"));
        }
        let torsion = torsion
            .into_iter()
            .map(|t| {
                u128::try_from(&t).map_err(|_| {
                    Error::SizeLimit("torsion coefficient exceeds u128".to_string())
                })
            })
            .collect::<Result<Vec<u128>>>()?;
        groups.push(HomologyGroup {
            rank: betti as u64,
            torsion,
        });
    }
    let summary = HomologySummary {
        is_void: false,
        groups,
    };

    // Euler characteristic from face counts must match the alternating sum
    // of betti ranks on every run.
    let chi_faces: i64 = data
        .faces
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, fs)| {
            let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
            sign * fs.len() as i64
        })
        .sum();
    let chi_betti: i64 = summary
        .groups
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let d = i as i64 - 1;
            let sign = if d % 2 == 0 { 1 } else { -1 };
            sign * g.rank as i64
        })
        .sum::<i64>()
        + 1; // reduced -> unreduced in dimension counting
    if chi_faces != chi_betti {
        return Err(Error::internal(format!(
            "Euler characteristic mismatch: faces give {}, betti ranks give {}",
            chi_faces, chi_betti
        )));
    }
    Ok(summary)
}

/// Exact reduced integer homology of `k`.
pub fn reduced_homology(k: &SimplicialComplex) -> Result<HomologySummary> {
    reduced_homology_with_limit(k, DEFAULT_MAX_FACES)
}

pub fn reduced_homology_with_limit(
    k: &SimplicialComplex,
    max_faces: usize,
) -> Result<HomologySummary> {
    let data = chain_complex_restricted(k.facets(), k.ground_set(), max_faces)?;
    homology_from_chain(&data)
}

/// Reduced homology of the full subcomplex on `i`, enumerated independently
/// from the facets of `k`.
pub fn reduced_homology_of_subcomplex(
    k: &SimplicialComplex,
    i: VertexSet,
) -> Result<HomologySummary> {
    let data = chain_complex_restricted(k.facets(), i, DEFAULT_MAX_FACES)?;
    homology_from_chain(&data)
}

/// One `(I, d)` disagreement between filling sizes and homology.
#[derive(Clone, Debug, Serialize)]
pub struct FillingRankMismatch {
    pub subset: VertexSet,
    pub dim: i32,
    pub filling_count: u64,
    pub homology_rank: u64,
    pub torsion: Vec<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FillingRankReport {
    pub ok: bool,
    pub mismatches: Vec<FillingRankMismatch>,
}

/// For every nonempty `I`: `H̃_d(K_I)` must be free of rank
/// `#{σ ∈ F(K_I) : |σ| = d + 2}` with no torsion. Any mismatch is a hard
/// failure of either the filling search or the decomposition.
pub fn verify_filling_ranks(
    k: &SimplicialComplex,
    fillings: &ChosenFillings,
) -> Result<FillingRankReport> {
    let subsets: Vec<VertexSet> = k
        .ground_set()
        .subsets()
        .filter(|s| !s.is_empty())
        .collect();
    for i in &subsets {
        if !fillings.by_subset.contains_key(i) {
            return Err(Error::invalid(format!("missing filling for subset {}", i)));
        }
    }
    let per_subset = par::map_slice(&subsets, |i| -> Result<Vec<FillingRankMismatch>> {
        let filling = &fillings.by_subset[i];
        let hom = reduced_homology_of_subcomplex(k, *i)?;
        let mut counts: BTreeMap<i32, u64> = BTreeMap::new();
        for sigma in filling {
            *counts.entry(sigma.len() as i32 - 2).or_insert(0) += 1;
        }
        let max_dim = counts
            .keys()
            .next_back()
            .copied()
            .unwrap_or(-1)
            .max(hom.groups.len() as i32 - 2);
        let mut mism = Vec::new();
        for d in -1..=max_dim {
            let expected = counts.get(&d).copied().unwrap_or(0);
            let rank = hom.rank(d);
            let torsion = hom.torsion(d).to_vec();
            if expected != rank || !torsion.is_empty() {
                mism.push(FillingRankMismatch {
                    subset: *i,
                    dim: d,
                    filling_count: expected,
                    homology_rank: rank,
                    torsion,
                });
            }
        }
        Ok(mism)
    });
    let mut mismatches = Vec::new();
    for m in per_subset {
        mismatches.extend(m?);
    }
    Ok(FillingRankReport {
        ok: mismatches.is_empty(),
        mismatches,
    })
}

/// Betti numbers of the moment-angle complex by aggregation over full
/// subcomplexes: `b_k = Σ_{∅≠I} rank H̃_{k-|I|-1}(K_I)`. The splitting is
/// integral, so free ranks add correctly even when some subcomplex carries
/// torsion (such a complex is simply not totally fillable).
pub fn zk_betti_from_subcomplexes(k: &SimplicialComplex) -> Result<BTreeMap<u32, u64>> {
    let subsets: Vec<VertexSet> = k
        .ground_set()
        .subsets()
        .filter(|s| !s.is_empty())
        .collect();
    let per_subset = par::map_slice(&subsets, |i| -> Result<Vec<(u32, u64)>> {
        let hom = reduced_homology_of_subcomplex(k, *i)?;
        let mut out = Vec::new();
        for (idx, g) in hom.groups.iter().enumerate() {
            if g.rank > 0 {
                let d = idx as i32 - 1;
                let deg = d + i.len() as i32 + 1;
                out.push((deg as u32, g.rank));
            }
        }
        Ok(out)
    });
    let mut betti: BTreeMap<u32, u64> = BTreeMap::new();
    for chunk in per_subset {
        for (deg, r) in chunk? {
            *betti.entry(deg).or_insert(0) += r;
        }
    }
    Ok(betti)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn vs(vals: &[u32]) -> VertexSet {
        VertexSet::from_vertices(vals.iter().map(|v| v - 1))
    }

    #[test]
    fn circle_has_h1() {
        let k = SimplicialComplex::boundary_simplex(VertexSet::full(3)).unwrap();
        let h = reduced_homology(&k).unwrap();
        assert_eq!(h.rank(0), 0);
        assert_eq!(h.rank(1), 1);
        assert!(h.torsion(1).is_empty());
    }

    #[test]
    fn sphere_boundaries() {
        for m in 2..=6u32 {
            let k = SimplicialComplex::boundary_simplex(VertexSet::full(m)).unwrap();
            let h = reduced_homology(&k).unwrap();
            for d in -1..=(m as i32) {
                let expect = if d == m as i32 - 2 { 1 } else { 0 };
                assert_eq!(h.rank(d), expect, "∂Δ^[{}] in dim {}", m, d);
                assert!(h.torsion(d).is_empty());
            }
        }
    }

    #[test]
    fn empty_complex_has_reduced_h_minus_one() {
        let e = SimplicialComplex::empty_complex(VertexSet::full(2));
        let h = reduced_homology(&e).unwrap();
        assert_eq!(h.rank(-1), 1);
        assert!(!h.is_acyclic());

        let v = SimplicialComplex::void(VertexSet::full(2));
        let h = reduced_homology(&v).unwrap();
        assert!(h.is_void);
        assert!(!h.is_acyclic());
    }

    #[test]
    fn projective_plane_torsion() {
        let k = generate::real_projective_plane();
        let h = reduced_homology(&k).unwrap();
        assert_eq!(h.rank(0), 0);
        assert_eq!(h.rank(1), 0);
        assert_eq!(h.torsion(1), &[2]);
        assert_eq!(h.rank(2), 0);
    }

    #[test]
    fn seven_vertex_torus() {
        // triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
        let mut facets = Vec::new();
        for i in 0..7u32 {
            facets.push(VertexSet::from_vertices([i, (i + 1) % 7, (i + 3) % 7]));
            facets.push(VertexSet::from_vertices([i, (i + 2) % 7, (i + 3) % 7]));
        }
        let k = SimplicialComplex::from_facets(facets, VertexSet::full(7)).unwrap();
        let h = reduced_homology(&k).unwrap();
        assert_eq!(h.rank(0), 0);
        assert_eq!(h.rank(1), 2);
        assert_eq!(h.rank(2), 1);
        assert!(!h.has_torsion());
    }

    #[test]
    fn two_points_zk_betti() {
        let k = SimplicialComplex::from_facets([vs(&[1]), vs(&[2])], VertexSet::full(2)).unwrap();
        let b = zk_betti_from_subcomplexes(&k).unwrap();
        assert_eq!(b, BTreeMap::from([(3, 1)]));
    }

    #[test]
    fn three_points_zk_betti() {
        let k = SimplicialComplex::from_facets(
            [vs(&[1]), vs(&[2]), vs(&[3])],
            VertexSet::full(3),
        )
        .unwrap();
        let b = zk_betti_from_subcomplexes(&k).unwrap();
        assert_eq!(b, BTreeMap::from([(3, 3), (4, 2)]));
    }

    #[test]
    fn full_simplex_zk_contractible() {
        let k = SimplicialComplex::full_simplex(VertexSet::full(4));
        let b = zk_betti_from_subcomplexes(&k).unwrap();
        assert!(b.is_empty());
    }
}
