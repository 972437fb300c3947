//! Property suites: brute-force oracles over the full subset lattice for the
//! face operations and duality, plus randomized structural invariants.

use std::collections::BTreeSet;

use proptest::prelude::*;

use momac::complex::SimplicialComplex;
use momac::config::Budgets;
use momac::duality::{alexander_dual, deletion_link_duality_check, dual_facet_correspondence};
use momac::generate;
use momac::vertex_set::VertexSet;

/// Brute-force Alexander dual straight from the definition: all σ ⊆ V whose
/// complement is not a face.
fn brute_dual(l: &SimplicialComplex, v: VertexSet) -> BTreeSet<VertexSet> {
    let faces: BTreeSet<VertexSet> = v
        .subsets()
        .filter(|s| l.is_face(*s))
        .collect();
    v.subsets()
        .filter(|s| !faces.contains(&s.complement_in(v)))
        .collect()
}

fn face_family(k: &SimplicialComplex) -> BTreeSet<VertexSet> {
    k.ground_set()
        .subsets()
        .filter(|s| k.is_face(*s))
        .collect()
}

fn arb_complex(max_m: u32) -> impl Strategy<Value = SimplicialComplex> {
    (2..=max_m)
        .prop_flat_map(|m| {
            let facet = proptest::collection::vec(0..m, 1..=(m as usize).min(4));
            (Just(m), proptest::collection::vec(facet, 1..=6))
        })
        .prop_map(|(m, facets)| {
            let sets = facets
                .into_iter()
                .map(VertexSet::from_vertices)
                .collect::<Vec<_>>();
            SimplicialComplex::from_facets(sets, VertexSet::full(m)).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn downward_closure(k in arb_complex(8)) {
        for f in k.facets() {
            for s in f.subsets() {
                prop_assert!(k.is_face(s));
            }
        }
    }

    #[test]
    fn facets_form_an_antichain(k in arb_complex(8)) {
        for a in k.facets() {
            for b in k.facets() {
                prop_assert!(a == b || !a.is_subset_of(*b));
            }
        }
    }

    #[test]
    fn nested_full_subcomplexes(k in arb_complex(8)) {
        // (K_I)_J = K_J for J ⊆ I
        let ground = k.ground_set();
        for i in ground.subsets().filter(|s| !s.is_empty()) {
            for j in i.subsets().filter(|s| !s.is_empty()) {
                let ki = k.full_subcomplex(i).unwrap();
                let kij = ki.full_subcomplex(j).unwrap();
                let kj = k.full_subcomplex(j).unwrap();
                prop_assert_eq!(kij.facets(), kj.facets());
            }
        }
    }

    #[test]
    fn full_subcomplex_matches_brute_filter(k in arb_complex(8)) {
        let faces = face_family(&k);
        for i in k.ground_set().subsets().filter(|s| !s.is_empty()) {
            let sub = k.full_subcomplex(i).unwrap();
            let expect: BTreeSet<VertexSet> =
                faces.iter().copied().filter(|s| s.is_subset_of(i)).collect();
            prop_assert_eq!(face_family(&sub), expect);
        }
    }

    #[test]
    fn link_and_deletion_match_brute_filters(k in arb_complex(8)) {
        let faces = face_family(&k);
        for v in k.vertex_set().iter() {
            let lk = k.link(v).unwrap();
            let expect: BTreeSet<VertexSet> = faces
                .iter()
                .copied()
                .filter(|s| !s.contains(v) && faces.contains(&s.with(v)))
                .collect();
            prop_assert_eq!(face_family(&lk), expect);

            let dl = k.deletion(v).unwrap();
            let expect: BTreeSet<VertexSet> =
                faces.iter().copied().filter(|s| !s.contains(v)).collect();
            prop_assert_eq!(face_family(&dl), expect);
        }
    }

    #[test]
    fn face_xor_contains_minimal_non_face(k in arb_complex(8)) {
        let mnfs = k.minimal_non_faces();
        for s in k.ground_set().subsets() {
            let is_face = k.is_face(s);
            let contains_mnf = mnfs.iter().any(|m| m.is_subset_of(s));
            prop_assert!(is_face ^ contains_mnf, "σ = {} fails the partition", s);
        }
    }

    #[test]
    fn minimal_non_faces_are_minimal_non_faces(k in arb_complex(8)) {
        for m in k.minimal_non_faces() {
            prop_assert!(!k.is_face(m));
            for v in m.iter() {
                prop_assert!(k.is_face(m.without(v)));
            }
        }
    }

    #[test]
    fn dual_matches_brute_force(k in arb_complex(8)) {
        let v = k.ground_set();
        let dual = alexander_dual(&k, v).unwrap();
        prop_assert_eq!(face_family(&dual), brute_dual(&k, v));
    }

    #[test]
    fn double_dual_is_identity(k in arb_complex(8)) {
        let v = k.ground_set();
        let dd = alexander_dual(&alexander_dual(&k, v).unwrap(), v).unwrap();
        prop_assert_eq!(dd.facets(), k.facets());
    }

    #[test]
    fn facet_correspondence_verified(k in arb_complex(8)) {
        let v = k.ground_set();
        let pairs = dual_facet_correspondence(&k, v).unwrap();
        prop_assert_eq!(pairs.len(), k.facets().len());
    }

    #[test]
    fn deletion_link_duality(k in arb_complex(8)) {
        let v = k.ground_set();
        for vert in v.iter() {
            prop_assert!(deletion_link_duality_check(&k, v, vert).unwrap());
        }
    }

    #[test]
    fn relabeling_preserves_summand_shape(k in arb_complex(6), seed in 0u64..1000) {
        use momac::filling::{is_totally_fillable, TotallyFillable};

        let budgets = Budgets::default();
        let m = 6;
        let perm = generate::random_permutation(m, seed);
        let relabeled = k.relabel(&perm).unwrap();

        let shape = |c: &SimplicialComplex| -> Option<Vec<(u32, u32)>> {
            match is_totally_fillable(c, &budgets).ok()? {
                TotallyFillable::TotallyFillable { fillings, .. } => {
                    let mut pairs: Vec<(u32, u32)> = fillings
                        .by_subset
                        .iter()
                        .flat_map(|(i, f)| f.iter().map(|s| (i.len(), s.len())))
                        .collect();
                    pairs.sort_unstable();
                    Some(pairs)
                }
                _ => None,
            }
        };
        // relabeling must not change fillability or the summand shape
        prop_assert_eq!(shape(&k), shape(&relabeled));
    }
}

#[test]
fn duality_checks_on_every_complex_with_four_vertices() {
    for k in generate::all_complexes(4).unwrap() {
        let v = VertexSet::full(4);
        let rebased = k.with_ground_set(v).unwrap();
        let dual = alexander_dual(&rebased, v).unwrap();
        assert_eq!(face_family(&dual), brute_dual(&rebased, v));
        let dd = alexander_dual(&dual, v).unwrap();
        assert_eq!(dd.facets(), rebased.facets());
        dual_facet_correspondence(&rebased, v).unwrap();
        for vert in v.iter() {
            assert!(deletion_link_duality_check(&rebased, v, vert).unwrap());
        }
    }
}

#[test]
fn shellable_implies_deletable_and_totally_deletable() {
    use momac::deletable::{is_deletable, is_totally_deletable};
    use momac::shelling::{is_shellable, Shellability};

    let budgets = Budgets::default();
    let mut shellable_seen = 0;
    for seed in 0..80u64 {
        let m = 4 + (seed % 4) as u32; // 4..=7
        let k = generate::random_complex(m, 0.4 + 0.4 * ((seed % 5) as f64) / 4.0, seed).unwrap();
        if k.is_void() {
            continue;
        }
        if let Shellability::Shellable(cert) = is_shellable(&k, &budgets) {
            momac::shelling::verify_shelling(&k, &cert.order).unwrap();
            shellable_seen += 1;
            assert_eq!(is_deletable(&k, &budgets).verdict(), "yes", "K = {}", k);
            let report = is_totally_deletable(&k, &budgets);
            assert_eq!(report.overall, "yes", "K = {}, witness {:?}", k, report.witness);
        }
    }
    assert!(shellable_seen >= 10, "suite generated too few shellable complexes");
}

#[test]
fn collapsible_implies_acyclic_dual() {
    use momac::collapse::{is_collapsible, Collapsibility};
    use momac::homology::reduced_homology;

    let budgets = Budgets::default();
    let mut seen = 0;
    for seed in 1000..1080u64 {
        let m = 4 + (seed % 5) as u32; // 4..=8
        let k = generate::random_complex(m, 0.5, seed).unwrap();
        if k.is_void() || k.is_empty_complex() {
            continue;
        }
        if let Collapsibility::Collapsible(cert) = is_collapsible(&k, &budgets).unwrap() {
            momac::collapse::verify_collapse(&k, &cert).unwrap();
            seen += 1;
            let dual = alexander_dual(&k, k.ground_set()).unwrap();
            if dual.is_void() {
                continue; // the dual of a full simplex carries no homology at all
            }
            let hom = reduced_homology(&dual).unwrap();
            assert!(
                hom.is_acyclic(),
                "collapsible K = {} has dual with homology {:?}",
                k,
                hom.nonzero()
            );
        }
    }
    assert!(seen >= 10, "suite generated too few collapsible complexes");
}

#[test]
fn ordering_lemma_agrees_with_direct_dual_shelling_search() {
    use momac::directed_mf::{
        derive_mf_ordering, dual_shellable_via_ordering, is_directed_mf, lemma_shelling_predicate,
        DirectedMf, ViaOrdering,
    };
    use momac::shelling::{is_shellable, Shellability};

    let budgets = Budgets::default();
    let mut ordered_seen = 0;
    for seed in 3000..3120u64 {
        let m = 3 + (seed % 5) as u32; // 3..=7
        let k = generate::random_complex(m, 0.35 + 0.1 * ((seed % 4) as f64), seed).unwrap();
        let dual = alexander_dual(&k, k.ground_set()).unwrap();

        match dual_shellable_via_ordering(&k, &budgets).unwrap() {
            ViaOrdering::Ordered { .. } => {
                // the sufficient condition must agree with the direct search
                ordered_seen += 1;
                match is_shellable(&dual, &budgets) {
                    Shellability::Shellable(_) | Shellability::Unknown(_) => {}
                    Shellability::NotShellable => {
                        panic!("ordering lemma accepted K = {} but the dual is not shellable", k)
                    }
                }
            }
            ViaOrdering::Inconclusive(_) => {} // proves nothing either way
        }

        // a directed filtration always induces a predicate-satisfying ordering
        if let DirectedMf::DirectedMf(cert) = is_directed_mf(&k, &budgets) {
            let ordering = derive_mf_ordering(&k, &cert).unwrap();
            assert!(lemma_shelling_predicate(&ordering), "K = {}", k);
        }
    }
    assert!(ordered_seen >= 20, "suite exercised the ordering lemma too rarely");
}

#[test]
fn filling_profile_matches_homology_on_random_fillable_complexes() {
    use momac::filling::{is_totally_fillable, TotallyFillable};
    use momac::homology::verify_filling_ranks;

    let budgets = Budgets::default();
    let mut fillable_seen = 0;
    for seed in 2000..2040u64 {
        let m = 4 + (seed % 3) as u32; // 4..=6
        let k = generate::random_complex(m, 0.5, seed).unwrap();
        if k.is_void() {
            continue;
        }
        if let TotallyFillable::TotallyFillable { fillings, .. } =
            is_totally_fillable(&k, &budgets).unwrap()
        {
            fillable_seen += 1;
            let report = verify_filling_ranks(&k, &fillings).unwrap();
            assert!(report.ok, "K = {}: {:?}", k, report.mismatches);
        }
    }
    assert!(fillable_seen >= 5, "suite generated too few fillable complexes");
}
