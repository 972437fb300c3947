//! Edge-path group presentations and bounded Tietze simplification.
//!
//! Used as the second tier of the contractibility certificate: a connected
//! complex with vanishing reduced homology whose fundamental-group
//! presentation simplifies to the trivial one is contractible. The
//! simplifier only ever applies Tietze transformations, so a `Trivial`
//! answer is sound; anything it cannot finish within the move budget is
//! `Inconclusive`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::complex::SimplicialComplex;
use crate::vertex_set::VertexSet;

#[derive(Debug, PartialEq, Eq)]
pub enum Pi1 {
    Trivial { moves: u64 },
    Inconclusive,
}

/// Decide triviality of the edge-path group of the 2-skeleton, from a
/// spanning tree of the 1-skeleton. `k` should be connected with at least
/// one vertex.
pub fn edge_path_group_is_trivial(k: &SimplicialComplex, move_budget: u64) -> Pi1 {
    let vertices: Vec<u32> = k.vertex_set().iter().collect();
    if vertices.is_empty() {
        return Pi1::Inconclusive;
    }
    let edges: Vec<VertexSet> = k.faces(1).into_iter().map(|f| f.vertices).collect();
    let mut adjacency: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for e in &edges {
        let vs: Vec<u32> = e.iter().collect();
        adjacency.entry(vs[0]).or_default().push(vs[1]);
        adjacency.entry(vs[1]).or_default().push(vs[0]);
    }
    for nbrs in adjacency.values_mut() {
        nbrs.sort_unstable();
    }

    // breadth-first spanning tree from the least vertex
    let root = vertices[0];
    let mut in_tree: HashMap<VertexSet, bool> = edges.iter().map(|e| (*e, false)).collect();
    let mut seen: Vec<u32> = vec![root];
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        if let Some(nbrs) = adjacency.get(&v) {
            for &w in nbrs {
                if !seen.contains(&w) {
                    seen.push(w);
                    queue.push_back(w);
                    in_tree.insert(VertexSet::from_vertices([v, w]), true);
                }
            }
        }
    }
    if seen.len() != vertices.len() {
        return Pi1::Inconclusive; // disconnected
    }

    // generators: non-tree edges
    let mut gen_of: HashMap<VertexSet, usize> = HashMap::new();
    for e in &edges {
        if !in_tree[e] {
            let id = gen_of.len();
            gen_of.insert(*e, id);
        }
    }
    let gen_count = gen_of.len();
    if gen_count == 0 {
        return Pi1::Trivial { moves: 0 };
    }

    // one relator per triangle: e(ab) e(bc) e(ac)^{-1}, tree edges dropped
    let letter = |a: u32, b: u32, sign: i32| -> Option<i32> {
        gen_of
            .get(&VertexSet::from_vertices([a, b]))
            .map(|&g| sign * (g as i32 + 1))
    };
    let mut relators: Vec<Vec<i32>> = Vec::new();
    for t in k.faces(2) {
        let v: Vec<u32> = t.vertices.iter().collect();
        let word: Vec<i32> = [
            letter(v[0], v[1], 1),
            letter(v[1], v[2], 1),
            letter(v[0], v[2], -1),
        ]
        .into_iter()
        .flatten()
        .collect();
        relators.push(word);
    }

    simplify(gen_count, relators, move_budget)
}

fn cyclic_free_reduce(word: &mut Vec<i32>) {
    loop {
        let mut reduced = Vec::with_capacity(word.len());
        for &l in word.iter() {
            if reduced.last() == Some(&-l) {
                reduced.pop();
            } else {
                reduced.push(l);
            }
        }
        let mut changed = reduced.len() != word.len();
        while reduced.len() >= 2 && reduced.first() == reduced.last().map(|l| -l).as_ref() {
            reduced.pop();
            reduced.remove(0);
            changed = true;
        }
        *word = reduced;
        if !changed {
            return;
        }
    }
}

fn simplify(gen_count: usize, mut relators: Vec<Vec<i32>>, move_budget: u64) -> Pi1 {
    let mut alive = vec![true; gen_count];
    let mut moves = 0u64;

    loop {
        if moves > move_budget {
            return Pi1::Inconclusive;
        }
        for w in relators.iter_mut() {
            cyclic_free_reduce(w);
        }
        relators.retain(|w| !w.is_empty());

        // kill generators forced trivial by a length-one relator
        if let Some(pos) = relators.iter().position(|w| w.len() == 1) {
            let g = relators[pos][0].unsigned_abs() as usize - 1;
            alive[g] = false;
            for w in relators.iter_mut() {
                w.retain(|l| l.unsigned_abs() as usize - 1 != g);
            }
            relators.remove(pos);
            moves += 1;
            continue;
        }

        // length-two relator with distinct generators: substitute one away
        if let Some(pos) = relators
            .iter()
            .position(|w| w.len() == 2 && w[0].unsigned_abs() != w[1].unsigned_abs())
        {
            let (p, q) = (relators[pos][0], relators[pos][1]);
            let a = p.unsigned_abs() as usize - 1;
            let b = q.unsigned_abs() as usize - 1;
            // g_b = g_a^{-sign(p) sign(q)}
            let s = -p.signum() * q.signum();
            for w in relators.iter_mut() {
                for l in w.iter_mut() {
                    if l.unsigned_abs() as usize - 1 == b {
                        *l = l.signum() * s * (a as i32 + 1);
                    }
                }
            }
            alive[b] = false;
            relators.remove(pos);
            moves += 1;
            continue;
        }

        // a generator occurring exactly once in the whole presentation can be
        // solved for and removed together with its relator; smallest such
        // generator first, for deterministic runs
        let mut occurrences: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for (ri, w) in relators.iter().enumerate() {
            for (li, l) in w.iter().enumerate() {
                let g = l.unsigned_abs() as usize - 1;
                *counts.entry(g).or_insert(0) += 1;
                occurrences.insert(g, (ri, li));
            }
        }
        if let Some((&g, _)) = counts.iter().find(|(_, &c)| c == 1) {
            let (ri, _) = occurrences[&g];
            relators.remove(ri);
            alive[g] = false;
            moves += 1;
            continue;
        }

        break;
    }

    // a surviving generator is at best a free factor, at worst genuinely
    // relational; either way the presentation is not visibly trivial
    if alive.iter().any(|&a| a) {
        Pi1::Inconclusive
    } else {
        Pi1::Trivial { moves }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_skeleton_two_is_simply_connected() {
        // 2-skeleton of Δ^4: simply connected with nontrivial 1-cycles
        let k = crate::generate::skeleton_of_simplex(4, 2).unwrap();
        assert!(matches!(
            edge_path_group_is_trivial(&k, 10_000),
            Pi1::Trivial { .. }
        ));
    }

    #[test]
    fn circle_group_is_not_trivial() {
        let k = SimplicialComplex::boundary_simplex(VertexSet::full(3)).unwrap();
        assert_eq!(edge_path_group_is_trivial(&k, 10_000), Pi1::Inconclusive);
    }

    #[test]
    fn tree_is_trivial() {
        let k = SimplicialComplex::from_facets(
            [
                VertexSet::from_vertices([0, 1]),
                VertexSet::from_vertices([1, 2]),
            ],
            VertexSet::full(3),
        )
        .unwrap();
        assert!(matches!(
            edge_path_group_is_trivial(&k, 10_000),
            Pi1::Trivial { .. }
        ));
    }

    #[test]
    fn rp2_is_inconclusive() {
        // Z/2 presentation: the simplifier must not call it trivial
        let k = crate::generate::real_projective_plane();
        assert_eq!(edge_path_group_is_trivial(&k, 10_000), Pi1::Inconclusive);
    }
}
