//! Wedge decompositions and iterated bracket words.
//!
//! For a totally fillable complex the moment-angle complex splits as a wedge
//! with one sphere `S^{|σ|+|I|-1}` per pair `(I, σ ∈ F(K_I))`, and the
//! graded polyhedral-product version replaces each sphere by
//! `Σ^{|σ|-1} X̂^I` with `X_i = S^{n_i}`. The map to the associated
//! product-of-projective-spaces target restricts on each summand to a
//! left-nested iterated Whitehead product `[...[w_σ, a_{i1}], ..., a_{ik}]`
//! whose tail is a contraction ordering of `I - σ`.
//!
//! Contraction orderings come from trees attached to `∂Δ^σ`: take the
//! breadth-first spanning tree of the filled subcomplex from the least
//! vertex of `σ` (neighbors in increasing index), delete the tree edges
//! inside `σ`, and root each remaining component at its unique `σ`-vertex.
//! The vertices of `σ` are pairwise adjacent in the filled complex, so they
//! all hang directly off the starting root in the breadth-first tree and the
//! deletion leaves exactly one `σ`-vertex per component. Local orders are
//! the reverse of largest-leaf removal, joined by increasing root. Any
//! ordering satisfying the truncation-connectivity condition is valid; this
//! one is canonical so output is reproducible byte for byte.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::config::Budgets;
use crate::error::{Error, Result};
use crate::filling::{filled_complex, is_totally_fillable, ChosenFillings, TotallyFillable};
use crate::hierarchy::{hierarchy_report, HierarchyReport};
use crate::homology::{verify_filling_ranks, zk_betti_from_subcomplexes, FillingRankReport};
use crate::par;
use crate::vertex_set::VertexSet;

/// One wedge summand of the moment-angle complex: the sphere
/// `S^{|σ|+|I|-1}` attached to `σ ∈ F(K_I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WedgeSummand {
    pub subset: VertexSet,
    pub sigma: VertexSet,
    pub sphere_dim: u32,
}

/// Graded version: `Σ^{|σ|-1} X̂^I` has degree `(|σ|-1) + Σ_{i∈I} n_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GradedSummand {
    pub subset: VertexSet,
    pub sigma: VertexSet,
    pub degree: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionZ {
    pub summands: Vec<WedgeSummand>,
    /// `betti[k]` counts summands of sphere dimension `k`.
    pub betti: BTreeMap<u32, u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionW {
    pub summands: Vec<GradedSummand>,
    pub degrees: BTreeMap<u32, u64>,
}

/// Enumerate the wedge summands from chosen fillings, sorted by
/// `(sphere_dim, I, σ)`.
pub fn decompose_z(k: &SimplicialComplex, fillings: &ChosenFillings) -> Result<DecompositionZ> {
    let mut summands = Vec::new();
    for i in k.ground_set().subsets().filter(|s| !s.is_empty()) {
        let filling = fillings
            .by_subset
            .get(&i)
            .ok_or_else(|| Error::invalid(format!("missing filling for subset {}", i)))?;
        for sigma in filling {
            if !sigma.is_subset_of(i) {
                return Err(Error::invalid(format!("{} is not inside {}", sigma, i)));
            }
            summands.push(WedgeSummand {
                subset: i,
                sigma: *sigma,
                sphere_dim: sigma.len() + i.len() - 1,
            });
        }
    }
    summands.sort_by(|a, b| {
        a.sphere_dim
            .cmp(&b.sphere_dim)
            .then(a.subset.cmp(&b.subset))
            .then(a.sigma.cmp(&b.sigma))
    });
    let mut betti = BTreeMap::new();
    for s in &summands {
        *betti.entry(s.sphere_dim).or_insert(0u64) += 1;
    }
    Ok(DecompositionZ { summands, betti })
}

/// Graded decomposition with sphere-shaped inputs `X_i = S^{n_i}`. Each
/// `n_i` must be at least 1 so that every `X_i` is a suspension.
pub fn decompose_w(
    k: &SimplicialComplex,
    fillings: &ChosenFillings,
    dims: &[u32],
) -> Result<DecompositionW> {
    for v in k.ground_set().iter() {
        match dims.get(v as usize) {
            None => {
                return Err(Error::invalid(format!(
                    "no sphere dimension given for vertex {}",
                    v + 1
                )))
            }
            Some(0) => {
                return Err(Error::invalid(format!(
                    "X_{} must be a suspension: its sphere dimension must be >= 1",
                    v + 1
                )))
            }
            Some(_) => {}
        }
    }
    let z = decompose_z(k, fillings)?;
    let mut summands = Vec::with_capacity(z.summands.len());
    for s in z.summands {
        let degree: u32 =
            (s.sigma.len() - 1) + s.subset.iter().map(|v| dims[v as usize]).sum::<u32>();
        summands.push(GradedSummand {
            subset: s.subset,
            sigma: s.sigma,
            degree,
        });
    }
    summands.sort_by(|a, b| {
        a.degree
            .cmp(&b.degree)
            .then(a.subset.cmp(&b.subset))
            .then(a.sigma.cmp(&b.sigma))
    });
    let mut degrees = BTreeMap::new();
    for s in &summands {
        *degrees.entry(s.degree).or_insert(0u64) += 1;
    }
    Ok(DecompositionW { summands, degrees })
}

/// A tree attached to `∂Δ^σ` by its root.
#[derive(Clone, Debug, Serialize)]
pub struct RootedTree {
    pub root: u32,
    /// Includes the root.
    pub vertices: VertexSet,
    pub edges: Vec<(u32, u32)>,
}

/// Deterministic spanning-tree attachment of the filled subcomplex along
/// `σ`: breadth-first from the least vertex of `σ`, intra-`σ` edges removed,
/// one tree per remaining component, rooted at its unique `σ`-vertex.
pub fn spanning_tree_attachment(
    kbar_i: &SimplicialComplex,
    sigma: VertexSet,
) -> Result<Vec<RootedTree>> {
    if sigma.is_empty() || !sigma.is_subset_of(kbar_i.vertex_set()) {
        return Err(Error::invalid(format!(
            "{} is not a vertex set inside the filled complex",
            sigma
        )));
    }
    let vertices: Vec<u32> = kbar_i.vertex_set().iter().collect();
    let mut adjacency: HashMap<u32, Vec<u32>> = HashMap::new();
    for e in kbar_i.faces(1) {
        let vs: Vec<u32> = e.vertices.iter().collect();
        adjacency.entry(vs[0]).or_default().push(vs[1]);
        adjacency.entry(vs[1]).or_default().push(vs[0]);
    }
    for nbrs in adjacency.values_mut() {
        nbrs.sort_unstable();
    }

    let start = sigma.min_vertex().expect("sigma is nonempty");
    let mut visited: HashSet<u32> = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    let mut tree_edges: Vec<(u32, u32)> = Vec::new();
    while let Some(v) = queue.pop_front() {
        if let Some(nbrs) = adjacency.get(&v) {
            for &w in nbrs {
                if visited.insert(w) {
                    tree_edges.push((v, w));
                    queue.push_back(w);
                }
            }
        }
    }
    if visited.len() != vertices.len() {
        return Err(Error::internal(
            "filled complex is not connected; a contractible complex must be",
        ));
    }

    // drop tree edges inside σ (for |σ| = 2 this includes the σ-edge itself)
    let kept: Vec<(u32, u32)> = tree_edges
        .iter()
        .copied()
        .filter(|(a, b)| !(sigma.contains(*a) && sigma.contains(*b)))
        .collect();

    // connected components of the remaining forest
    let mut component: HashMap<u32, u32> = vertices.iter().map(|&v| (v, v)).collect();
    fn find(component: &mut HashMap<u32, u32>, v: u32) -> u32 {
        let p = component[&v];
        if p == v {
            v
        } else {
            let r = find(component, p);
            component.insert(v, r);
            r
        }
    }
    for &(a, b) in &kept {
        let ra = find(&mut component, a);
        let rb = find(&mut component, b);
        if ra != rb {
            component.insert(ra, rb);
        }
    }

    let mut groups: BTreeMap<u32, (VertexSet, Vec<(u32, u32)>)> = BTreeMap::new();
    for &v in &vertices {
        let r = find(&mut component, v);
        let entry = groups.entry(r).or_insert((VertexSet::EMPTY, Vec::new()));
        entry.0 = entry.0.union(VertexSet::singleton(v));
    }
    for &(a, b) in &kept {
        let r = find(&mut component, a);
        groups.get_mut(&r).expect("component exists").1.push((a, b));
    }

    let mut trees = Vec::new();
    for (_, (vs, edges)) in groups {
        let roots = vs.intersection(sigma);
        if roots.len() != 1 {
            return Err(Error::internal(format!(
                "forest component {} holds {} σ-vertices instead of exactly one",
                vs,
                roots.len()
            )));
        }
        trees.push(RootedTree {
            root: roots.min_vertex().unwrap(),
            vertices: vs,
            edges,
        });
    }
    trees.sort_by_key(|t| t.root);
    Ok(trees)
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalOrdering {
    pub root: u32,
    pub order: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContractionOrdering {
    pub locals: Vec<LocalOrdering>,
    /// Concatenation of the local orders, trees in increasing root index.
    pub joined: Vec<u32>,
}

/// Local contraction orderings by reverse largest-leaf removal, joined in
/// increasing root order. The truncation-connectivity condition is
/// replay-verified before returning.
pub fn contraction_ordering(trees: &[RootedTree]) -> Result<ContractionOrdering> {
    let mut locals = Vec::with_capacity(trees.len());
    for tree in trees {
        let mut degree: BTreeMap<u32, usize> = tree.vertices.iter().map(|v| (v, 0)).collect();
        let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &(a, b) in &tree.edges {
            *degree.get_mut(&a).unwrap() += 1;
            *degree.get_mut(&b).unwrap() += 1;
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut alive: HashSet<u32> = tree.vertices.iter().collect();
        let mut removal: Vec<u32> = Vec::new();
        while alive.len() > 1 {
            let leaf = alive
                .iter()
                .copied()
                .filter(|&v| v != tree.root && degree[&v] <= 1)
                .max()
                .ok_or_else(|| Error::internal("rooted tree without a removable leaf"))?;
            alive.remove(&leaf);
            removal.push(leaf);
            if let Some(nbrs) = adj.get(&leaf) {
                for n in nbrs {
                    if alive.contains(n) {
                        *degree.get_mut(n).unwrap() -= 1;
                    }
                }
            }
        }
        removal.reverse();
        locals.push(LocalOrdering {
            root: tree.root,
            order: removal,
        });
    }
    let joined: Vec<u32> = locals.iter().flat_map(|l| l.order.iter().copied()).collect();
    for (local, tree) in locals.iter().zip(trees) {
        verify_contraction_ordering(tree, &local.order)?;
    }
    Ok(ContractionOrdering { locals, joined })
}

/// Replay the truncation-connectivity condition: for every `j`, the tree
/// restricted to `V - {v_j, ..., v_n}` must be connected.
pub fn verify_contraction_ordering(tree: &RootedTree, order: &[u32]) -> Result<()> {
    let expected: VertexSet = VertexSet::from_vertices(order.iter().copied())
        .union(VertexSet::singleton(tree.root));
    if expected != tree.vertices || order.len() as u32 != tree.vertices.len() - 1 {
        return Err(Error::internal(
            "local ordering is not a permutation of the non-root vertices",
        ));
    }
    for j in 0..=order.len() {
        let remaining: HashSet<u32> = std::iter::once(tree.root)
            .chain(order[..j].iter().copied())
            .collect();
        // breadth-first over the induced subgraph
        let mut seen = HashSet::from([tree.root]);
        let mut queue = VecDeque::from([tree.root]);
        while let Some(v) = queue.pop_front() {
            for &(a, b) in &tree.edges {
                let next = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if remaining.contains(&next) && seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        if seen.len() != remaining.len() {
            return Err(Error::internal(format!(
                "truncation at position {} disconnects the tree",
                j
            )));
        }
    }
    Ok(())
}

/// A left-nested iterated Whitehead bracket: the head is the higher product
/// `w_σ` (a plain generator `a_i` when `σ` is a ghost singleton) and the
/// tail is a contraction ordering of `I - σ`.
#[derive(Clone, Debug, Serialize)]
pub struct BracketWord {
    pub sigma: VertexSet,
    pub tail: Vec<u32>,
}

impl BracketWord {
    fn head_symbolic(&self) -> String {
        if self.sigma.len() == 1 {
            format!("a_{}", self.sigma.min_vertex().unwrap() + 1)
        } else {
            let inner: Vec<String> = self.sigma.iter().map(|v| (v + 1).to_string()).collect();
            format!("w_{{{}}}", inner.join(","))
        }
    }

    fn head_expanded(&self) -> String {
        match self.sigma.len() {
            1 => format!("a_{}", self.sigma.min_vertex().unwrap() + 1),
            2 => {
                let vs: Vec<u32> = self.sigma.iter().collect();
                format!("[a_{},a_{}]", vs[0] + 1, vs[1] + 1)
            }
            _ => self.head_symbolic(),
        }
    }

    fn nest(&self, head: String) -> String {
        self.tail
            .iter()
            .fold(head, |acc, v| format!("[{},a_{}]", acc, v + 1))
    }

    /// Rendering with the higher product left as `w_σ`.
    pub fn symbolic(&self) -> String {
        self.nest(self.head_symbolic())
    }

    /// Rendering with `w_σ` expanded to the ordinary Whitehead product
    /// `[a_i, a_j]` when `|σ| = 2`.
    pub fn expanded(&self) -> String {
        self.nest(self.head_expanded())
    }
}

impl std::fmt::Display for BracketWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.expanded())
    }
}

/// Bracket word for one summand, computed from the filled subcomplex on the
/// summand's index set.
pub fn bracket_word(
    k: &SimplicialComplex,
    fillings: &ChosenFillings,
    summand: &WedgeSummand,
) -> Result<BracketWord> {
    let i = summand.subset;
    let filling = fillings
        .by_subset
        .get(&i)
        .ok_or_else(|| Error::invalid(format!("missing filling for subset {}", i)))?;
    if !filling.contains(&summand.sigma) {
        return Err(Error::invalid(format!(
            "{} is not in the chosen filling of {}",
            summand.sigma, i
        )));
    }
    let sub = k.full_subcomplex(i)?;
    let filled = filled_complex(&sub, filling)?;
    let trees = spanning_tree_attachment(&filled, summand.sigma)?;
    let ordering = contraction_ordering(&trees)?;
    let mut tail = ordering.joined;
    // ghost vertices of I that the filling never touched have no tree to
    // live in; their circle factors are genuine products and their top cells
    // attach by trailing brackets, appended in ascending order
    for v in i.difference(summand.sigma).iter() {
        if !filled.vertex_set().contains(v) {
            tail.push(v);
        }
    }
    Ok(BracketWord {
        sigma: summand.sigma,
        tail,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SummandReport {
    pub subset: VertexSet,
    pub sigma: VertexSet,
    pub sphere_dim: u32,
    pub bracket_symbolic: String,
    pub bracket_expanded: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleAgreement {
    pub filling_ranks_ok: bool,
    pub betti_match: bool,
    pub zk_betti: BTreeMap<u32, u64>,
}

/// End-to-end report: hierarchy verdicts, fillings, decomposition, bracket
/// words, and the homology-oracle cross-checks.
#[derive(Clone, Debug, Serialize)]
pub struct FullReport {
    pub hierarchy: HierarchyReport,
    pub totally_fillable: String,
    pub fillings: Option<ChosenFillings>,
    pub summands: Vec<SummandReport>,
    pub betti: BTreeMap<u32, u64>,
    pub filling_ranks: Option<FillingRankReport>,
    pub verified: bool,
}

pub fn full_report(k: &SimplicialComplex, budgets: &Budgets) -> Result<FullReport> {
    let hierarchy = hierarchy_report(k, budgets)?;
    let tf = is_totally_fillable(k, budgets)?;
    let verdict = tf.verdict().to_string();
    let TotallyFillable::TotallyFillable { fillings, .. } = tf else {
        return Ok(FullReport {
            hierarchy,
            totally_fillable: verdict,
            fillings: None,
            summands: Vec::new(),
            betti: BTreeMap::new(),
            filling_ranks: None,
            verified: false,
        });
    };
    let z = decompose_z(k, &fillings)?;
    let summand_reports = par::map_slice(&z.summands, |s| -> Result<SummandReport> {
        let word = bracket_word(k, &fillings, s)?;
        Ok(SummandReport {
            subset: s.subset,
            sigma: s.sigma,
            sphere_dim: s.sphere_dim,
            bracket_symbolic: word.symbolic(),
            bracket_expanded: word.expanded(),
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let ranks = verify_filling_ranks(k, &fillings)?;
    let zk = zk_betti_from_subcomplexes(k)?;
    let betti_match = zk == z.betti;
    let verified = ranks.ok && betti_match;
    Ok(FullReport {
        hierarchy,
        totally_fillable: verdict,
        fillings: Some(fillings),
        summands: summand_reports,
        betti: z.betti,
        filling_ranks: Some(ranks),
        verified,
    })
}
