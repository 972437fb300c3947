use serde::{Deserialize, Serialize};

/// Search budgets. Exceeding a budget yields an `Unknown` verdict, never a
/// wrong one.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Budgets {
    /// Node limit for one backtracking collapse search.
    pub collapse_nodes: u64,
    /// Move limit for the Tietze simplification of a fundamental-group
    /// presentation.
    pub tietze_moves: u64,
    /// Candidate limit for one filling search.
    pub fill_candidates: u64,
    /// Candidate limit for the facet-subset enumeration of one deletability
    /// search.
    pub deletion_candidates: u64,
    /// Node limit for ordering searches (shellings, directed filtrations).
    pub order_nodes: u64,
    /// Cap on materialized face sets; larger complexes get `Unknown` from
    /// the search-based checks.
    pub max_faces: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            collapse_nodes: 1_000_000,
            tietze_moves: 10_000,
            fill_candidates: 100_000,
            deletion_candidates: 20_000,
            order_nodes: 1_000_000,
            max_faces: 1 << 20,
        }
    }
}
