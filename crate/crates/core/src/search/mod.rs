//! Exact search over implicit state graphs.
//!
//! Puzzle modules describe their state space through [`SearchProblem`] and
//! reuse the breadth-first drivers here. Neighbour order is part of each
//! puzzle's contract, so ties in BFS are broken the same way on every run.

mod backtrack;
mod bfs;
mod exact_cover;

pub use backtrack::backtrack_enumerate;
pub use bfs::{bfs_distances, bfs_layer_sets, bfs_shortest, Layer, SearchPath};
pub use exact_cover::{exact_cover_solutions, ExactCover};

use alloc::vec::Vec;

/// Implicit state graph.
pub trait SearchProblem {
    type State: Clone;
    type Move: Clone;

    fn initial(&self) -> Self::State;

    /// Successors of `state` in a deterministic order, appended to `out`.
    fn expand(&self, state: &Self::State, out: &mut Vec<(Self::Move, Self::State)>);

    /// Byte key; equal keys mean equivalent states.
    fn canonical_key(&self, state: &Self::State) -> Vec<u8>;
}

/// Resource bounds; exceeding either aborts the search with an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_states: usize,
    pub max_depth: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_states: 5_000_000,
            max_depth: 10_000,
        }
    }
}
