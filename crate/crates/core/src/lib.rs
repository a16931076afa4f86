//! Full subgraphs of dense graphs.
//!
//! A graph of density `p` has a *full* induced subgraph on `m` vertices when
//! every vertex of it has at least `p (m - 1)` neighbours inside. This crate
//! finds such subgraphs exactly (small graphs) and constructively (large
//! graphs), relates them to discrepancy and jumbledness, builds the extremal
//! and adversarial families, and runs majority bootstrap percolation, whose
//! surviving sets are the relatively half-full subgraphs.
//!
//! All thresholds are compared in exact integer or rational arithmetic.

pub mod catalog;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod finders;
pub mod graph;
pub mod metrics;
pub mod percolation;
pub mod rational;
pub mod rng;
pub mod vertex_set;

#[cfg(test)]
mod testing;

pub use constructions::{
    gen_clique_plus_isolated, gen_glued, gen_gnp, gen_greedy_adversary, gen_multipartite_planted, GenSpec, Planted,
};
pub use error::{Error, Result};
pub use exact::{DEFAULT_EXACT_CAP, MAX_EXACT_N};
pub use finders::{
    full_two_thirds, g_value, greedy_full, greedy_full_from, heuristic_largest_full, is_full, is_relatively_full,
    one_over_r_full, oracle_largest_full, qfull_partition, small_p_full, FullCheck, FullMode, FullSubgraphResult,
    GMethod, GValue, QFullOutcome, QFullVariant, RelativeFullResult, TieBreak,
};
pub use graph::Graph;
pub use metrics::{
    delta_p, disc_exact, disc_local_search, jumbledness_exact, verify_disc_jumbledness_bound, DiscJumbledReport,
    DiscWitness, JumbledReport, Sign,
};
pub use percolation::{bootstrap_percolate, theta_estimate, theta_exact, PercolationState, ThetaEstimate};
pub use rational::Rational;
pub use vertex_set::VertexSet;
