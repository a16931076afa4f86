//! Full, co-full and relatively `q`-full subgraph finders.
//!
//! An `m`-vertex induced subgraph is `p`-full when every vertex has at least
//! `p (m - 1)` neighbours inside it, `p`-co-full when every vertex has at
//! most that many, and relatively `q`-full when every vertex keeps at least
//! a `q` fraction of its degree. All tests clear denominators.

mod check;
mod g_value;
mod greedy;
mod oracle;
mod qfull;
mod small_p;
mod two_thirds;

pub use check::{is_full, is_relatively_full, FullCheck, FullMode};
pub use g_value::{g_value, heuristic_largest_full, GMethod, GValue};
pub use greedy::{greedy_bound, greedy_full, greedy_full_from, TieBreak};
pub use oracle::{oracle_largest_full, oracle_relatively_full_within};
pub use qfull::{one_over_r_full, qfull_partition, QFullOutcome, QFullVariant, RelativeFullResult};
pub use small_p::{small_p_full, small_p_window};
pub use two_thirds::{full_two_thirds, two_thirds_bound, two_thirds_precondition, two_thirds_scale};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::vertex_set::VertexSet;

/// A certified `p`-full (or co-full) vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullSubgraphResult {
    pub vertices: VertexSet,
    pub size: usize,
    pub p_used: Rational,
    /// Minimum degree of the induced subgraph (maximum degree for co-full results); 0 when empty.
    pub min_degree: usize,
    /// The applicable lower bound on `size` for this input, rounded up to an integer.
    pub guarantee: Option<Rational>,
    /// Deleted vertices in order, for the peeling algorithms.
    pub trace: Vec<usize>,
}

impl FullSubgraphResult {
    /// Certifies `vertices` with [`is_full`] and packages it.
    pub(crate) fn certified(
        g: &Graph,
        p: &Rational,
        mode: FullMode,
        vertices: VertexSet,
        guarantee: Option<Rational>,
        trace: Vec<usize>,
    ) -> Result<Self> {
        let check = is_full(g, p, &vertices, mode)?;
        if let Some(v) = check.violator {
            return Err(Error::Verification(format!(
                "vertex {v} breaks {mode:?} fullness at p = {p} in a set of size {}",
                vertices.len()
            )));
        }
        let degs = vertices.iter().map(|v| g.degree_into(v, &vertices));
        let min_degree = match mode {
            FullMode::Full => degs.min(),
            FullMode::Cofull => degs.max(),
        }
        .unwrap_or(0);
        Ok(FullSubgraphResult {
            size: vertices.len(),
            vertices,
            p_used: p.clone(),
            min_degree,
            guarantee,
            trace,
        })
    }
}
