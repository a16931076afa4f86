use std::cmp::Ordering;

use super::{
    full_two_thirds, greedy_full, greedy_full_from, is_full, oracle_largest_full, qfull_partition, small_p_full,
    two_thirds_precondition, FullMode, FullSubgraphResult, TieBreak,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{disc_local_search, Sign};
use crate::rational::Rational;
use crate::rng::split_seed;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GMethod {
    /// exhaustive search, subject to the exact cap
    Oracle,
    /// best of the polynomial finders
    Heuristic,
}

/// `max(f(G), f(G^c))` at the density of `G`, with the side that attains it.
/// A co-full witness of `G` at `p` is a full set of the complement at `1 - p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GValue {
    pub value: usize,
    pub side: FullMode,
    pub witness: VertexSet,
}

const HEURISTIC_RESTARTS: usize = 4;

fn better(candidate: &VertexSet, best: &Option<VertexSet>) -> bool {
    match best {
        None => true,
        Some(b) => match candidate.len().cmp(&b.len()) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => candidate.lex_cmp(b) == Ordering::Less,
        },
    }
}

/// Largest `p`-full set found by greedy peeling, the discrepancy hill
/// climber (whose positive local maxima are full), peeling from each side
/// of a relatively half-full split, and, when `p` is the density of `G` and
/// their ranges apply, the two-thirds and sparse constructions. Ties go to
/// the lexicographically smaller set.
pub fn heuristic_largest_full(g: &Graph, p: &Rational, seed: u64) -> Result<FullSubgraphResult> {
    let mut best: Option<VertexSet> = None;
    let mut offer = |s: VertexSet| {
        if better(&s, &best) {
            best = Some(s);
        }
    };
    offer(greedy_full(g, p, TieBreak::MinIndex)?.vertices);
    let climb = disc_local_search(g, p, Sign::Positive, split_seed(seed, 0), HEURISTIC_RESTARTS)?;
    offer(greedy_full_from(g, p, &climb.witness, TieBreak::MinIndex, None)?.vertices);
    let split = qfull_partition(g, &Rational::new(1, 2), Some(split_seed(seed, 1)))?;
    for side in [split.set_q, split.set_1mq].into_iter().flatten() {
        offer(greedy_full_from(g, p, &side, TieBreak::MinIndex, None)?.vertices);
    }
    if *p == g.density() {
        if two_thirds_precondition(p, g.n()).is_ok() {
            offer(full_two_thirds(g)?.vertices);
        }
        match small_p_full(g) {
            Ok(r) => offer(r.vertices),
            Err(Error::Precondition(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let vertices = best.expect("greedy always offers a set");
    FullSubgraphResult::certified(g, p, FullMode::Full, vertices, None, Vec::new())
}

/// `g(G)` by the chosen method. Ties between the sides favour the full side.
pub fn g_value(g: &Graph, method: GMethod, cap: usize, seed: u64) -> Result<GValue> {
    let p = g.density();
    let (full, cofull) = match method {
        GMethod::Oracle => (
            oracle_largest_full(g, &p, FullMode::Full, cap)?.vertices,
            oracle_largest_full(g, &p, FullMode::Cofull, cap)?.vertices,
        ),
        GMethod::Heuristic => {
            let comp = g.complement();
            let q = p.complement();
            let full = heuristic_largest_full(g, &p, split_seed(seed, 0))?.vertices;
            let cofull = heuristic_largest_full(&comp, &q, split_seed(seed, 1))?.vertices;
            (full, cofull)
        }
    };
    debug_assert!(is_full(g, &p, &cofull, FullMode::Cofull)?.holds);
    Ok(if cofull.len() > full.len() {
        GValue {
            value: cofull.len(),
            side: FullMode::Cofull,
            witness: cofull,
        }
    } else {
        GValue {
            value: full.len(),
            side: FullMode::Full,
            witness: full,
        }
    })
}
