use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::{FullMode, FullSubgraphResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{Prob, Rational};
use crate::vertex_set::VertexSet;

/// How the greedy peeler chooses among minimum-degree vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TieBreak {
    /// smallest vertex index
    MinIndex,
    /// After deleting `v`, delete its antipode `v + n/2 (mod n)` next if it
    /// is still present and ties for minimum degree. Only meaningful for
    /// even `n`; odd orders fall back to `MinIndex`.
    AdversarialAntipodal,
}

/// Minimum-degree deletion over a shrinking vertex set.
pub(crate) struct Peeler<'a> {
    g: &'a Graph,
    pub(crate) alive: Vec<bool>,
    pub(crate) deg: Vec<usize>,
    queue: BTreeSet<(usize, usize)>,
}

impl<'a> Peeler<'a> {
    pub(crate) fn new(g: &'a Graph, start: &VertexSet) -> Self {
        let alive: Vec<bool> = (0..g.n()).map(|v| start.contains(v)).collect();
        let deg: Vec<usize> = (0..g.n())
            .map(|v| {
                if alive[v] {
                    g.neighbors(v).filter(|&u| alive[u]).count()
                } else {
                    0
                }
            })
            .collect();
        let queue = (0..g.n()).filter(|&v| alive[v]).map(|v| (deg[v], v)).collect();
        Peeler { g, alive, deg, queue }
    }

    pub(crate) fn len(&self) -> usize {
        self.queue.len()
    }

    /// Minimum degree and the smallest vertex attaining it.
    pub(crate) fn min(&self) -> Option<(usize, usize)> {
        self.queue.first().copied()
    }

    pub(crate) fn remove(&mut self, v: usize) {
        debug_assert!(self.alive[v]);
        self.queue.remove(&(self.deg[v], v));
        self.alive[v] = false;
        for u in self.g.neighbors(v) {
            if self.alive[u] {
                self.queue.remove(&(self.deg[u], u));
                self.deg[u] -= 1;
                self.queue.insert((self.deg[u], u));
            }
        }
    }

    pub(crate) fn members(&self) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| self.alive[v]).collect()
    }

    pub(crate) fn set(&self) -> VertexSet {
        VertexSet::from_members(self.g.n(), self.members()).expect("in range")
    }
}

/// `ceil(sqrt(2 alpha / (1 - p)))`, the least order a full subgraph can have
/// when the positive discrepancy is `alpha > 0`. `None` when `p = 1` or `alpha <= 0`.
pub fn greedy_bound(p: &Rational, alpha: &Rational) -> Option<BigInt> {
    let slack = p.complement();
    if slack.is_zero() || slack.is_negative() || alpha.is_zero() || alpha.is_negative() {
        return None;
    }
    Some((&(alpha + alpha) / &slack).ceil_sqrt())
}

/// Greedy peeling from the whole vertex set.
pub fn greedy_full(g: &Graph, p: &Rational, tie: TieBreak) -> Result<FullSubgraphResult> {
    greedy_full_from(g, p, &VertexSet::full(g.n()), tie, None)
}

/// Greedy peeling from `start`: while the current `i`-vertex set has a
/// vertex of degree below `ceil(p (i - 1))`, delete a minimum-degree
/// vertex. The first `p`-full set reached is returned.
///
/// When `alpha = delta_p(start) > 0` is supplied, `guarantee` carries
/// [`greedy_bound`] for it.
pub fn greedy_full_from(
    g: &Graph,
    p: &Rational,
    start: &VertexSet,
    tie: TieBreak,
    alpha: Option<&Rational>,
) -> Result<FullSubgraphResult> {
    if start.universe() != g.n() {
        return Err(Error::InvalidInput("start set does not match graph order".into()));
    }
    let prob = Prob::from_rational(p)?;
    let n = g.n();
    let antipodal = tie == TieBreak::AdversarialAntipodal && n.is_multiple_of(2) && n > 0;
    let mut peeler = Peeler::new(g, start);
    let mut trace = Vec::new();
    let mut pending: Option<usize> = None;
    while let Some((dmin, vmin)) = peeler.min() {
        let size = peeler.len() as i128;
        if prob.at_least(dmin as i128, size - 1) {
            break;
        }
        let v = match pending.take() {
            Some(a) if peeler.alive[a] && peeler.deg[a] == dmin => a,
            _ => vmin,
        };
        peeler.remove(v);
        trace.push(v);
        if antipodal {
            pending = Some((v + n / 2) % n);
        }
    }
    let guarantee = alpha.and_then(|a| greedy_bound(p, a)).map(Rational::from_bigint);
    FullSubgraphResult::certified(g, p, FullMode::Full, peeler.set(), guarantee, trace)
}
