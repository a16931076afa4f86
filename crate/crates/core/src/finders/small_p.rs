//! Full subgraphs of order about `sqrt(p) n` in sparse graphs, where a
//! minimum degree of 1 is already enough.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{FullMode, FullSubgraphResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::vertex_set::VertexSet;

/// Integer window `[ceil(sqrt(p) n - 1), floor(sqrt(p) n + 1)]`, lower end clamped at 0.
pub fn small_p_window(p: &Rational, n: usize) -> (BigInt, BigInt) {
    let pn2 = p * &Rational::integer((n * n) as i128);
    let lower = pn2.ceil_sqrt() - 1;
    let lower = if lower < BigInt::zero() { BigInt::zero() } else { lower };
    (lower, pn2.floor_sqrt() + 1)
}

/// For `p = density(G)` with `p^3 n^2 <= 1`: drops isolated vertices, then
/// removes leaves (smallest index first) of a BFS spanning forest, together
/// with any forest neighbour left without forest edges, until the order
/// falls inside [`small_p_window`]. Every survivor keeps a forest edge, and
/// `p (m - 1) <= 1` there, so the result is full.
pub fn small_p_full(g: &Graph) -> Result<FullSubgraphResult> {
    let n = g.n();
    let p = g.density();
    if n <= 2 || p.is_zero() {
        return FullSubgraphResult::certified(g, &p, FullMode::Full, VertexSet::full(n), None, Vec::new());
    }
    if &p.pow(3) * &Rational::integer((n * n) as i128) > Rational::one() {
        return Err(Error::Precondition(format!(
            "density {p} on {n} vertices exceeds n^(-2/3)"
        )));
    }
    let (lower, upper) = small_p_window(&p, n);
    let upper: usize = upper.try_into().unwrap_or(usize::MAX);

    let mut trace: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 0).collect();
    let mut alive: Vec<bool> = (0..n).map(|v| g.degree(v) > 0).collect();
    let mut size = n - trace.len();

    let mut forest: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if !alive[root] || seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    forest[v].push(u);
                    forest[u].push(v);
                    queue.push_back(u);
                }
            }
        }
    }
    let mut fdeg: Vec<usize> = forest.iter().map(Vec::len).collect();
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| alive[v] && fdeg[v] == 1).collect();

    while size > upper {
        let Some(leaf) = leaves.pop_first() else { break };
        alive[leaf] = false;
        size -= 1;
        trace.push(leaf);
        let w = *forest[leaf]
            .iter()
            .find(|&&u| alive[u])
            .expect("leaf has a live forest neighbour");
        fdeg[w] -= 1;
        match fdeg[w] {
            0 => {
                leaves.remove(&w);
                alive[w] = false;
                size -= 1;
                trace.push(w);
            }
            1 => {
                leaves.insert(w);
            }
            _ => {}
        }
    }
    let vertices = VertexSet::from_members(n, (0..n).filter(|&v| alive[v])).expect("in range");
    FullSubgraphResult::certified(
        g,
        &p,
        FullMode::Full,
        vertices,
        Some(Rational::from_bigint(lower)),
        trace,
    )
}
