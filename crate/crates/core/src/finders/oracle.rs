use std::ops::ControlFlow;

use super::{FullMode, FullSubgraphResult};
use crate::error::{Error, Result};
use crate::exact::{combinations_lex, mask_members, masks_within_cap};
use crate::graph::Graph;
use crate::rational::{Prob, Rational};
use crate::vertex_set::VertexSet;

/// Largest `p`-full (or co-full) set by exhaustive search, ties to the
/// lexicographically smallest set. Its size is exactly `f_p(G)` (or the
/// co-full analogue).
///
/// Sizes are tried from `n` down. For each size the candidate pool is first
/// peeled to the vertices that keep at least `ceil(p (m - 1))` neighbours
/// inside the pool, since every member of a full `m`-set must.
pub fn oracle_largest_full(g: &Graph, p: &Rational, mode: FullMode, cap: usize) -> Result<FullSubgraphResult> {
    let mut masks = masks_within_cap(g, cap)?;
    let mut prob = Prob::from_rational(p)?;
    let n = g.n();
    if mode == FullMode::Cofull {
        let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        for (v, m) in masks.iter_mut().enumerate() {
            *m = !*m & all & !(1 << v);
        }
        prob = prob.complement();
    }
    for size in (1..=n).rev() {
        let need = prob.ceil_mul(size as i128 - 1) as u32;
        let mut pool: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        loop {
            let weak = mask_members(pool).fold(0u64, |w, v| {
                if (masks[v] & pool).count_ones() < need {
                    w | (1 << v)
                } else {
                    w
                }
            });
            if weak == 0 {
                break;
            }
            pool &= !weak;
        }
        if (pool.count_ones() as usize) < size {
            continue;
        }
        let pool_list: Vec<usize> = mask_members(pool).collect();
        let mut found = None;
        combinations_lex(&pool_list, size, |set| {
            if mask_members(set).all(|v| (masks[v] & set).count_ones() >= need) {
                found = Some(set);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(set) = found {
            let vs = VertexSet::from_mask(n, set);
            return FullSubgraphResult::certified(g, p, mode, vs, None, Vec::new());
        }
    }
    FullSubgraphResult::certified(g, p, mode, VertexSet::empty(n), None, Vec::new())
}

/// Some non-empty relatively `q`-full subset of `within`, by exhaustive
/// search over its subsets, or `None` if there is none.
pub fn oracle_relatively_full_within(
    g: &Graph,
    q: &Rational,
    within: &VertexSet,
    cap: usize,
) -> Result<Option<VertexSet>> {
    let masks = masks_within_cap(g, cap)?;
    let q = Prob::from_rational(q)?;
    let within = within
        .to_mask()
        .filter(|_| within.universe() == g.n())
        .ok_or_else(|| Error::InvalidInput("vertex set does not match graph".into()))?;
    let degree: Vec<i128> = masks.iter().map(|m| m.count_ones() as i128).collect();
    let mut sub = within;
    while sub != 0 {
        if mask_members(sub).all(|v| q.at_least((masks[v] & sub).count_ones() as i128, degree[v])) {
            return Ok(Some(VertexSet::from_mask(g.n(), sub)));
        }
        sub = (sub - 1) & within;
    }
    Ok(None)
}
