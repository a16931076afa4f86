//! Exhaustive subset enumeration shared by the exact oracles.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest `n` accepted by exhaustive routines.
pub const DEFAULT_EXACT_CAP: usize = 20;

/// Bitmask representation bounds any cap.
pub const MAX_EXACT_N: usize = 63;

/// Adjacency masks, or a refusal when `n` exceeds `cap`.
pub(crate) fn masks_within_cap(g: &Graph, cap: usize) -> Result<Vec<u64>> {
    let cap = cap.min(MAX_EXACT_N);
    if g.n() > cap {
        return Err(Error::CapExceeded { n: g.n(), cap });
    }
    Ok(g.adjacency_masks().expect("n <= 63"))
}

/// Visits every subset once, in binary-reflected Gray code order, with its
/// size and internal edge count maintained incrementally.
pub(crate) fn gray_walk(masks: &[u64], mut visit: impl FnMut(u64, u32, u64)) {
    let n = masks.len();
    let (mut set, mut size, mut edges) = (0u64, 0u32, 0u64);
    visit(set, size, edges);
    for i in 1u64..(1u64 << n) {
        let v = i.trailing_zeros() as usize;
        let bit = 1u64 << v;
        if set & bit != 0 {
            set ^= bit;
            size -= 1;
            edges -= (masks[v] & set).count_ones() as u64;
        } else {
            edges += (masks[v] & set).count_ones() as u64;
            set |= bit;
            size += 1;
        }
        visit(set, size, edges);
    }
}

/// Visits the `k`-subsets of `pool` in lexicographic order of their sorted
/// member lists (`pool` must be increasing), stopping early on `Break`.
pub(crate) fn combinations_lex(pool: &[usize], k: usize, mut visit: impl FnMut(u64) -> ControlFlow<()>) {
    let n = pool.len();
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | (1 << pool[i]));
        if visit(mask).is_break() {
            return;
        }
        // advance the rightmost index that still has room
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Iterates the members of a mask in increasing order.
pub(crate) fn mask_members(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::mask_lex_less;

    #[test]
    fn gray_walk_counts_edges() {
        let g = Graph::cycle(5);
        let masks = g.adjacency_masks().unwrap();
        let mut seen = [false; 32];
        gray_walk(&masks, |set, size, edges| {
            assert!(!seen[set as usize]);
            seen[set as usize] = true;
            assert_eq!(size, set.count_ones());
            let direct: u32 = mask_members(set).map(|v| (masks[v] & set).count_ones()).sum();
            assert_eq!(edges, direct as u64 / 2);
        });
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn combinations_in_lex_order() {
        for n in 0..8 {
            for k in 0..=n {
                let mut all = Vec::new();
                let pool: Vec<usize> = (0..n).collect();
                combinations_lex(&pool, k, |m| {
                    all.push(m);
                    ControlFlow::Continue(())
                });
                let expected = (0..1u64 << n).filter(|m| m.count_ones() as usize == k).count();
                assert_eq!(all.len(), expected, "n={n} k={k}");
                assert!(all.windows(2).all(|w| mask_lex_less(w[0], w[1])));
            }
        }
    }

    #[test]
    fn cap_refusal() {
        let g = Graph::empty(21);
        assert_eq!(masks_within_cap(&g, 20), Err(Error::CapExceeded { n: 21, cap: 20 }));
        assert!(masks_within_cap(&g, 21).is_ok());
    }
}
