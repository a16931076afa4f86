//! Majority bootstrap percolation.
//!
//! An uninfected vertex becomes infected once strictly more than half of
//! its neighbours are infected. The vertices that stay uninfected are
//! exactly the largest relatively half-full subset of the initially
//! uninfected ones, so `G` is fully infected iff the uninfected start
//! contains no non-empty relatively half-full set.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::masks_within_cap;
use crate::graph::Graph;
use crate::rational::{Prob, Rational};
use crate::rng::split_seed;
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`theta_exact`] unless overridden.
pub const DEFAULT_THETA_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PercolationState {
    pub infected: VertexSet,
    /// rounds that infected at least one vertex
    pub round: usize,
    pub stabilized: bool,
}

impl PercolationState {
    pub fn percolated(&self) -> bool {
        self.infected.len() == self.infected.universe()
    }
}

#[inline]
fn majority(infected_nbrs: usize, degree: usize) -> bool {
    2 * infected_nbrs > degree
}

fn check_universe(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() {
        return Err(Error::InvalidInput(format!(
            "vertex set over {} vertices used with a graph on {}",
            s.universe(),
            g.n()
        )));
    }
    Ok(())
}

/// Synchronous rounds: every eligible vertex joins at once.
pub fn bootstrap_percolate(g: &Graph, initial: &VertexSet) -> Result<PercolationState> {
    check_universe(g, initial)?;
    let n = g.n();
    let mut infected = initial.clone();
    let mut count: Vec<usize> = (0..n).map(|v| g.degree_into(v, &infected)).collect();
    let mut frontier: Vec<usize> = (0..n)
        .filter(|&v| !infected.contains(v) && majority(count[v], g.degree(v)))
        .collect();
    let mut round = 0;
    while !frontier.is_empty() {
        round += 1;
        for &v in &frontier {
            infected.insert(v);
        }
        let mut next = Vec::new();
        for &v in &frontier {
            for u in g.neighbors(v) {
                count[u] += 1;
                if !infected.contains(u) && majority(count[u], g.degree(u)) && count[u] * 2 - 2 <= g.degree(u) {
                    // u crossed the threshold in this round
                    next.push(u);
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        frontier = next;
    }
    Ok(PercolationState {
        infected,
        round,
        stabilized: true,
    })
}

/// Asynchronous order: repeatedly infect the smallest eligible vertex.
pub fn bootstrap_percolate_sequential(g: &Graph, initial: &VertexSet) -> Result<VertexSet> {
    check_universe(g, initial)?;
    let mut infected = initial.clone();
    loop {
        let next = (0..g.n()).find(|&v| !infected.contains(v) && majority(g.degree_into(v, &infected), g.degree(v)));
        match next {
            Some(v) => infected.insert(v),
            None => return Ok(infected),
        }
    }
}

/// Largest `S` inside `within` with `2 d_S(v) >= d(v)` for every `v` in `S`,
/// by repeatedly discarding vertices that fail. Relative half-fullness is
/// preserved under unions, so the survivor is the unique maximum.
pub fn half_full_core(g: &Graph, within: &VertexSet) -> Result<VertexSet> {
    check_universe(g, within)?;
    let mut core = within.clone();
    let mut inside: Vec<usize> = (0..g.n()).map(|v| g.degree_into(v, &core)).collect();
    let mut stack: Vec<usize> = core.iter().filter(|&v| 2 * inside[v] < g.degree(v)).collect();
    while let Some(v) = stack.pop() {
        if !core.contains(v) {
            continue;
        }
        core.remove(v);
        for u in g.neighbors(v) {
            inside[u] -= 1;
            if core.contains(u) && 2 * inside[u] < g.degree(u) {
                stack.push(u);
            }
        }
    }
    Ok(core)
}

/// Monte Carlo estimate of the probability that a `p`-random initial set infects everything.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaEstimate {
    pub estimate: f64,
    /// 95% normal-approximation half-width
    pub half_width: f64,
    pub successes: u64,
    pub trials: u64,
}

/// Initial infection of Monte Carlo trial `trial`: each vertex
/// independently with probability `p`, drawn from `split_seed(seed, trial)`.
pub fn random_initial_set(n: usize, p: &Rational, seed: u64, trial: u64) -> Result<VertexSet> {
    let prob = Prob::from_rational(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(split_seed(seed, trial));
    Ok(VertexSet::from_members(n, (0..n).filter(|_| rng.random_range(0..prob.den) < prob.num)).expect("in range"))
}

/// Trial `i` starts from [`random_initial_set`]; results do not depend on
/// the thread count.
pub fn theta_estimate(g: &Graph, p: &Rational, trials: u64, seed: u64) -> Result<ThetaEstimate> {
    if trials == 0 {
        return Err(Error::InvalidInput("at least one trial is required".into()));
    }
    Prob::from_rational(p)?;
    let n = g.n();
    let successes: u64 = (0..trials)
        .into_par_iter()
        .map(|i| {
            let uninfected = random_initial_set(n, p, seed, i).expect("valid p").complement();
            u64::from(half_full_core(g, &uninfected).expect("same universe").is_empty())
        })
        .sum();
    let est = successes as f64 / trials as f64;
    let half_width = 1.96 * (est * (1.0 - est) / trials as f64).sqrt();
    Ok(ThetaEstimate {
        estimate: est,
        half_width,
        successes,
        trials,
    })
}

fn mask_core(masks: &[u64], degs: &[u32], mut u: u64) -> u64 {
    loop {
        let mut drop = 0u64;
        let mut rest = u;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if 2 * (masks[v] & u).count_ones() < degs[v] {
                drop |= 1 << v;
            }
        }
        if drop == 0 {
            return u;
        }
        u &= !drop;
    }
}

fn mask_percolate(masks: &[u64], degs: &[u32], mut infected: u64, all: u64) -> u64 {
    loop {
        let mut add = 0u64;
        let mut rest = all & !infected;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if 2 * (masks[v] & infected).count_ones() > degs[v] {
                add |= 1 << v;
            }
        }
        if add == 0 {
            return infected;
        }
        infected |= add;
    }
}

/// Number of initial sets of each size that infect every vertex, checked
/// two ways: by simulation and by the absence of a half-full core in the
/// complement. A disagreement is reported as a verification failure.
pub fn percolating_counts(g: &Graph, cap: usize) -> Result<Vec<u64>> {
    let masks = masks_within_cap(g, cap)?;
    let n = g.n();
    let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let degs: Vec<u32> = masks.iter().map(|m| m.count_ones()).collect();
    let mut counts = vec![0u64; n + 1];
    for i in 0..=all {
        let by_core = mask_core(&masks, &degs, all & !i) == 0;
        let by_run = mask_percolate(&masks, &degs, i, all) == all;
        if by_core != by_run {
            return Err(Error::Verification(format!(
                "initial set {:?} disagrees: simulation {by_run}, half-full test {by_core}",
                VertexSet::from_mask(n, i)
            )));
        }
        if by_run {
            counts[i.count_ones() as usize] += 1;
        }
    }
    Ok(counts)
}

/// Exact `theta_p(G) = sum_k count_k p^k (1 - p)^{n - k}`.
pub fn theta_exact(g: &Graph, p: &Rational, cap: usize) -> Result<Rational> {
    Prob::from_rational(p)?;
    let counts = percolating_counts(g, cap)?;
    let n = g.n();
    let q = p.complement();
    let mut total = Rational::zero();
    for (k, &c) in counts.iter().enumerate() {
        if c > 0 {
            let term = &(&p.pow(k as u32) * &q.pow((n - k) as u32)) * &Rational::from_bigint(BigInt::from(c));
            total = &total + &term;
        }
    }
    Ok(total)
}

/// Number of non-empty relatively half-full subsets, by enumeration.
pub fn count_relatively_half_full(g: &Graph, cap: usize) -> Result<BigInt> {
    let masks = masks_within_cap(g, cap)?;
    let n = g.n();
    let degs: Vec<u32> = masks.iter().map(|m| m.count_ones()).collect();
    let all: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut count = BigInt::zero();
    for s in 1..=all {
        if mask_core(&masks, &degs, s) == s {
            count += 1u32;
        }
    }
    Ok(count)
}
