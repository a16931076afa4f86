//! Graph generators: random graphs, sparse extremal examples, the planted
//! multipartite family, the greedy adversary and pairwise gluing.
//!
//! All generators are pure functions of their parameters and seed.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{choose2, Prob, Rational};
use crate::rng::split_seed;

/// `G(n, p)`: pairs in lexicographic order, each kept when a uniform draw
/// from `0..den` falls below `num`.
pub fn gen_gnp(n: usize, p: &Rational, seed: u64) -> Result<Graph> {
    let prob = Prob::from_rational(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_range(0..prob.den) < prob.num {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Smallest `m` with `C(m, 2) >= e`.
pub fn clique_order_for(e: u64) -> usize {
    let mut m = ((2.0 * e as f64).sqrt() as usize).saturating_sub(1);
    while choose2(m) < e {
        m += 1;
    }
    m
}

/// The first `e` edges, in lexicographic order, of a clique on
/// `0..m` with `m` minimal, plus `n - m` isolated vertices.
pub fn gen_clique_plus_isolated(n: usize, e: u64) -> Result<Graph> {
    if e > choose2(n) {
        return Err(Error::InvalidInput(format!("{e} edges do not fit on {n} vertices")));
    }
    let m = clique_order_for(e);
    let edges = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).take(e as usize);
    Graph::from_edges(n, edges)
}

/// A planted multipartite graph with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planted {
    pub graph: Graph,
    /// clique order inside each part
    pub k: usize,
    /// edge target, `round(p C((r+1) n, 2))`
    pub target: u64,
    /// exact density of the output
    pub realized_p: Rational,
}

/// `round(r/(r+1) C(N, 2) + c C(N, 2) n^{-2/3})` for `N = (r+1) n`,
/// halves rounded up. With `A` the first term and `B = c C(N, 2)`, the
/// largest `T` with `T - 1/2 - A <= B n^{-2/3}` is found by comparing
/// `(T - 1/2 - A)^3 n^2` against `B^3` whenever the left side is positive.
fn planted_target(n: usize, r: usize, c: &Rational) -> u64 {
    let big_n = (r + 1) * n;
    let pairs = Rational::integer(choose2(big_n) as i128);
    let a = &Rational::new(r as i128, r as i128 + 1) * &pairs;
    let b = c * &pairs;
    let b3 = b.pow(3);
    let n2 = Rational::integer((n * n) as i128);
    let fits = |t: u64| {
        let gap = &(&Rational::integer(t as i128) - &Rational::new(1, 2)) - &a;
        gap.is_negative() || gap.is_zero() || &gap.pow(3) * &n2 <= b3
    };
    let estimate = (a.to_f64() + b.to_f64() * (n as f64).powf(-2.0 / 3.0)).round().max(0.0) as u64;
    let mut t = estimate;
    while fits(t + 1) {
        t += 1;
    }
    while t > 0 && !fits(t) {
        t -= 1;
    }
    t
}

/// Complete `(r+1)`-partite graph with parts of size `n` (part `i` is
/// `i n .. (i+1) n`), a clique `T_i` on the first `k` vertices of each part
/// where `k` is the least order with
/// `C(r+1, 2) n^2 + (r+1) C(k, 2) >= target`, and then clique edges removed
/// round-robin over the parts, the lexicographically largest remaining edge
/// of `T_i` each time, until exactly `target` edges remain.
///
/// The edge target is `round(p C((r+1) n, 2))` for
/// `p = r/(r+1) + c n^{-2/3}`, so the realized density differs from `p` by
/// less than `1 / C((r+1) n, 2)`. The upper-bound argument for this family
/// needs `c >= 1`; smaller `c` is generated with a warning.
pub fn gen_multipartite_planted(n: usize, r: usize, c: &Rational) -> Result<Planted> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidInput("part size and r must be positive".into()));
    }
    if c.is_negative() || c.is_zero() {
        return Err(Error::InvalidInput(format!("c = {c} must be positive")));
    }
    if *c < Rational::one() {
        log::warn!("c = {c} is below 1; the planted family is only extremal for c >= 1");
    }
    let parts = r + 1;
    let base = choose2(parts) * (n * n) as u64;
    let target = planted_target(n, r, c);
    if target < base {
        return Err(Error::InvalidInput(format!(
            "edge target {target} is below the multipartite base {base}"
        )));
    }
    let mut k = 0usize;
    while base + parts as u64 * choose2(k) < target {
        k += 1;
        if k > n {
            return Err(Error::InvalidInput(format!(
                "edge target {target} needs cliques larger than the parts ({n}); increase n or lower c"
            )));
        }
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..parts {
        for j in i + 1..parts {
            for u in i * n..(i + 1) * n {
                edges.extend((j * n..(j + 1) * n).map(|v| (u, v)));
            }
        }
    }
    let mut cliques: Vec<Vec<(usize, usize)>> = (0..parts)
        .map(|i| {
            let o = i * n;
            (0..k).flat_map(|u| (u + 1..k).map(move |v| (o + u, o + v))).collect()
        })
        .collect();
    let mut excess = base + parts as u64 * choose2(k) - target;
    let mut i = 0;
    while excess > 0 {
        if cliques[i].pop().is_some() {
            excess -= 1;
        }
        i = (i + 1) % parts;
    }
    edges.extend(cliques.into_iter().flatten());
    let graph = Graph::from_edges(parts * n, edges)?;
    debug_assert_eq!(graph.m() as u64, target);
    let realized_p = graph.density();
    Ok(Planted {
        graph,
        k,
        target,
        realized_p,
    })
}

/// `round(sqrt(3 n))`: the `m` with `(2m - 1)^2 <= 12 n < (2m + 1)^2`.
pub fn adversary_clique_side(n: usize) -> usize {
    let mut m = ((3.0 * n as f64).sqrt()).round() as usize;
    while (2 * m + 1) * (2 * m + 1) <= 12 * n {
        m += 1;
    }
    while m > 0 && (2 * m - 1) * (2 * m - 1) > 12 * n {
        m -= 1;
    }
    m
}

/// On `N = 4n + 2` vertices: the `n`-th power of the cycle `0, 1, .., N-1`,
/// every antipodal pair `{i, i + 2n + 1}`, and a complete bipartite graph
/// between `0..m` and `2n+1 .. 2n+1+m` with `m = round(sqrt(3n))`.
/// Before planting the graph is `(2n + 1)`-regular.
pub fn gen_greedy_adversary(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidInput(
            "adversary order parameter must be at least 2".into(),
        ));
    }
    let big_n = 4 * n + 2;
    let half = 2 * n + 1;
    let m = adversary_clique_side(n);
    let mut edges = Vec::new();
    for i in 0..big_n {
        edges.extend((1..=n).map(|j| (i, (i + j) % big_n)));
    }
    edges.extend((0..half).map(|i| (i, i + half)));
    for u in 0..m {
        edges.extend((half..half + m).map(|v| (u, v)));
    }
    Graph::from_edges_dedup(big_n, edges)
}

/// Disjoint union of `A` (vertices `0..2n`) and `B` (`2n..4n`) with, for
/// every pair `{2i, 2i+1}` of `A` and `{2j, 2j+1}` of `B`, one of the two
/// perfect matchings between them. The choice is bit 0 of
/// `split_seed(seed, i * n + j)`: 0 joins `2i` to `2j` and `2i+1` to
/// `2j+1` (offsets in `B`), 1 crosses them. Every vertex gains exactly `n`
/// neighbours in the other half.
pub fn gen_glued(a: &Graph, b: &Graph, seed: u64) -> Result<Graph> {
    if a.n() != b.n() || !a.n().is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "glued halves need equal even orders, got {} and {}",
            a.n(),
            b.n()
        )));
    }
    let two_n = a.n();
    let n = two_n / 2;
    let mut edges: Vec<(usize, usize)> = a.edges().collect();
    edges.extend(b.edges().map(|(u, v)| (u + two_n, v + two_n)));
    for i in 0..n {
        for j in 0..n {
            let (b0, b1) = (two_n + 2 * j, two_n + 2 * j + 1);
            if split_seed(seed, (i * n + j) as u64) & 1 == 0 {
                edges.extend([(2 * i, b0), (2 * i + 1, b1)]);
            } else {
                edges.extend([(2 * i, b1), (2 * i + 1, b0)]);
            }
        }
    }
    Graph::from_edges(2 * two_n, edges)
}

/// A reproducible generator call.
///
/// Gluing takes two input graphs and is called directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenSpec {
    Gnp { n: usize, p: Rational, seed: u64 },
    CliqueIsolated { n: usize, edges: u64 },
    MultipartitePlanted { n: usize, r: usize, c: Rational },
    Adversary { n: usize },
}

impl GenSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GenSpec::Gnp { .. } => "gnp",
            GenSpec::CliqueIsolated { .. } => "clique-isolated",
            GenSpec::MultipartitePlanted { .. } => "multipartite-planted",
            GenSpec::Adversary { .. } => "adversary",
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        match self {
            GenSpec::Gnp { n, p, seed } => gen_gnp(*n, p, *seed),
            GenSpec::CliqueIsolated { n, edges } => gen_clique_plus_isolated(*n, *edges),
            GenSpec::MultipartitePlanted { n, r, c } => gen_multipartite_planted(*n, *r, c).map(|p| p.graph),
            GenSpec::Adversary { n } => gen_greedy_adversary(*n),
        }
    }
}

/// `round(p C(n, 2))` with halves rounded up, for density targets.
pub fn edges_for_density(n: usize, p: &Rational) -> Result<u64> {
    Prob::from_rational(p)?;
    let x = p * &Rational::integer(choose2(n) as i128);
    let r: BigInt = (&x + &Rational::new(1, 2)).floor();
    Ok(if r.is_zero() {
        0
    } else {
        r.to_u64().expect("at most C(n, 2)")
    })
}
