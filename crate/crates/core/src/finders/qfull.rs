//! Relatively `q`-full subgraphs from swap-local maxima of a bipartition potential.
//!
//! For `q = a/b` the bipartition `X | Y` of the vertex set has
//! `|X| = ceil(q n)` and `|Y| = floor((1 - q) n)`, and the potential is
//! `b ((1 - q) e(X) + q e(Y)) = (b - a) e(X) + a e(Y)`, an integer. Swapping
//! `x in X` with `y in Y` changes it by
//!
//! ```text
//! gain_in(y) + gain_out(x) - b [xy in E]
//! gain_in(y)  = (b - a) d_X(y) - a d_Y(y)
//! gain_out(x) = a d_Y(x) - (b - a) d_X(x)
//! ```
//!
//! Local search performs improving swaps until none is left. At such a
//! point, if neither side is relatively full, every low vertex of `X` is
//! adjacent to every low vertex of `Y` and each has exactly one neighbour
//! too few, so adding one to the other side repairs both.

use std::cmp::Reverse;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{Prob, Rational};
use crate::vertex_set::VertexSet;

/// Which alternative the case analysis produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QFullVariant {
    /// (i): relatively `q`-full set on `ceil(q n)` vertices
    QFull,
    /// (ii): relatively `(1 - q)`-full set on `floor((1 - q) n)` vertices
    ComplementFull,
    /// (iii): both sets, one vertex larger each
    Both,
}

impl fmt::Display for QFullVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QFullVariant::QFull => "i",
            QFullVariant::ComplementFull => "ii",
            QFullVariant::Both => "iii",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFullOutcome {
    pub variant: QFullVariant,
    /// relatively `q`-full witness, for (i) and (iii)
    pub set_q: Option<VertexSet>,
    /// relatively `(1 - q)`-full witness, for (ii) and (iii)
    pub set_1mq: Option<VertexSet>,
    pub q: Rational,
    /// improving swaps performed
    pub swaps: usize,
}

/// Bipartition of `G[active]` with incrementally maintained degrees.
struct Bipartition<'a> {
    g: &'a Graph,
    active: &'a [usize],
    local: Vec<u32>,
    deg: Vec<i128>,
    in_x: Vec<bool>,
    deg_x: Vec<i128>,
    a: i128,
    b: i128,
}

const NOT_ACTIVE: u32 = u32::MAX;

impl<'a> Bipartition<'a> {
    fn new(g: &'a Graph, active: &'a [usize], q: Prob, seed: Option<u64>) -> Self {
        let mut local = vec![NOT_ACTIVE; g.n()];
        for (i, &v) in active.iter().enumerate() {
            local[v] = i as u32;
        }
        let n = active.len();
        let mut bp = Bipartition {
            g,
            active,
            local,
            deg: vec![0; n],
            in_x: vec![false; n],
            deg_x: vec![0; n],
            a: q.num,
            b: q.den,
        };
        for i in 0..n {
            bp.deg[i] = bp.local_neighbors(i).count() as i128;
        }
        let x_size = ((q.num * n as i128 + q.den - 1) / q.den) as usize;
        let mut order: Vec<usize> = (0..n).collect();
        match seed {
            None => order.sort_by_key(|&i| (Reverse(bp.deg[i]), i)),
            Some(s) => order.shuffle(&mut ChaCha8Rng::seed_from_u64(s)),
        }
        for &i in &order[..x_size] {
            bp.in_x[i] = true;
        }
        for i in 0..n {
            bp.deg_x[i] = bp.local_neighbors(i).filter(|&u| bp.in_x[u]).count() as i128;
        }
        bp
    }

    fn local_neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.g
            .neighbor_slice(self.active[i])
            .iter()
            .map(|&u| self.local[u as usize])
            .filter(|&l| l != NOT_ACTIVE)
            .map(|l| l as usize)
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        self.g.has_edge(self.active[i], self.active[j])
    }

    #[inline]
    fn gain_in(&self, y: usize) -> i128 {
        let dy = self.deg[y] - self.deg_x[y];
        (self.b - self.a) * self.deg_x[y] - self.a * dy
    }

    #[inline]
    fn gain_out(&self, x: usize) -> i128 {
        let dy = self.deg[x] - self.deg_x[x];
        self.a * dy - (self.b - self.a) * self.deg_x[x]
    }

    fn swap_gain(&self, x: usize, y: usize) -> i128 {
        self.gain_in(y) + self.gain_out(x) - if self.adjacent(x, y) { self.b } else { 0 }
    }

    /// `(b - a) e(X) + a e(Y)`.
    #[cfg(test)]
    fn potential(&self) -> i128 {
        let (mut ex2, mut ey2) = (0, 0);
        for i in 0..self.in_x.len() {
            if self.in_x[i] {
                ex2 += self.deg_x[i];
            } else {
                ey2 += self.deg[i] - self.deg_x[i];
            }
        }
        (self.b - self.a) * (ex2 / 2) + self.a * (ey2 / 2)
    }

    /// The improving swap found first when `X` is scanned by decreasing
    /// `gain_out` and `Y` by decreasing `gain_in` (ties by index), keeping
    /// the largest gain. Pairs whose unpenalised sum cannot beat the
    /// current best are skipped, so each `x` inspects at most its
    /// neighbours plus one.
    fn best_swap(&self) -> Option<(usize, usize, i128)> {
        let n = self.in_x.len();
        let mut xs: Vec<(i128, usize)> = (0..n)
            .filter(|&i| self.in_x[i])
            .map(|i| (self.gain_out(i), i))
            .collect();
        let mut ys: Vec<(i128, usize)> = (0..n)
            .filter(|&i| !self.in_x[i])
            .map(|i| (self.gain_in(i), i))
            .collect();
        xs.sort_by_key(|&(g, i)| (Reverse(g), i));
        ys.sort_by_key(|&(g, i)| (Reverse(g), i));
        let top_in = ys.first()?.0;
        let mut best: Option<(usize, usize, i128)> = None;
        let mut best_gain = 0i128;
        for &(gx, x) in &xs {
            if gx + top_in <= best_gain {
                break;
            }
            for &(gy, y) in &ys {
                let sum = gx + gy;
                if sum <= best_gain {
                    break;
                }
                let adjacent = self.adjacent(x, y);
                let gain = if adjacent { sum - self.b } else { sum };
                if gain > best_gain {
                    best_gain = gain;
                    best = Some((x, y, gain));
                }
                if !adjacent {
                    break;
                }
            }
        }
        best
    }

    fn swap(&mut self, x: usize, y: usize) {
        self.in_x[x] = false;
        self.in_x[y] = true;
        let xs: Vec<usize> = self.local_neighbors(x).collect();
        for u in xs {
            self.deg_x[u] -= 1;
        }
        let ys: Vec<usize> = self.local_neighbors(y).collect();
        for u in ys {
            self.deg_x[u] += 1;
        }
    }

    /// `b d_X(x) < a d(x)`: x keeps less than a `q` fraction.
    fn low_in_x(&self, x: usize) -> bool {
        self.b * self.deg_x[x] < self.a * self.deg[x]
    }

    /// `b d_Y(y) < (b - a) d(y)`.
    fn low_in_y(&self, y: usize) -> bool {
        self.b * (self.deg[y] - self.deg_x[y]) < (self.b - self.a) * self.deg[y]
    }

    fn globals(&self, pick: impl Fn(usize) -> bool) -> Vec<usize> {
        (0..self.in_x.len())
            .filter(|&i| pick(i))
            .map(|i| self.active[i])
            .collect()
    }
}

/// Raw outcome over global vertex ids.
pub(crate) struct QFullRaw {
    pub(crate) variant: QFullVariant,
    pub(crate) set_q: Option<Vec<usize>>,
    pub(crate) set_1mq: Option<Vec<usize>>,
    pub(crate) swaps: usize,
}

/// `d_S(v) * den >= num * d_{G[active]}(v)` for all `v` in `set`.
fn relatively_full_within(g: &Graph, active: &[usize], q: Prob, set: &[usize]) -> bool {
    let mut in_active = vec![false; g.n()];
    let mut in_set = vec![false; g.n()];
    active.iter().for_each(|&v| in_active[v] = true);
    set.iter().for_each(|&v| in_set[v] = true);
    set.iter().all(|&v| {
        let d = g.neighbors(v).filter(|&u| in_active[u]).count() as i128;
        let ds = g.neighbors(v).filter(|&u| in_set[u]).count() as i128;
        q.at_least(ds, d)
    })
}

pub(crate) fn qfull_within(g: &Graph, active: &[usize], q: Prob, seed: Option<u64>) -> Result<QFullRaw> {
    let mut bp = Bipartition::new(g, active, q, seed);
    let mut swaps = 0usize;
    while let Some((x, y, gain)) = bp.best_swap() {
        debug_assert_eq!(gain, bp.swap_gain(x, y));
        bp.swap(x, y);
        swaps += 1;
    }
    let n = active.len();
    let low_x: Vec<usize> = (0..n).filter(|&i| bp.in_x[i] && bp.low_in_x(i)).collect();
    let raw = if low_x.is_empty() {
        QFullRaw {
            variant: QFullVariant::QFull,
            set_q: Some(bp.globals(|i| bp.in_x[i])),
            set_1mq: None,
            swaps,
        }
    } else {
        let low_y: Vec<usize> = (0..n).filter(|&i| !bp.in_x[i] && bp.low_in_y(i)).collect();
        match (low_x.first(), low_y.first()) {
            (_, None) => QFullRaw {
                variant: QFullVariant::ComplementFull,
                set_q: None,
                set_1mq: Some(bp.globals(|i| !bp.in_x[i])),
                swaps,
            },
            (Some(&x), Some(&y)) => {
                let mut xq = bp.globals(|i| bp.in_x[i]);
                xq.push(active[y]);
                xq.sort_unstable();
                let mut y1 = bp.globals(|i| !bp.in_x[i]);
                y1.push(active[x]);
                y1.sort_unstable();
                QFullRaw {
                    variant: QFullVariant::Both,
                    set_q: Some(xq),
                    set_1mq: Some(y1),
                    swaps,
                }
            }
            (None, Some(_)) => unreachable!(),
        }
    };
    if let Some(s) = &raw.set_q {
        if !relatively_full_within(g, active, q, s) {
            return Err(Error::Verification(format!("set for q = {q} is not relatively q-full")));
        }
    }
    if let Some(s) = &raw.set_1mq {
        if !relatively_full_within(g, active, q.complement(), s) {
            return Err(Error::Verification(format!(
                "set for 1 - q = {} is not relatively full",
                q.complement()
            )));
        }
    }
    Ok(raw)
}

/// One of the three relatively-full alternatives for `q` in `[0, 1]`.
///
/// The initial `X` is the `ceil(q n)` vertices of largest degree (ties by
/// index) or, with `seed`, a seeded random choice. In alternative (iii) the
/// smallest low vertex of each side is moved across.
pub fn qfull_partition(g: &Graph, q: &Rational, seed: Option<u64>) -> Result<QFullOutcome> {
    let prob = Prob::from_rational(q)?;
    let all: Vec<usize> = (0..g.n()).collect();
    let raw = qfull_within(g, &all, prob, seed)?;
    let to_set = |s: Vec<usize>| VertexSet::from_members(g.n(), s).expect("in range");
    Ok(QFullOutcome {
        variant: raw.variant,
        set_q: raw.set_q.map(to_set),
        set_1mq: raw.set_1mq.map(to_set),
        q: q.clone(),
        swaps: raw.swaps,
    })
}

/// Relatively `1/r`-full set of order `floor(n/r)`, `ceil(n/r)` or `ceil(n/r) + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeFullResult {
    pub vertices: VertexSet,
    pub size: usize,
    pub r: usize,
}

/// Induction on `r`: split with `q = 1/r`; alternatives (i) and (iii) are
/// done, while (ii) leaves a relatively `(r-1)/r`-full set in which a
/// relatively `1/(r-1)`-full set is relatively `1/r`-full in `G`.
pub(crate) fn one_over_r_within(g: &Graph, active: &[usize], r: usize) -> Result<Vec<usize>> {
    let mut current = active.to_vec();
    let mut r = r;
    while r > 1 {
        let raw = qfull_within(g, &current, Prob { num: 1, den: r as i128 }, None)?;
        match raw.variant {
            QFullVariant::QFull | QFullVariant::Both => return Ok(raw.set_q.expect("q side present")),
            QFullVariant::ComplementFull => {
                current = raw.set_1mq.expect("complement side present");
                r -= 1;
            }
        }
    }
    Ok(current)
}

pub fn one_over_r_full(g: &Graph, r: usize) -> Result<RelativeFullResult> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be at least 1".into()));
    }
    let all: Vec<usize> = (0..g.n()).collect();
    let set = one_over_r_within(g, &all, r)?;
    if !relatively_full_within(g, &all, Prob { num: 1, den: r as i128 }, &set) {
        return Err(Error::Verification(format!("result is not relatively 1/{r}-full")));
    }
    let vertices = VertexSet::from_members(g.n(), set).expect("in range");
    Ok(RelativeFullResult {
        size: vertices.len(),
        vertices,
        r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finders::is_relatively_full;
    use crate::testing::{arb_graph, arb_prob};
    use proptest::prelude::*;

    fn half() -> Rational {
        Rational::new(1, 2)
    }

    #[test]
    fn complete_graph_half() {
        let out = qfull_partition(&Graph::complete(5), &half(), None).unwrap();
        assert_eq!(out.variant, QFullVariant::QFull);
        assert_eq!(out.set_q.unwrap().len(), 3);
    }

    #[test]
    fn complete_bipartite_needs_both() {
        let out = qfull_partition(&Graph::complete_bipartite(3, 3), &half(), None).unwrap();
        assert_eq!(out.variant, QFullVariant::Both);
        assert_eq!(out.set_q.as_ref().unwrap().len(), 4);
        assert_eq!(out.set_1mq.as_ref().unwrap().len(), 4);
    }

    #[test]
    fn q_zero_and_one() {
        let g = Graph::cycle(7);
        let out = qfull_partition(&g, &Rational::zero(), None).unwrap();
        assert_eq!(out.variant, QFullVariant::QFull);
        assert!(out.set_q.unwrap().is_empty());
        let out = qfull_partition(&g, &Rational::one(), None).unwrap();
        assert_eq!(out.set_q.unwrap().len(), 7);
    }

    #[test]
    fn swap_gain_matches_potential_difference() {
        let g = Graph::from_edges(
            7,
            [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (1, 5)],
        )
        .unwrap();
        let active: Vec<usize> = (0..7).collect();
        for (a, b) in [(1, 2), (1, 3), (2, 5), (3, 7)] {
            let bp = Bipartition::new(&g, &active, Prob { num: a, den: b }, Some(9));
            for x in (0..7).filter(|&i| bp.in_x[i]) {
                for y in (0..7).filter(|&i| !bp.in_x[i]) {
                    let mut after = Bipartition::new(&g, &active, Prob { num: a, den: b }, Some(9));
                    after.swap(x, y);
                    assert_eq!(after.potential() - bp.potential(), bp.swap_gain(x, y));
                }
            }
        }
    }

    #[test]
    fn one_over_r_examples() {
        let g = Graph::cycle(9);
        assert_eq!(one_over_r_full(&g, 1).unwrap().size, 9);
        let k8 = one_over_r_full(&Graph::complete(8), 3).unwrap();
        assert_eq!(k8.size, 4);
        let c6 = one_over_r_full(&Graph::cycle(6), 2).unwrap();
        assert!((3..=4).contains(&c6.size));
        assert!(
            is_relatively_full(&Graph::cycle(6), &half(), &c6.vertices)
                .unwrap()
                .holds
        );
        assert!(one_over_r_full(&g, 0).is_err());
    }

    fn sizes_match(out: &QFullOutcome, n: usize) -> bool {
        let (a, b) = out.q.to_i128_parts().unwrap();
        let up = ((a * n as i128 + b - 1) / b) as usize;
        let down = n - up;
        let len = |s: &Option<VertexSet>| s.as_ref().map(VertexSet::len);
        match out.variant {
            QFullVariant::QFull => len(&out.set_q) == Some(up) && out.set_1mq.is_none(),
            QFullVariant::ComplementFull => len(&out.set_1mq) == Some(down) && out.set_q.is_none(),
            QFullVariant::Both => len(&out.set_q) == Some(up + 1) && len(&out.set_1mq) == Some(down + 1),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn partition_sizes_follow_the_case_law(g in arb_graph(0..=9), q in arb_prob(), seed in proptest::option::of(any::<u64>())) {
            let out = qfull_partition(&g, &q, seed).unwrap();
            prop_assert!(sizes_match(&out, g.n()));
            if let Some(s) = &out.set_q {
                prop_assert!(is_relatively_full(&g, &q, s).unwrap().holds);
            }
            if let Some(s) = &out.set_1mq {
                prop_assert!(is_relatively_full(&g, &q.complement(), s).unwrap().holds);
            }
        }

        #[test]
        fn terminates_at_swap_local_maximum(g in arb_graph(2..=14), q in arb_prob(), seed in any::<u64>()) {
            let active: Vec<usize> = (0..g.n()).collect();
            let prob = Prob::from_rational(&q).unwrap();
            let mut bp = Bipartition::new(&g, &active, prob, Some(seed));
            while let Some((x, y, _)) = bp.best_swap() {
                bp.swap(x, y);
            }
            for x in (0..g.n()).filter(|&i| bp.in_x[i]) {
                for y in (0..g.n()).filter(|&i| !bp.in_x[i]) {
                    prop_assert!(bp.swap_gain(x, y) <= 0);
                }
            }
        }

        #[test]
        fn half_split_sizes(g in arb_graph(1..=40)) {
            let out = qfull_partition(&g, &half(), None).unwrap();
            let n = g.n();
            let sizes: Vec<usize> = [&out.set_q, &out.set_1mq].iter().filter_map(|s| s.as_ref().map(VertexSet::len)).collect();
            prop_assert!(sizes.iter().all(|&s| n / 2 <= s && s <= n.div_ceil(2) + 1));
        }

        #[test]
        fn one_over_r_size_window(g in arb_graph(1..=60), r in 1usize..=8) {
            let res = one_over_r_full(&g, r).unwrap();
            let n = g.n();
            prop_assert!(n / r <= res.size && res.size <= n.div_ceil(r) + 1);
            prop_assert!(is_relatively_full(&g, &Rational::new(1, r as i128), &res.vertices).unwrap().holds);
        }

        #[test]
        fn regular_half_split_is_full(n in 4usize..=30, k in 1usize..=6) {
            // circulant with offsets 1..=k is 2k-regular
            prop_assume!(2 * k < n);
            let g = Graph::from_edges_dedup(n, (0..n).flat_map(|v| (1..=k).map(move |j| (v, (v + j) % n)))).unwrap();
            let out = qfull_partition(&g, &half(), None).unwrap();
            let p = g.density();
            for s in [out.set_q, out.set_1mq].into_iter().flatten() {
                prop_assert!(crate::finders::is_full(&g, &p, &s, crate::finders::FullMode::Full).unwrap().holds);
            }
        }
    }
}
