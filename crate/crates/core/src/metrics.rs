//! Discrepancy and jumbledness.
//!
//! For a probability `p` and a vertex set `X`, `delta_p(X) = e(X) - p * C(|X|, 2)`.
//! Internally every comparison uses the scaled integer `den * delta_p(X)`
//! where `p = num / den`, so the exact and heuristic searches never round.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{gray_walk, masks_within_cap};
use crate::graph::Graph;
use crate::rational::{choose2, Prob, Rational};
use crate::rng::split_seed;
use crate::vertex_set::{mask_lex_less, VertexSet};

/// Which side of the discrepancy to maximise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    /// `max delta_p(X)`
    Positive,
    /// `max -delta_p(X)`
    Negative,
    /// `max |delta_p(X)|`
    Absolute,
}

impl Sign {
    #[inline]
    fn apply(self, scaled: i128) -> i128 {
        match self {
            Sign::Positive => scaled,
            Sign::Negative => -scaled,
            Sign::Absolute => scaled.abs(),
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" | "pos" | "+" => Ok(Sign::Positive),
            "negative" | "neg" | "-" => Ok(Sign::Negative),
            "absolute" | "abs" | "both" => Ok(Sign::Absolute),
            _ => Err(Error::InvalidInput(format!("unknown sign {s:?}"))),
        }
    }
}

/// A maximising set for one of the discrepancies.
///
/// `value` is the maximised quantity (`delta`, `-delta` or `|delta|` per
/// `sign`) and `delta` the signed `delta_p(witness)`. Without a size
/// restriction the value is never negative since the empty set scores zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscWitness {
    pub value: Rational,
    pub delta: Rational,
    pub witness: VertexSet,
    pub sign: Sign,
    pub k: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumbledReport {
    /// `max |delta_p(X)| / |X|` over non-empty `X` (of size `k` if restricted).
    pub j: Rational,
    pub witness: VertexSet,
    pub k: Option<usize>,
}

#[inline]
fn scaled_delta(p: Prob, edges: u64, size: u64) -> i128 {
    p.den * edges as i128 - p.num * choose2(size as usize) as i128
}

/// `e(X) - p * C(|X|, 2)`.
pub fn delta_p(g: &Graph, p: &Rational, x: &VertexSet) -> Result<Rational> {
    if x.universe() != g.n() {
        return Err(Error::InvalidInput("vertex set does not match graph order".into()));
    }
    let e = g.edges_within(x) as i128;
    Ok(Rational::integer(e) - p * &Rational::integer(choose2(x.len()) as i128))
}

/// Exact discrepancy by enumerating every subset (or every `k`-subset).
/// Ties go to the lexicographically smallest set.
pub fn disc_exact(g: &Graph, p: &Rational, sign: Sign, k: Option<usize>, cap: usize) -> Result<DiscWitness> {
    let prob = Prob::from_rational(p)?;
    if let Some(k) = k {
        if k > g.n() {
            return Err(Error::InvalidInput(format!("k = {k} exceeds n = {}", g.n())));
        }
    }
    let masks = masks_within_cap(g, cap)?;
    let mut best: Option<(i128, u64, i128)> = None;
    gray_walk(&masks, |set, size, edges| {
        if k.is_some_and(|k| k as u32 != size) {
            return;
        }
        let raw = scaled_delta(prob, edges, size as u64);
        let v = sign.apply(raw);
        let better = match best {
            None => true,
            Some((bv, bm, _)) => v > bv || (v == bv && mask_lex_less(set, bm)),
        };
        if better {
            best = Some((v, set, raw));
        }
    });
    let (v, mask, raw) = best.expect("at least one subset of every size k <= n");
    Ok(DiscWitness {
        value: Rational::new(v, prob.den),
        delta: Rational::new(raw, prob.den),
        witness: VertexSet::from_mask(g.n(), mask),
        sign,
        k,
    })
}

/// Hill climbing state for single-vertex add/remove moves.
struct Climber<'a> {
    g: &'a Graph,
    p: Prob,
    inside: Vec<bool>,
    /// neighbours inside the current set, for every vertex
    deg_in: Vec<i128>,
    size: i128,
    scaled: i128,
}

impl<'a> Climber<'a> {
    fn new(g: &'a Graph, p: Prob, inside: Vec<bool>) -> Self {
        let mut deg_in = vec![0i128; g.n()];
        let mut size = 0;
        let mut twice_edges = 0;
        for v in (0..g.n()).filter(|&v| inside[v]) {
            size += 1;
            for u in g.neighbors(v) {
                deg_in[u] += 1;
                if inside[u] {
                    twice_edges += 1;
                }
            }
        }
        let scaled = p.den * (twice_edges / 2) - p.num * size * (size - 1) / 2;
        Climber {
            g,
            p,
            inside,
            deg_in,
            size,
            scaled,
        }
    }

    /// Change in `den * delta` from toggling `v`.
    #[inline]
    fn toggle_gain(&self, v: usize) -> i128 {
        if self.inside[v] {
            -self.p.den * self.deg_in[v] + self.p.num * (self.size - 1)
        } else {
            self.p.den * self.deg_in[v] - self.p.num * self.size
        }
    }

    fn toggle(&mut self, v: usize) {
        let gain = self.toggle_gain(v);
        self.scaled += gain;
        let step = if self.inside[v] { -1 } else { 1 };
        self.inside[v] = !self.inside[v];
        self.size += step;
        for u in self.g.neighbors(v) {
            self.deg_in[u] += step;
        }
    }

    /// Steepest ascent of `sign * delta`; ties go to the smallest vertex.
    fn climb(&mut self, sign: Sign) {
        let s = match sign {
            Sign::Positive => 1,
            Sign::Negative => -1,
            Sign::Absolute => unreachable!("absolute is resolved by the caller"),
        };
        loop {
            let mut best: Option<(i128, usize)> = None;
            for v in 0..self.g.n() {
                let gain = s * self.toggle_gain(v);
                if gain > 0 && best.is_none_or(|(bg, _)| gain > bg) {
                    best = Some((gain, v));
                }
            }
            match best {
                Some((_, v)) => self.toggle(v),
                None => return,
            }
        }
    }

    fn set(&self) -> VertexSet {
        VertexSet::from_members(self.g.n(), (0..self.g.n()).filter(|&v| self.inside[v])).expect("in range")
    }
}

/// Lower bound on the discrepancy by steepest-ascent hill climbing over
/// single-vertex additions and removals.
///
/// Restart 0 starts from the whole vertex set; every further restart starts
/// from a uniformly random subset drawn from its own split seed. The best
/// local maximum is returned (ties to the lexicographically smaller set).
/// For `Sign::Positive` the result is always `p`-full: a set with a vertex
/// below the threshold is not a local maximum under removals.
pub fn disc_local_search(g: &Graph, p: &Rational, sign: Sign, seed: u64, restarts: usize) -> Result<DiscWitness> {
    let prob = Prob::from_rational(p)?;
    let signs: &[Sign] = match sign {
        Sign::Absolute => &[Sign::Positive, Sign::Negative],
        Sign::Positive => &[Sign::Positive],
        Sign::Negative => &[Sign::Negative],
    };
    let mut best: Option<(i128, i128, VertexSet)> = None;
    for r in 0..restarts.max(1) {
        let start: Vec<bool> = if r == 0 {
            vec![true; g.n()]
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(split_seed(seed, r as u64));
            (0..g.n()).map(|_| rng.random::<bool>()).collect()
        };
        for &s in signs {
            let mut c = Climber::new(g, prob, start.clone());
            c.climb(s);
            let v = sign.apply(c.scaled);
            let set = c.set();
            let better = match &best {
                None => true,
                Some((bv, _, bs)) => v > *bv || (v == *bv && set.lex_cmp(bs) == Ordering::Less),
            };
            if better {
                best = Some((v, c.scaled, set));
            }
        }
    }
    let (v, raw, witness) = best.expect("at least one restart");
    Ok(DiscWitness {
        value: Rational::new(v, prob.den),
        delta: Rational::new(raw, prob.den),
        witness,
        sign,
        k: None,
    })
}

/// Exact `p`-jumbledness, optionally restricted to `k`-sets.
pub fn jumbledness_exact(g: &Graph, p: &Rational, k: Option<usize>, cap: usize) -> Result<JumbledReport> {
    let prob = Prob::from_rational(p)?;
    if let Some(k) = k {
        if k == 0 || k > g.n() {
            return Err(Error::InvalidInput(format!("k = {k} must lie in 1..={}", g.n())));
        }
    }
    let masks = masks_within_cap(g, cap)?;
    // best ratio kept as (|scaled delta|, size, mask)
    let mut best: Option<(i128, i128, u64)> = None;
    gray_walk(&masks, |set, size, edges| {
        if size == 0 || k.is_some_and(|k| k as u32 != size) {
            return;
        }
        let a = scaled_delta(prob, edges, size as u64).abs();
        let s = size as i128;
        let better = match best {
            None => true,
            Some((ba, bs, bm)) => {
                let (lhs, rhs) = (a * bs, ba * s);
                lhs > rhs || (lhs == rhs && mask_lex_less(set, bm))
            }
        };
        if better {
            best = Some((a, s, set));
        }
    });
    match best {
        Some((a, s, mask)) => Ok(JumbledReport {
            j: Rational::new(a, prob.den * s),
            witness: VertexSet::from_mask(g.n(), mask),
            k,
        }),
        None => Ok(JumbledReport {
            j: Rational::zero(),
            witness: VertexSet::empty(g.n()),
            k,
        }),
    }
}

/// Outcome of checking `f_p >= disc+_p / j_p` and `g_p >= disc_p / j_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscJumbledReport {
    pub disc_plus: Rational,
    pub disc: Rational,
    pub j: Rational,
    pub f_p: usize,
    pub g_p: usize,
    /// `None` when `j_p = 0`, where both inequalities are vacuous.
    pub f_bound: Option<Rational>,
    pub g_bound: Option<Rational>,
}

impl DiscJumbledReport {
    pub fn is_vacuous(&self) -> bool {
        self.f_bound.is_none()
    }
}

/// Checks the discrepancy-over-jumbledness lower bounds for supplied
/// `f_p(G)` and `g_p(G)`. A violated inequality is reported as
/// [`Error::Verification`]: it means the supplied values are wrong.
pub fn verify_disc_jumbledness_bound(
    g: &Graph,
    p: &Rational,
    f_p: usize,
    g_p: usize,
    cap: usize,
) -> Result<DiscJumbledReport> {
    let plus = disc_exact(g, p, Sign::Positive, None, cap)?.value;
    let disc = disc_exact(g, p, Sign::Absolute, None, cap)?.value;
    let j = jumbledness_exact(g, p, None, cap)?.j;
    let mut report = DiscJumbledReport {
        disc_plus: plus,
        disc,
        j: j.clone(),
        f_p,
        g_p,
        f_bound: None,
        g_bound: None,
    };
    if j.is_zero() {
        return Ok(report);
    }
    let fb = &report.disc_plus / &j;
    let gb = &report.disc / &j;
    if Rational::integer(f_p as i128) < fb {
        return Err(Error::Verification(format!("f_p = {f_p} < disc+/j = {fb}")));
    }
    if Rational::integer(g_p as i128) < gb {
        return Err(Error::Verification(format!("g_p = {g_p} < disc/j = {gb}")));
    }
    report.f_bound = Some(fb);
    report.g_bound = Some(gb);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::DEFAULT_EXACT_CAP as CAP;
    use crate::finders::{is_full, FullMode};
    use crate::testing::{arb_graph, arb_prob};
    use proptest::prelude::*;

    fn k3_plus_k1() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn half() -> Rational {
        Rational::new(1, 2)
    }

    #[test]
    fn delta_examples() {
        let g = Graph::cycle(4);
        let p = Rational::new(2, 3);
        for x in [VertexSet::empty(4), VertexSet::from_members(4, [2]).unwrap()] {
            assert_eq!(delta_p(&g, &p, &x).unwrap(), Rational::zero());
        }
        let pair = VertexSet::from_members(4, [0, 1]).unwrap();
        assert_eq!(delta_p(&g, &p, &pair).unwrap(), Rational::new(1, 3));

        let tri = VertexSet::from_members(4, [0, 1, 2]).unwrap();
        assert_eq!(delta_p(&k3_plus_k1(), &half(), &tri).unwrap(), Rational::new(3, 2));
    }

    #[test]
    fn disc_exact_examples() {
        let w = disc_exact(&k3_plus_k1(), &half(), Sign::Positive, None, CAP).unwrap();
        // C(3,2) * (1 - C(3,2)/C(4,2)) = 3 * (1 - 1/2)
        assert_eq!(w.value, Rational::new(3, 2));
        assert_eq!(w.witness.to_vec(), vec![0, 1, 2]);

        for sign in [Sign::Positive, Sign::Negative, Sign::Absolute] {
            let w = disc_exact(&Graph::complete(4), &Rational::one(), sign, None, CAP).unwrap();
            assert_eq!(w.value, Rational::zero());
            // the empty set wins the tie
            assert!(w.witness.is_empty());
        }
        let w = disc_exact(&Graph::empty(5), &Rational::zero(), Sign::Positive, None, CAP).unwrap();
        assert_eq!(w.value, Rational::zero());
    }

    #[test]
    fn disc_exact_refuses_above_cap() {
        let g = Graph::empty(21);
        let err = disc_exact(&g, &half(), Sign::Positive, None, CAP).unwrap_err();
        assert_eq!(err, Error::CapExceeded { n: 21, cap: 20 });
        assert!(disc_exact(&k3_plus_k1(), &half(), Sign::Positive, Some(5), CAP).is_err());
    }

    #[test]
    fn restricted_values_can_be_negative() {
        // every 2-set of the empty graph has delta = -p
        let w = disc_exact(&Graph::empty(4), &half(), Sign::Positive, Some(2), CAP).unwrap();
        assert_eq!(w.value, Rational::new(-1, 2));
        assert_eq!(w.witness.len(), 2);
    }

    #[test]
    fn local_search_examples() {
        for seed in 0..20 {
            let w = disc_local_search(&k3_plus_k1(), &half(), Sign::Positive, seed, 4).unwrap();
            assert_eq!(w.value, Rational::new(3, 2));
        }
        let w = disc_local_search(&Graph::complete(7), &Rational::one(), Sign::Positive, 3, 4).unwrap();
        assert_eq!(w.value, Rational::zero());
    }

    #[test]
    fn jumbledness_examples() {
        let r = jumbledness_exact(&Graph::complete(5), &Rational::one(), None, CAP).unwrap();
        assert_eq!(r.j, Rational::zero());
        let r = jumbledness_exact(&k3_plus_k1(), &half(), None, CAP).unwrap();
        assert_eq!(r.j, Rational::new(1, 2));
        assert_eq!(r.witness.to_vec(), vec![0, 1, 2]);
        let edge = Graph::complete(2);
        assert_eq!(
            jumbledness_exact(&edge, &Rational::one(), None, CAP).unwrap().j,
            Rational::zero()
        );
    }

    #[test]
    fn disc_jumbled_bound_examples() {
        // disc+/j = (3/2)/(1/2) = 3 <= f = 3
        let rep = verify_disc_jumbledness_bound(&k3_plus_k1(), &half(), 3, 3, CAP).unwrap();
        assert_eq!(rep.f_bound, Some(Rational::integer(3)));
        let rep = verify_disc_jumbledness_bound(&Graph::complete(4), &Rational::one(), 4, 4, CAP).unwrap();
        assert!(rep.is_vacuous());
        let err = verify_disc_jumbledness_bound(&k3_plus_k1(), &half(), 2, 3, CAP).unwrap_err();
        assert!(matches!(err, Error::Verification(_)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn positive_witness_is_full(g in arb_graph(0..=10), p in arb_prob()) {
            for p in [g.density(), p] {
                let w = disc_exact(&g, &p, Sign::Positive, None, CAP).unwrap();
                prop_assert!(!w.value.is_negative());
                prop_assert!(is_full(&g, &p, &w.witness, FullMode::Full).unwrap().holds);
            }
        }

        #[test]
        fn complement_duality(g in arb_graph(0..=9), p in arb_prob()) {
            let c = g.complement();
            let q = p.complement();
            let minus = disc_exact(&g, &p, Sign::Negative, None, CAP).unwrap();
            let plus_c = disc_exact(&c, &q, Sign::Positive, None, CAP).unwrap();
            prop_assert_eq!(minus.value, plus_c.value);
            prop_assert_eq!(
                jumbledness_exact(&g, &p, None, CAP).unwrap().j,
                jumbledness_exact(&c, &q, None, CAP).unwrap().j
            );
        }

        #[test]
        fn k_set_disc_is_k_times_jumbledness(g in arb_graph(1..=9), p in arb_prob()) {
            let mut best_j = Rational::zero();
            for k in 1..=g.n() {
                let d = disc_exact(&g, &p, Sign::Absolute, Some(k), CAP).unwrap();
                let j = jumbledness_exact(&g, &p, Some(k), CAP).unwrap();
                prop_assert_eq!(d.value, &Rational::integer(k as i128) * &j.j);
                if j.j > best_j {
                    best_j = j.j;
                }
            }
            prop_assert_eq!(jumbledness_exact(&g, &p, None, CAP).unwrap().j, best_j);
        }

        #[test]
        fn local_search_is_a_lower_bound(g in arb_graph(0..=12), seed in any::<u64>()) {
            let p = g.density();
            for sign in [Sign::Positive, Sign::Negative, Sign::Absolute] {
                let h = disc_local_search(&g, &p, sign, seed, 3).unwrap();
                let e = disc_exact(&g, &p, sign, None, CAP).unwrap();
                prop_assert!(h.value <= e.value);
                prop_assert_eq!(delta_p(&g, &p, &h.witness).unwrap(), h.delta);
            }
        }
    }
}
