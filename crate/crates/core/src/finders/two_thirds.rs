//! Full subgraphs of order about `(1 - p)^{2/3} n^{2/3} / 4` in graphs of
//! moderate density, by minimum-degree peeling with a relatively
//! `2^{-t}`-full escape hatch.

use num_bigint::BigInt;
use num_traits::Zero;

use super::qfull::one_over_r_within;
use super::{greedy::Peeler, FullMode, FullSubgraphResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{Prob, Rational};
use crate::vertex_set::VertexSet;

/// Checks `n^{-2/3} < p < 1 - n^{-1/7}` as `p^3 n^2 > 1` and `(1 - p)^7 n > 1`.
pub fn two_thirds_precondition(p: &Rational, n: usize) -> Result<()> {
    let prob = Prob::from_rational(p)?;
    let (num, den) = (BigInt::from(prob.num), BigInt::from(prob.den));
    let n_big = BigInt::from(n);
    let lower = num.pow(3) * &n_big * &n_big > den.pow(3);
    let upper = (&den - &num).pow(7) * &n_big > den.pow(7);
    if lower && upper {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "density {p} on {n} vertices is outside n^(-2/3) < p < 1 - n^(-1/7)"
        )))
    }
}

/// Smallest `t >= 1` with `(1 - p)^{-2/3} n^{1/3} <= 2^t`; cubing gives
/// `n <= (1 - p)^2 8^t`, checked as `n den^2 <= (den - num)^2 8^t`. The
/// minimal such `t` also has `2^t` below twice the left-hand side.
/// `None` when `p = 1`.
pub fn two_thirds_scale(p: &Rational, n: usize) -> Option<u32> {
    let prob = Prob::from_rational(p).ok()?;
    if prob.num == prob.den {
        return None;
    }
    let slack2 = BigInt::from(prob.den - prob.num).pow(2);
    let target = BigInt::from(n) * BigInt::from(prob.den).pow(2);
    let mut t = 1u32;
    let mut eight_t = BigInt::from(8);
    while &slack2 * &eight_t < target {
        t += 1;
        eight_t *= 8;
    }
    Some(t)
}

/// `ceil((1 - p)^{2/3} n^{2/3} / 4 - 1)` clamped at 0: the least `s >= 0`
/// with `64 (s + 1)^3 >= (1 - p)^2 n^2`.
pub fn two_thirds_bound(p: &Rational, n: usize) -> Result<BigInt> {
    let prob = Prob::from_rational(p)?;
    let lhs_scale = BigInt::from(64) * BigInt::from(prob.den).pow(2);
    let rhs = BigInt::from(prob.den - prob.num).pow(2) * BigInt::from(n).pow(2);
    let holds = |s: &BigInt| &lhs_scale * (s + 1u32).pow(3) >= rhs;
    let estimate = ((1.0 - prob.num as f64 / prob.den as f64).powf(2.0 / 3.0) * (n as f64).powf(2.0 / 3.0) / 4.0 - 1.0)
        .ceil()
        .max(0.0);
    let mut s = BigInt::from(estimate as u64);
    while !s.is_zero() && holds(&(&s - 1u32)) {
        s -= 1u32;
    }
    while !holds(&s) {
        s += 1u32;
    }
    Ok(s)
}

/// Peels minimum-degree vertices (ties by index) from `G_1 = G`. Stage `i`
/// has `n - i + 1` vertices and needs minimum degree
/// `d_i = ceil(p (n - i))`; it returns as soon as that holds. For
/// `i <= ceil(n/2)`, with `r_i = d_i mod 2^t`, if `r_i <= (1 - p) 2^t` and
/// the minimum degree is at least `d_i - r_i + 1`, a relatively
/// `2^{-t}`-full subgraph of `G_i` is full and is returned instead. Later
/// stages are plain peeling.
pub fn full_two_thirds(g: &Graph) -> Result<FullSubgraphResult> {
    let n = g.n();
    let p = g.density();
    if n <= 2 {
        return FullSubgraphResult::certified(g, &p, FullMode::Full, VertexSet::full(n), None, Vec::new());
    }
    two_thirds_precondition(&p, n)?;
    let prob = Prob::from_rational(&p)?;
    let t = two_thirds_scale(&p, n).expect("p < 1 under the precondition");
    let two_t: i128 = 1i128 << t;
    let guarantee = Some(Rational::from_bigint(two_thirds_bound(&p, n)?));
    let half = n.div_ceil(2);

    let mut peeler = Peeler::new(g, &VertexSet::full(n));
    let mut trace = Vec::new();
    let mut i = 1usize;
    while let Some((dmin, vmin)) = peeler.min() {
        let size = peeler.len() as i128;
        let d_i = prob.ceil_mul(size - 1);
        if dmin as i128 >= d_i {
            break;
        }
        if i <= half {
            let r_i = d_i % two_t;
            if r_i * prob.den <= (prob.den - prob.num) * two_t && dmin as i128 > d_i - r_i {
                let members = peeler.members();
                let set = one_over_r_within(g, &members, two_t as usize)?;
                let vertices = VertexSet::from_members(n, set).expect("in range");
                return FullSubgraphResult::certified(g, &p, FullMode::Full, vertices, guarantee, trace);
            }
        }
        peeler.remove(vmin);
        trace.push(vmin);
        i += 1;
    }
    FullSubgraphResult::certified(g, &p, FullMode::Full, peeler.set(), guarantee, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gen_gnp;
    use proptest::prelude::*;

    #[test]
    fn precondition_edges() {
        // n = 1000: n^{-2/3} = 1/100 exactly, 1 - n^{-1/7} = 0.627
        assert!(two_thirds_precondition(&Rational::new(1, 100), 1000).is_err());
        assert!(two_thirds_precondition(&Rational::new(1, 99), 1000).is_ok());
        assert!(two_thirds_precondition(&Rational::new(3, 5), 1000).is_ok());
        assert!(two_thirds_precondition(&Rational::new(2, 3), 1000).is_err());
        // the range is empty for small n
        assert!(two_thirds_precondition(&Rational::new(9, 32), 8).is_err());
        // (1 - p)^7 n > 1 fails for p = 1 and for p close to 1
        assert!(two_thirds_precondition(&Rational::one(), 100).is_err());
        assert!(two_thirds_precondition(&Rational::new(99, 100), 100).is_err());
    }

    #[test]
    fn scale_brackets_the_target() {
        for (p, n) in [((1, 2), 200usize), ((1, 2), 1000), ((1, 3), 5000), ((9, 10), 77)] {
            let p = Rational::new(p.0, p.1);
            let t = two_thirds_scale(&p, n).unwrap();
            let x = (1.0 - p.to_f64()).powf(-2.0 / 3.0) * (n as f64).cbrt();
            let two_t = 2f64.powi(t as i32);
            assert!(
                x <= two_t * (1.0 + 1e-12) && (t == 1 || two_t < 2.0 * x),
                "p={p} n={n} t={t}"
            );
        }
        // (1/2)^2 8^t >= 200 first at t = 4
        assert_eq!(two_thirds_scale(&Rational::new(1, 2), 200), Some(4));
    }

    #[test]
    fn bound_values() {
        let half = Rational::new(1, 2);
        // (1/4 * 200^2)^{1/3} / 4 - 1 = 21.54/4 - 1 = 4.39
        assert_eq!(two_thirds_bound(&half, 200).unwrap(), BigInt::from(5));
        assert_eq!(two_thirds_bound(&half, 1).unwrap(), BigInt::from(0));
        // (1/16) 256^2 = 16^3, so the bound is exactly 16/4 - 1
        assert_eq!(two_thirds_bound(&Rational::new(3, 4), 256).unwrap(), BigInt::from(3));
    }

    #[test]
    fn regular_graph_is_already_full() {
        // circulant with offsets 1..=5: 10-regular, p = 10/29
        let edges = (0..30).flat_map(|v| (1..=5).map(move |k| (v, (v + k) % 30)));
        let g = Graph::from_edges_dedup(30, edges).unwrap();
        let r = full_two_thirds(&g).unwrap();
        assert_eq!(r.size, 30);
        assert!(r.trace.is_empty());
    }

    #[test]
    fn refuses_sparse_input() {
        assert!(matches!(
            full_two_thirds(&Graph::cycle(50)),
            Err(Error::Precondition(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn witness_meets_lower_bound(n in 60usize..=400, k in 1i128..=9, seed in any::<u64>()) {
            let g = gen_gnp(n, &Rational::new(k, 20), seed).unwrap();
            prop_assume!(two_thirds_precondition(&g.density(), n).is_ok());
            let r = full_two_thirds(&g).unwrap();
            prop_assert!(Rational::integer(r.size as i128) >= r.guarantee.clone().unwrap());
        }
    }
}
