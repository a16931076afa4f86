//! Proptest strategies shared by the unit tests.

use proptest::prelude::*;

use crate::constructions::gen_gnp;
use crate::graph::Graph;
use crate::rational::Rational;

/// `G(n, k/10)` for `n` in the range and `k` in `0..=10`.
pub(crate) fn arb_graph(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    (n, 0i128..=10, any::<u64>()).prop_map(|(n, k, seed)| gen_gnp(n, &Rational::new(k, 10), seed).unwrap())
}

/// A probability with denominator at most 7.
pub(crate) fn arb_prob() -> impl Strategy<Value = Rational> {
    (1i128..=7).prop_flat_map(|b| (0..=b).prop_map(move |a| Rational::new(a, b)))
}
