//! Shared inputs for the benchmarks.

use fullsub::{gen_gnp, Graph, Rational};

/// `G(n, 1/2)` with a fixed seed.
pub fn half_random(n: usize) -> Graph {
    gen_gnp(n, &Rational::new(1, 2), 0x5eed).expect("valid parameters")
}
