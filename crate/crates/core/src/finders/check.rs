use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{Prob, Rational};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FullMode {
    /// minimum degree at least `p (m - 1)`
    Full,
    /// maximum degree at most `p (m - 1)`
    Cofull,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FullCheck {
    pub holds: bool,
    /// Smallest vertex breaking the condition, when it fails.
    pub violator: Option<usize>,
}

impl FullCheck {
    fn from_violator(violator: Option<usize>) -> Self {
        FullCheck {
            holds: violator.is_none(),
            violator,
        }
    }
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

/// Whether `G[S]` is `p`-full (or `p`-co-full). The empty set passes.
pub fn is_full(g: &Graph, p: &Rational, s: &VertexSet, mode: FullMode) -> Result<FullCheck> {
    check_universe(g, s)?;
    let p = Prob::from_rational(p)?;
    let k = s.len().saturating_sub(1) as i128;
    let violator = s.iter().find(|&v| {
        let d = g.degree_into(v, s) as i128;
        match mode {
            FullMode::Full => !p.at_least(d, k),
            FullMode::Cofull => !p.at_most(d, k),
        }
    });
    Ok(FullCheck::from_violator(violator))
}

/// Whether `d_S(v) >= q d_G(v)` for every `v` in `S`.
pub fn is_relatively_full(g: &Graph, q: &Rational, s: &VertexSet) -> Result<FullCheck> {
    check_universe(g, s)?;
    let q = Prob::from_rational(q)?;
    let violator = s
        .iter()
        .find(|&v| !q.at_least(g.degree_into(v, s) as i128, g.degree(v) as i128));
    Ok(FullCheck::from_violator(violator))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_examples() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let half = Rational::new(1, 2);
        let tri = VertexSet::from_members(4, [0, 1, 2]).unwrap();
        assert!(is_full(&g, &half, &tri, FullMode::Full).unwrap().holds);
        let all = VertexSet::full(4);
        assert_eq!(
            is_full(&g, &half, &all, FullMode::Full).unwrap(),
            FullCheck {
                holds: false,
                violator: Some(3)
            }
        );
        let c5 = Graph::cycle(5);
        assert!(is_full(&c5, &half, &VertexSet::full(5), FullMode::Full).unwrap().holds);
        assert!(is_full(&c5, &half, &VertexSet::empty(5), FullMode::Full).unwrap().holds);
        // the triangle is not co-full at 1/2, the isolated vertex alone is
        assert!(!is_full(&g, &half, &tri, FullMode::Cofull).unwrap().holds);
        assert!(is_full(&g, &half, &all, FullMode::Cofull).unwrap().violator == Some(0));
    }

    #[test]
    fn relative_examples() {
        let k33 = Graph::complete_bipartite(3, 3);
        let half = Rational::new(1, 2);
        let three = VertexSet::from_members(6, [0, 1, 3]).unwrap();
        assert!(!is_relatively_full(&k33, &half, &three).unwrap().holds);
        let four = VertexSet::from_members(6, [0, 1, 3, 4]).unwrap();
        assert!(is_relatively_full(&k33, &half, &four).unwrap().holds);
    }
}
