//! Immutable simple undirected graphs and the edge-list text format.
//!
//! Vertices are `0..n`. The text format is a header line `n m` followed by
//! `m` lines `u v`; the writer emits pairs with `u < v` in sorted order, so
//! writing is canonical and `write(read(x)) == x` for canonical input.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rational::{choose2, Rational};
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    m: usize,
    /// Sorted neighbour lists.
    adj: Vec<Vec<u32>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n as u32).filter(|&u| u as usize != v).collect())
            .collect();
        Graph {
            n,
            m: choose2(n) as usize,
            adj,
        }
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("valid bipartite graph")
    }

    /// Strict constructor: rejects self-loops, duplicates and out-of-range ends.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (u, v) in edges {
            check_pair(n, u, v)?;
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        let mut m = 0;
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!("duplicate edge at vertex {v}")));
            }
            m += list.len();
        }
        Ok(Graph { n, m: m / 2, adj })
    }

    /// Lenient constructor for generators: duplicate pairs are coalesced.
    pub fn from_edges_dedup<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (u, v) in edges {
            check_pair(n, u, v)?;
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { n, m: m / 2, adj })
    }

    /// Graph on `n <= 64` vertices from neighbourhood bitmasks; must be symmetric and loopless.
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        assert!(n <= 64);
        let mut edges = Vec::new();
        for (u, &mu) in masks.iter().enumerate() {
            debug_assert_eq!(mu >> u & 1, 0, "self-loop at {u}");
            let mut rest = if u + 1 >= 64 { 0 } else { mu >> (u + 1) << (u + 1) };
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                debug_assert!(masks[v] >> u & 1 == 1, "asymmetric masks");
                edges.push((u, v));
                rest &= rest - 1;
            }
        }
        Graph::from_edges(n, edges).expect("masks describe a simple graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, `e(G)`.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&u| u as usize)
    }

    pub fn neighbor_slice(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn is_regular(&self) -> bool {
        self.adj.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// `d_S(v)`: neighbours of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.neighbors(v).filter(|&u| set.contains(u)).count()
    }

    /// `e(S)`: edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.degree_into(v, set)).sum::<usize>() / 2
    }

    /// Neighbourhood bitmasks; `None` when `n > 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &u| m | (1 << u)))
                .collect(),
        )
    }

    /// `e(G) / C(n, 2)`; zero by convention when `n <= 1`.
    pub fn density(&self) -> Rational {
        if self.n <= 1 {
            return Rational::zero();
        }
        Rational::new(self.m as i128, choose2(self.n) as i128)
    }

    /// `G[S]` relabelled to `0..|S|` in increasing order of original label.
    /// The returned map sends new labels to original ones.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if set.universe() != self.n {
            return Err(Error::InvalidInput(format!(
                "vertex set over {} vertices used with a graph on {}",
                set.universe(),
                self.n
            )));
        }
        let map: Vec<usize> = set.iter().collect();
        Ok((self.induced_by_list(&map), map))
    }

    /// `G[list]` with vertex `i` of the result being `list[i]`. `list` must be
    /// free of duplicates and in range.
    pub fn induced_by_list(&self, list: &[usize]) -> Graph {
        let mut index = vec![u32::MAX; self.n];
        for (i, &v) in list.iter().enumerate() {
            index[v] = i as u32;
        }
        let mut m = 0;
        let adj: Vec<Vec<u32>> = list
            .iter()
            .map(|&v| {
                let mut l: Vec<u32> = self.adj[v]
                    .iter()
                    .map(|&u| index[u as usize])
                    .filter(|&i| i != u32::MAX)
                    .collect();
                l.sort_unstable();
                m += l.len();
                l
            })
            .collect();
        Graph {
            n: list.len(),
            m: m / 2,
            adj,
        }
    }

    /// `G^c`: a pair is an edge of exactly one of `G` and its complement.
    pub fn complement(&self) -> Graph {
        let adj: Vec<Vec<u32>> = (0..self.n)
            .map(|v| {
                let own = &self.adj[v];
                let mut it = own.iter().peekable();
                let mut out = Vec::with_capacity(self.n - 1 - own.len());
                for u in 0..self.n as u32 {
                    if it.peek() == Some(&&u) {
                        it.next();
                    } else if u as usize != v {
                        out.push(u);
                    }
                }
                out
            })
            .collect();
        Graph {
            n: self.n,
            m: choose2(self.n) as usize - self.m,
            adj,
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n as u32;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&u| u + shift).collect()));
        Graph {
            n: self.n + other.n,
            m: self.m + other.m,
            adj,
        }
    }

    pub fn read_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line \"n m\"".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut count = 0usize;
        for (ln, line) in lines {
            let (u, v) = parse_pair(ln, line)?;
            if u == v {
                return Err(Error::Parse {
                    line: ln,
                    message: format!("self-loop at vertex {u}"),
                });
            }
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line: ln,
                    message: format!("vertex out of range: {u} {v} with n = {n}"),
                });
            }
            if adj[u].contains(&(v as u32)) {
                return Err(Error::Parse {
                    line: ln,
                    message: format!("duplicate edge {u} {v}"),
                });
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
            count += 1;
        }
        if count != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header declares {m} edges but {count} were listed"),
            });
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        Ok(Graph { n, m, adj })
    }

    pub fn write_edge_list(&self) -> String {
        let mut out = String::with_capacity(12 * (self.m + 1));
        let _ = writeln!(out, "{} {}", self.n, self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    if u == v {
        return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
    }
    if u >= n || v >= n {
        return Err(Error::InvalidInput(format!("edge {u} {v} out of range for n = {n}")));
    }
    Ok(())
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("expected two integers, got {text:?}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a vertex index: {tok:?}"),
        })
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            message: format!("trailing tokens in {text:?}"),
        });
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k3_plus_k1() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn density_examples() {
        assert_eq!(Graph::complete(4).density(), Rational::one());
        assert_eq!(Graph::cycle(4).density(), Rational::new(2, 3));
        assert_eq!(k3_plus_k1().density(), Rational::new(1, 2));
        assert_eq!(Graph::empty(1).density(), Rational::zero());
        assert_eq!(Graph::empty(0).density(), Rational::zero());
    }

    #[test]
    fn induced_examples() {
        let s = VertexSet::from_members(4, [0, 2, 3]).unwrap();
        let (h, map) = Graph::complete(4).induced_subgraph(&s).unwrap();
        assert_eq!(h, Graph::complete(3));
        assert_eq!(map, vec![0, 2, 3]);

        let c5 = Graph::cycle(5);
        let adj = VertexSet::from_members(5, [1, 2]).unwrap();
        assert_eq!(c5.induced_subgraph(&adj).unwrap().0.m(), 1);
        let non = VertexSet::from_members(5, [1, 3]).unwrap();
        assert_eq!(c5.induced_subgraph(&non).unwrap().0, Graph::empty(2));

        let wrong = VertexSet::empty(6);
        assert!(c5.induced_subgraph(&wrong).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(5).complement(), Graph::empty(5));
        assert_eq!(Graph::empty(5).complement(), Graph::complete(5));
        let c = Graph::cycle(5).complement();
        assert_eq!(c.m(), 5);
        assert!(c.is_regular() && c.degree(0) == 2);
    }

    #[test]
    fn edge_list_read() {
        let g = Graph::read_edge_list("3 3\n0 1\n0 2\n1 2").unwrap();
        assert_eq!(g, Graph::complete(3));
        let err = Graph::read_edge_list("2 1\n1 1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, ref message } if message.contains("self-loop")));
        assert!(matches!(
            Graph::read_edge_list("2 1\n0 2"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::read_edge_list("3 2\n0 1\n1 0"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            Graph::read_edge_list("3 2\n0 1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Graph::read_edge_list("3 1\n0 x"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(Graph::read_edge_list("").is_err());
    }

    #[test]
    fn edge_list_canonical_round_trip() {
        let text = "5 4\n0 1\n0 4\n1 2\n3 4\n";
        let g = Graph::read_edge_list(text).unwrap();
        assert_eq!(g.write_edge_list(), text);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn structural_invariants(g in arb_graph(12), mask in any::<u64>()) {
            let n = g.n();
            // adjacency symmetric, no loops, degree sum = 2m
            let mut sum = 0;
            for v in 0..n {
                sum += g.degree(v);
                prop_assert!(!g.has_edge(v, v));
                for u in g.neighbors(v) {
                    prop_assert!(g.has_edge(u, v));
                }
            }
            prop_assert_eq!(sum, 2 * g.m());

            let mask = if n == 0 { 0 } else { mask & (u64::MAX >> (64 - n)) };
            let s = VertexSet::from_mask(n, mask);
            let (h, map) = g.induced_subgraph(&s).unwrap();
            let direct = g.edges().filter(|&(u, v)| s.contains(u) && s.contains(v)).count();
            prop_assert_eq!(h.m(), direct);
            for (i, &v) in map.iter().enumerate() {
                let outside = g.neighbors(v).filter(|&u| !s.contains(u)).count();
                prop_assert_eq!(g.degree(v), h.degree(i) + outside);
            }

            let c = g.complement();
            prop_assert_eq!(c.complement(), g.clone());
            for u in 0..n {
                for v in u + 1..n {
                    prop_assert!(g.has_edge(u, v) != c.has_edge(u, v));
                }
            }
            if n >= 2 {
                prop_assert_eq!(g.density() + c.density(), Rational::one());
            }

            let text = g.write_edge_list();
            let back = Graph::read_edge_list(&text).unwrap();
            prop_assert_eq!(back.write_edge_list(), text);
            prop_assert_eq!(back, g);
        }
    }
}
