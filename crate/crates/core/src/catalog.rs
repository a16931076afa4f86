//! Small-graph catalogues for exhaustive checks.
//!
//! Graphs on up to 10 vertices are encoded as the upper triangle of the
//! adjacency matrix, pair `(i, j)` with `i < j` at bit `j (j - 1) / 2 + i`.

use std::collections::HashSet;

use crate::graph::Graph;

/// Largest order the catalogue functions accept.
pub const MAX_CATALOG_N: usize = 10;

/// Number of isomorphism classes of graphs on `0..=10` vertices.
pub const NONISOMORPHIC_COUNTS: [usize; 11] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];

#[inline]
fn bit(i: usize, j: usize) -> u64 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    1 << (j * (j - 1) / 2 + i)
}

pub fn encode(g: &Graph) -> u64 {
    assert!(
        g.n() <= MAX_CATALOG_N,
        "catalogue encoding supports at most {MAX_CATALOG_N} vertices"
    );
    g.edges().fold(0, |code, (u, v)| code | bit(u, v))
}

pub fn decode(n: usize, code: u64) -> Graph {
    let edges = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| code & bit(i, j) != 0);
    Graph::from_edges(n, edges).expect("valid code")
}

/// Every labelled graph on `n <= 6` vertices.
pub fn all_labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 6, "2^C(n,2) labelled graphs only enumerated up to n = 6");
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |code| decode(n, code))
}

/// Stable colour refinement: start from degrees, split by the sorted
/// colours of neighbours until no class splits. Colours are ranks of the
/// sorted signatures, so they are invariant under relabelling.
fn refined_colours(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let classes_before = {
            let mut c = colour.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        colour = next;
        if distinct.len() == classes_before {
            return colour;
        }
    }
}

/// Bit for pair `(i, j)`, `i < j`, in the search key, where earlier pairs are more significant.
#[inline]
fn key_bit(i: usize, j: usize) -> u64 {
    1 << (63 - (j * (j - 1) / 2 + i))
}

/// Canonical code: the encoding of `G` relabelled by the ordering, among
/// those listing colour classes in increasing colour, whose adjacency
/// pattern read pair by pair is smallest.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CATALOG_N);
    let adj: Vec<u16> = (0..n).map(|v| g.neighbors(v).fold(0u16, |m, u| m | 1 << u)).collect();
    let colour = refined_colours(&adj);
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable();
    let mut search = Search {
        adj: &adj,
        colour: &colour,
        slot_colour: &slot_colour,
        order: Vec::with_capacity(n),
        used: 0,
        best: (u64::MAX, Vec::new()),
    };
    search.run(0);
    let order = search.best.1;
    let mut code = 0;
    for j in 0..n {
        for i in 0..j {
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= bit(i, j);
            }
        }
    }
    code
}

struct Search<'a> {
    adj: &'a [u16],
    colour: &'a [usize],
    slot_colour: &'a [usize],
    order: Vec<usize>,
    used: u16,
    best: (u64, Vec<usize>),
}

impl Search<'_> {
    /// Places vertices position by position. Later pairs only add less
    /// significant bits, so a prefix already above the best key is cut.
    fn run(&mut self, partial: u64) {
        let pos = self.order.len();
        if pos == self.adj.len() {
            if partial < self.best.0 || self.best.1.is_empty() {
                self.best = (partial, self.order.clone());
            }
            return;
        }
        for v in 0..self.adj.len() {
            if self.used >> v & 1 == 1 || self.colour[v] != self.slot_colour[pos] {
                continue;
            }
            let mut key = partial;
            for (i, &u) in self.order.iter().enumerate() {
                if self.adj[v] >> u & 1 == 1 {
                    key |= key_bit(i, pos);
                }
            }
            if key > self.best.0 {
                continue;
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.run(key);
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

/// One representative of every isomorphism class on `n <= 8` vertices,
/// built by adding a vertex with every neighbourhood to each class on
/// `n - 1` vertices. Representatives are the canonical decodings, sorted by code.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "isomorphism classes enumerated only up to n = 8");
    let mut level: Vec<u64> = vec![0];
    for k in 1..=n {
        let mut next: HashSet<u64> = HashSet::new();
        for &code in &level {
            for nb in 0u64..1 << (k - 1) {
                let mut c = code;
                for i in 0..k - 1 {
                    if nb >> i & 1 == 1 {
                        c |= bit(i, k - 1);
                    }
                }
                next.insert(canonical_code(&decode(k, c)));
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    level.into_iter().map(|c| decode(n, c)).collect()
}
