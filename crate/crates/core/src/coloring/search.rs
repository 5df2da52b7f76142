//! Bitset graphs and the backtracking k-colorability core shared by the
//! vertex and edge engines.

use crate::graph::Graph;

/// Adjacency as one `u64` row per vertex; at most 64 vertices.
#[derive(Debug, Clone)]
pub(crate) struct BitGraph {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl BitGraph {
    pub fn from_graph(g: &Graph) -> Self {
        debug_assert!(g.order() <= 64);
        let mut adj = vec![0u64; g.order()];
        for e in g.edges() {
            adj[e.u()] |= 1 << e.v();
            adj[e.v()] |= 1 << e.u();
        }
        BitGraph { n: g.order(), adj }
    }

    /// Line graph: vertex `i` stands for `g.edges()[i]`.
    pub fn line_graph(g: &Graph) -> Self {
        let edges = g.edges();
        debug_assert!(edges.len() <= 64);
        let mut at = vec![0u64; g.order()];
        for (i, e) in edges.iter().enumerate() {
            at[e.u()] |= 1 << i;
            at[e.v()] |= 1 << i;
        }
        let adj = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (at[e.u()] | at[e.v()]) & !(1 << i))
            .collect();
        BitGraph {
            n: edges.len(),
            adj,
        }
    }
}

/// Finds a proper coloring with colors `1..=k`, or proves none exists.
///
/// DSatur branching: the next vertex is the uncolored one with the most
/// distinct neighbor colors (ties: higher degree, then lower index), and a
/// vertex may only open the next unused color, which removes palette
/// symmetry.
pub(crate) fn k_color(g: &BitGraph, k: usize) -> Option<Vec<u32>> {
    let n = g.n;
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    if k >= n {
        return Some((1..=n as u32).collect());
    }
    let mut st = Dsatur {
        g,
        k,
        colors: vec![0; n],
        degree: g.adj.iter().map(|a| a.count_ones()).collect(),
    };
    if st.dfs(n, 0) {
        Some(st.colors)
    } else {
        None
    }
}

struct Dsatur<'a> {
    g: &'a BitGraph,
    k: usize,
    colors: Vec<u32>,
    degree: Vec<u32>,
}

impl Dsatur<'_> {
    fn forbidden(&self, v: usize) -> u64 {
        let mut mask = 0u64;
        let mut nb = self.g.adj[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let c = self.colors[w];
            if c != 0 {
                mask |= 1 << (c - 1);
            }
        }
        mask
    }

    fn dfs(&mut self, uncolored: usize, used: usize) -> bool {
        if uncolored == 0 {
            return true;
        }
        let mut pick = usize::MAX;
        let mut pick_key = (0u32, 0u32);
        let mut pick_forbidden = 0u64;
        for v in 0..self.g.n {
            if self.colors[v] != 0 {
                continue;
            }
            let forbidden = self.forbidden(v);
            let key = (forbidden.count_ones(), self.degree[v]);
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
                pick_forbidden = forbidden;
            }
        }
        let limit = self.k.min(used + 1);
        for c in 0..limit {
            if pick_forbidden >> c & 1 == 1 {
                continue;
            }
            self.colors[pick] = c as u32 + 1;
            if self.dfs(uncolored - 1, used.max(c + 1)) {
                return true;
            }
        }
        self.colors[pick] = 0;
        false
    }
}
