//! Optimization kernels behind the removal parameters, and the classical
//! matching / vertex cover oracles used to cross-check them.

use std::collections::HashMap;

use itertools::Itertools;

use super::{require_positive, BitGraph, EdgeColoring, VertexColoring};
use crate::error::Result;
use crate::graph::{Edge, Graph};
use crate::limits::Limits;

struct MonoSearch<'a> {
    adj: &'a [u64],
    k: usize,
    /// Vertices assigned to each color so far.
    class: Vec<u64>,
    colors: Vec<u32>,
    best: u64,
    best_colors: Option<Vec<u32>>,
}

impl MonoSearch<'_> {
    fn lower_bound(&self, v: usize, used: usize) -> u64 {
        if used < self.k {
            // an untouched color costs nothing for any remaining vertex
            return 0;
        }
        (v..self.adj.len())
            .map(|w| {
                self.class
                    .iter()
                    .map(|c| (self.adj[w] & c).count_ones() as u64)
                    .min()
                    .unwrap_or(0)
            })
            .sum()
    }

    fn dfs(&mut self, v: usize, cost: u64, used: usize) {
        if v == self.adj.len() {
            if cost < self.best {
                self.best = cost;
                self.best_colors = Some(self.colors.clone());
            }
            return;
        }
        if cost + self.lower_bound(v, used) >= self.best {
            return;
        }
        let limit = self.k.min(used + 1);
        for c in 0..limit {
            let add = (self.adj[v] & self.class[c]).count_ones() as u64;
            if cost + add >= self.best {
                continue;
            }
            self.class[c] |= 1 << v;
            self.colors[v] = c as u32 + 1;
            self.dfs(v + 1, cost + add, used.max(c + 1));
            self.class[c] &= !(1 << v);
            if self.best == 0 {
                return;
            }
        }
    }
}

/// Minimum monochromatic edges over all `k`-colorings, restricted to values
/// strictly below `cutoff`. Vertices are colored in index order, colors in
/// ascending order, and a vertex may only open the next unused color (so
/// vertex 0 always gets color 1); the first optimum in that order wins.
pub(crate) fn min_mono_below(g: &BitGraph, k: usize, cutoff: u64) -> Option<(u64, Vec<u32>)> {
    if g.n == 0 {
        return (cutoff > 0).then(|| (0, Vec::new()));
    }
    let mut s = MonoSearch {
        adj: &g.adj,
        k: k.min(g.n),
        class: vec![0; k.min(g.n)],
        colors: vec![0; g.n],
        best: cutoff,
        best_colors: None,
    };
    s.dfs(0, 0, 0);
    let best = s.best;
    s.best_colors.map(|c| (best, c))
}

/// Fewest monochromatic edges over all (not necessarily proper) colorings
/// with `k` colors, with the first optimal coloring found.
pub fn min_monochromatic_edges(
    g: &Graph,
    k: usize,
    limits: &Limits,
) -> Result<(u64, VertexColoring)> {
    require_positive(k)?;
    limits.check_order(g)?;
    let (count, colors) = min_mono_below(&BitGraph::from_graph(g), k, u64::MAX)
        .expect("an unbounded search always finds a coloring");
    Ok((
        count,
        VertexColoring {
            colors,
            palette: k as u32,
        },
    ))
}

struct KecSearch<'a> {
    edges: &'a [(usize, usize)],
    k: usize,
    /// Colors present at each vertex, bit `c` for color `c + 1`.
    at_vertex: Vec<u64>,
    /// Vertices touched by each color.
    in_color: Vec<u64>,
    /// Undecided edges incident to each vertex.
    remaining: Vec<u32>,
    labels: Vec<u32>,
    best: usize,
    best_labels: Option<Vec<u32>>,
    /// Removal count no solution can beat; reaching it ends the search.
    floor: usize,
}

impl KecSearch<'_> {
    /// Lower bound on removals among the undecided edges `t..`.
    fn future_removals(&self, t: usize) -> usize {
        let left = self.edges.len() - t;
        let mut degree_cap = 0usize;
        let mut active = 0u64;
        for (v, &r) in self.remaining.iter().enumerate() {
            if r > 0 {
                active |= 1 << v;
                let free = self.k - self.at_vertex[v].count_ones() as usize;
                degree_cap += (r as usize).min(free);
            }
        }
        let matching_cap: usize = self
            .in_color
            .iter()
            .map(|&c| (active & !c).count_ones() as usize / 2)
            .sum();
        left - left.min(degree_cap / 2).min(matching_cap)
    }

    fn dfs(&mut self, t: usize, removed: usize, used: usize) {
        if t == self.edges.len() {
            if removed < self.best {
                self.best = removed;
                self.best_labels = Some(self.labels.clone());
            }
            return;
        }
        if removed + self.future_removals(t) >= self.best {
            return;
        }
        let (u, v) = self.edges[t];
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
        let taken = self.at_vertex[u] | self.at_vertex[v];
        for c in 0..self.k.min(used + 1) {
            if taken >> c & 1 == 1 {
                continue;
            }
            self.at_vertex[u] |= 1 << c;
            self.at_vertex[v] |= 1 << c;
            self.in_color[c] |= 1 << u | 1 << v;
            self.labels[t] = c as u32 + 1;
            self.dfs(t + 1, removed, used.max(c + 1));
            self.at_vertex[u] &= !(1 << c);
            self.at_vertex[v] &= !(1 << c);
            self.in_color[c] &= !(1 << u | 1 << v);
            if self.best <= self.floor {
                break;
            }
        }
        if self.best > self.floor && removed + 1 < self.best {
            self.labels[t] = 0;
            self.dfs(t + 1, removed + 1, used);
        }
        self.remaining[u] += 1;
        self.remaining[v] += 1;
    }
}

/// Largest `k`-edge-colorable spanning subgraph, restricted to removal
/// counts strictly below `cutoff`. Returns the removal count and one label
/// per edge in canonical order: `0` for removed, otherwise a color. Edges
/// try colors (ascending, opening at most one new color) before removal.
pub(crate) fn max_kec_below(g: &Graph, k: usize, cutoff: usize) -> Option<(usize, Vec<u32>)> {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u(), e.v())).collect();
    let m = edges.len();
    if m == 0 {
        return (cutoff > 0).then(|| (0, Vec::new()));
    }
    let k = k.min(m);
    let mut remaining = vec![0u32; g.order()];
    for &(u, v) in &edges {
        remaining[u] += 1;
        remaining[v] += 1;
    }
    let mut s = KecSearch {
        edges: &edges,
        k,
        at_vertex: vec![0; g.order()],
        in_color: vec![0; k],
        remaining,
        labels: vec![0; m],
        best: cutoff,
        best_labels: None,
        floor: 0,
    };
    s.floor = s.future_removals(0);
    s.dfs(0, 0, 0);
    let best = s.best;
    s.best_labels.map(|l| (best, l))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeKernelResult {
    pub kept: usize,
    pub removed: Vec<Edge>,
    /// Proper coloring of the kept edges.
    pub coloring: EdgeColoring,
}

impl EdgeKernelResult {
    pub(crate) fn from_labels(g: &Graph, k: usize, labels: &[u32]) -> Self {
        let mut removed = Vec::new();
        let mut assignments = Vec::new();
        for (&e, &l) in g.edges().iter().zip(labels) {
            if l == 0 {
                removed.push(e);
            } else {
                assignments.push((e, l));
            }
        }
        EdgeKernelResult {
            kept: assignments.len(),
            removed,
            coloring: EdgeColoring {
                assignments,
                palette: k as u32,
            },
        }
    }
}

/// Most edges of a spanning subgraph that is `k`-edge-colorable, i.e. the
/// largest union of `k` disjoint matchings.
pub fn max_k_edge_colorable_subgraph(
    g: &Graph,
    k: usize,
    limits: &Limits,
) -> Result<EdgeKernelResult> {
    require_positive(k)?;
    limits.check_size(g)?;
    let (_, labels) = max_kec_below(g, k, usize::MAX).expect("unbounded search finds a subgraph");
    Ok(EdgeKernelResult::from_labels(g, k, &labels))
}

fn matching_size(adj: &[u64], alive: u64, memo: &mut HashMap<u64, u32>) -> u32 {
    if let Some(&v) = memo.get(&alive) {
        return v;
    }
    let mut rest = alive;
    let mut result = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let nb = adj[v] & alive;
        if nb == 0 {
            continue;
        }
        let without = alive & !(1 << v);
        result = matching_size(adj, without, memo);
        let mut ws = nb;
        while ws != 0 {
            let w = ws.trailing_zeros() as usize;
            ws &= ws - 1;
            result = result.max(1 + matching_size(adj, without & !(1 << w), memo));
        }
        break;
    }
    memo.insert(alive, result);
    result
}

/// A maximum-cardinality matching. Exact: memoized branching on the lowest
/// vertex that still has a neighbor (left unmatched, or matched to one of
/// its neighbors).
pub fn maximum_matching(g: &Graph, limits: &Limits) -> Result<Vec<Edge>> {
    limits.check_size(g)?;
    let bg = BitGraph::from_graph(g);
    let mut memo = HashMap::new();
    let mut alive = if g.order() == 64 {
        u64::MAX
    } else {
        (1u64 << g.order()) - 1
    };
    let mut target = matching_size(&bg.adj, alive, &mut memo);
    let mut matching = Vec::new();
    while target > 0 {
        let v = (0..g.order())
            .find(|&v| alive >> v & 1 == 1 && bg.adj[v] & alive != 0)
            .expect("a positive matching needs an edge");
        let without = alive & !(1 << v);
        if matching_size(&bg.adj, without, &mut memo) == target {
            alive = without;
            continue;
        }
        let w = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| {
                alive >> w & 1 == 1
                    && 1 + matching_size(&bg.adj, without & !(1 << w), &mut memo) == target
            })
            .expect("some branch attains the optimum");
        matching.push(Edge::new(v, w));
        alive = without & !(1 << w);
        target -= 1;
    }
    Ok(matching)
}

/// A minimum vertex cover: vertex subsets in increasing size, lexicographic
/// within a size; the first cover found.
pub fn minimum_vertex_cover(g: &Graph, limits: &Limits) -> Result<Vec<usize>> {
    limits.check_order(g)?;
    let edges: Vec<u64> = g.edges().iter().map(|e| 1 << e.u() | 1 << e.v()).collect();
    for size in 0..=g.order() {
        for subset in (0..g.order()).combinations(size) {
            let mask = subset.iter().fold(0u64, |m, &v| m | 1 << v);
            if edges.iter().all(|&e| e & mask != 0) {
                return Ok(subset);
            }
        }
    }
    unreachable!("the full vertex set covers every edge")
}
