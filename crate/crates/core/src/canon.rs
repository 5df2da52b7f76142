//! Canonical labeling for small graphs.
//!
//! The canonical form of `g` is the relabeling whose sorted edge list is
//! lexicographically least. Equivalently it maximizes the upper-triangle
//! adjacency bits read row by row, `(0,1), (0,2), .., (0,n-1), (1,2), ..`,
//! most significant first. The search fixes one vertex per position and
//! keeps an ordered partition of the still-unplaced vertices: a row is
//! maximized by putting, inside every cell, the neighbors of the newly
//! placed vertex first, so only the vertex choice per position branches.
//! Candidates whose rows are not maximal are discarded immediately and
//! twins inside a cell (swapping them is an automorphism) are explored once.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Isomorphism and canonical-form cap used unless the caller supplies one.
pub const DEFAULT_CANON_CAP: usize = 10;
/// Largest order whose code fits the 128-bit packed representation.
pub const MAX_CANON_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    /// Packed adjacency bits of the canonical relabeling.
    pub code: u128,
    /// The canonical representative.
    pub graph: Graph,
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_CANON_ORDER);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "order for canonical labeling",
            value: n,
            cap,
        });
    }
    Ok(())
}

/// Packed code of `g` under its own labeling.
pub fn identity_code(g: &Graph) -> u128 {
    let n = g.order();
    let mut code = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.has_edge(i, j) as u128;
        }
    }
    code
}

struct Search<'a> {
    adj: &'a [u32],
    n: usize,
    total_bits: u32,
    best: Option<u128>,
    best_order: Vec<usize>,
    /// When set, stop as soon as some branch beats `best`.
    stop_on_improvement: bool,
    improved: bool,
}

impl Search<'_> {
    fn cmp_prefix(&self, prefix: u128, bits: u32) -> std::cmp::Ordering {
        match self.best {
            None => std::cmp::Ordering::Greater,
            Some(best) => {
                let shift = self.total_bits - bits;
                let best_prefix = if shift >= 128 { 0 } else { best >> shift };
                prefix.cmp(&best_prefix)
            }
        }
    }

    /// Row bits for placing `v` ahead of `cells`, and the refined cells.
    fn place(&self, v: usize, cells: &[u32]) -> (u128, u32, Vec<u32>) {
        let nb = self.adj[v];
        let mut row = 0u128;
        let mut len = 0u32;
        let mut next = Vec::with_capacity(cells.len() + 1);
        for (idx, &cell) in cells.iter().enumerate() {
            let cell = if idx == 0 { cell & !(1 << v) } else { cell };
            if cell == 0 {
                continue;
            }
            let inside = cell & nb;
            let outside = cell & !nb;
            let a = inside.count_ones();
            let b = outside.count_ones();
            row = (row << a | ((1u128 << a) - 1)) << b;
            len += a + b;
            if inside != 0 {
                next.push(inside);
            }
            if outside != 0 {
                next.push(outside);
            }
        }
        (row, len, next)
    }

    fn run(&mut self, cells: Vec<u32>, prefix: u128, bits: u32, order: &mut Vec<usize>) {
        if self.improved {
            return;
        }
        if order.len() == self.n {
            if self.cmp_prefix(prefix, bits).is_gt() {
                if self.stop_on_improvement {
                    self.improved = true;
                    return;
                }
                self.best = Some(prefix);
                self.best_order = order.clone();
            }
            return;
        }
        let first = cells[0];
        let mut options: Vec<(usize, u128, u32, Vec<u32>)> = Vec::new();
        let mut top: Option<u128> = None;
        let mut tried: u32 = 0;
        let mut rest = first;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // skip v if it is a twin of a candidate already considered
            let twin = {
                let mut t = tried;
                let mut found = false;
                while t != 0 {
                    let u = t.trailing_zeros() as usize;
                    t &= t - 1;
                    if self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u) {
                        found = true;
                        break;
                    }
                }
                found
            };
            tried |= 1 << v;
            if twin {
                continue;
            }
            let (row, len, next) = self.place(v, &cells);
            match top {
                Some(t) if row < t => continue,
                Some(t) if row > t => options.clear(),
                _ => {}
            }
            top = Some(row);
            options.push((v, row, len, next));
        }
        for (v, row, len, next) in options {
            let p = prefix << len | row;
            let b = bits + len;
            match self.cmp_prefix(p, b) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Greater if self.stop_on_improvement => {
                    self.improved = true;
                    return;
                }
                _ => {}
            }
            order.push(v);
            if next.is_empty() {
                self.run(vec![0], p, b, order);
            } else {
                self.run(next, p, b, order);
            }
            order.pop();
            if self.improved {
                return;
            }
        }
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn total_bits(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<Canonical> {
    let n = g.order();
    check_cap(n, cap)?;
    if n == 0 {
        return Ok(Canonical {
            code: 0,
            graph: g.clone(),
            order: Vec::new(),
        });
    }
    let adj = masks(g);
    let mut search = Search {
        adj: &adj,
        n,
        total_bits: total_bits(n),
        best: None,
        best_order: Vec::new(),
        stop_on_improvement: false,
        improved: false,
    };
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    search.run(vec![all], 0, 0, &mut Vec::with_capacity(n));
    let order = search.best_order;
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .map(|e| Edge::new(position[e.u()], position[e.v()]))
        .collect();
    edges.sort_unstable();
    Ok(Canonical {
        code: search.best.unwrap_or(0),
        graph: Graph::from_sorted(n, edges),
        order,
    })
}

pub fn canonical_form(g: &Graph) -> Result<Canonical> {
    canonical_form_with_cap(g, DEFAULT_CANON_CAP)
}

/// True iff `g` is its own canonical form, i.e. no relabeling yields a
/// lexicographically smaller edge list. Exits at the first improving branch.
pub fn is_canonical_with_cap(g: &Graph, cap: usize) -> Result<bool> {
    let n = g.order();
    check_cap(n, cap)?;
    if n <= 1 {
        return Ok(true);
    }
    let adj = masks(g);
    let mut search = Search {
        adj: &adj,
        n,
        total_bits: total_bits(n),
        best: Some(identity_code(g)),
        best_order: Vec::new(),
        stop_on_improvement: true,
        improved: false,
    };
    search.run(vec![(1u32 << n) - 1], 0, 0, &mut Vec::with_capacity(n));
    Ok(!search.improved)
}

pub fn is_canonical(g: &Graph) -> Result<bool> {
    is_canonical_with_cap(g, DEFAULT_CANON_CAP)
}

pub fn is_isomorphic_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<bool> {
    check_cap(g.order(), cap)?;
    check_cap(h.order(), cap)?;
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(false);
    }
    Ok(canonical_form_with_cap(g, cap)?.code == canonical_form_with_cap(h, cap)?.code)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_with_cap(g, h, DEFAULT_CANON_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};
    use itertools::Itertools;

    /// Reference: minimum sorted edge list over every permutation.
    fn brute_canonical(g: &Graph) -> Vec<Edge> {
        let n = g.order();
        (0..n)
            .permutations(n)
            .map(|p| {
                let mut e: Vec<Edge> = g
                    .edges()
                    .iter()
                    .map(|e| Edge::new(p[e.u()], p[e.v()]))
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap_or_default()
    }

    fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
        g.order() == h.order()
            && (0..g.order())
                .permutations(g.order())
                .any(|p| g.relabel(&p).unwrap() == *h)
    }

    #[test]
    fn isomorphism_examples() {
        let p4 = path_graph(4).unwrap();
        let swapped = p4.relabel(&[3, 1, 2, 0]).unwrap();
        assert!(is_isomorphic(&p4, &swapped).unwrap());
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&p4, &star).unwrap());
        let c6 = cycle_graph(6).unwrap();
        let two_k3 = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic(&c6, &two_k3).unwrap());
        assert!(!brute_isomorphic(&c6, &two_k3));
    }

    #[test]
    fn cap_is_enforced() {
        let big = path_graph(11).unwrap();
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(Error::CapExceeded { .. })
        ));
        assert!(is_isomorphic_with_cap(&big, &big, 12).unwrap());
    }

    #[test]
    fn matches_permutation_brute_force_on_all_small_graphs() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::new(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &p)| p),
                )
                .unwrap();
                let canon = canonical_form(&g).unwrap();
                let expected = brute_canonical(&g);
                assert_eq!(canon.graph.edges(), expected.as_slice(), "{:?}", g);
                assert_eq!(canon.code, identity_code(&canon.graph));
                assert_eq!(is_canonical(&g).unwrap(), g.edges() == expected.as_slice());
                let relabeled = g.relabel(&canon.order.iter().enumerate().fold(
                    vec![0; n],
                    |mut pos, (i, &v)| {
                        pos[v] = i;
                        pos
                    },
                ));
                assert_eq!(relabeled.unwrap(), canon.graph);
            }
        }
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        let k10 = complete_graph(10).unwrap();
        assert!(is_canonical(&k10).unwrap());
        assert!(is_canonical(&Graph::empty(10)).unwrap());
        let c10 = cycle_graph(10).unwrap();
        let canon = canonical_form(&c10).unwrap();
        assert!(is_isomorphic(&c10, &canon.graph).unwrap());
    }
}
