//! Simple undirected graphs on vertices `0..n`.
//!
//! A [`Graph`] keeps its edge list sorted with the smaller endpoint first, so
//! two graphs with the same labeled edges compare (and serialize) identically.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge(usize, usize);

impl Edge {
    /// Builds the edge `{a, b}`. The caller is responsible for `a != b`.
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(&self) -> usize {
        self.0
    }

    pub fn v(&self) -> usize {
        self.1
    }

    pub fn touches(&self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    pub fn is_loop(&self) -> bool {
        self.0 == self.1
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a simple graph, rejecting loops, duplicate edges and endpoints
    /// outside `0..n`.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list = Vec::new();
        for e in edges {
            let e = e.into();
            if e.v() >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: e.v(),
                    order: n,
                });
            }
            if e.is_loop() {
                return Err(Error::Loop(e.u()));
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// `edges` must already be sorted, deduplicated, loop-free and in range.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid(format!(
                "permutation has length {} but the graph has order {}",
                perm.len(),
                self.n
            )));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::invalid("relabeling is not a permutation"));
            }
        }
        Graph::new(
            self.n,
            self.edges.iter().map(|e| (perm[e.u()], perm[e.v()])),
        )
    }

    /// The induced subgraph on the vertices not in `removed`, compacted to
    /// `0..n'`. The second component maps each new label to its original.
    pub fn remove_vertices(&self, removed: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut gone = vec![false; self.n];
        for &v in removed {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.n,
                });
            }
            gone[v] = true;
        }
        let mut relabel = vec![usize::MAX; self.n];
        let mut original = Vec::with_capacity(self.n);
        for v in (0..self.n).filter(|&v| !gone[v]) {
            relabel[v] = original.len();
            original.push(v);
        }
        // Relabeling is monotone, so the surviving edge list stays sorted.
        let edges = self
            .edges
            .iter()
            .filter(|e| !gone[e.u()] && !gone[e.v()])
            .map(|e| Edge(relabel[e.u()], relabel[e.v()]))
            .collect();
        Ok((Graph::from_sorted(original.len(), edges), original))
    }

    /// Same vertex set, edge set `E \ removed`. Every removed edge must exist.
    pub fn remove_edges(&self, removed: &[Edge]) -> Result<Graph> {
        let mut drop = vec![false; self.edges.len()];
        for &e in removed {
            let idx = self.edge_index(e).ok_or(Error::MissingEdge(e))?;
            drop[idx] = true;
        }
        let edges = self
            .edges
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(e, _)| *e)
            .collect();
        Ok(Graph::from_sorted(self.n, edges))
    }

    /// Recognizes paths, cycles and complete graphs. Where families coincide
    /// (`P1 = K1`, `P2 = K2`, `C3 = K3`) the complete graph wins.
    pub fn classify(&self) -> GraphClass {
        let n = self.n;
        if n == 0 {
            return GraphClass::Other;
        }
        if self.adj.iter().all(|a| a.len() == n - 1) {
            return GraphClass::Complete(n);
        }
        let m = self.edges.len();
        if m == n - 1 && n >= 2 {
            let leaves = self.adj.iter().filter(|a| a.len() == 1).count();
            let inner = self.adj.iter().filter(|a| a.len() == 2).count();
            if leaves == 2 && inner == n - 2 && self.is_connected() {
                return GraphClass::Path(n);
            }
        }
        if m == n && n >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected() {
            return GraphClass::Cycle(n);
        }
        GraphClass::Other
    }
}

/// Result of [`Graph::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Other,
}

/// `P_n`: vertex `i` adjacent to `i + 1`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("a path needs at least 1 vertex"));
    }
    Ok(Graph::from_sorted(
        n,
        (1..n).map(|i| Edge(i - 1, i)).collect(),
    ))
}

/// `C_n`: the path plus the closing edge `{0, n-1}`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("a cycle needs at least 3 vertices"));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("a complete graph needs at least 1 vertex"));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| Edge(u, v)))
        .collect();
    Ok(Graph::from_sorted(n, edges))
}
