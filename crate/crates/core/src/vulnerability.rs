//! The six removal parameters, each returned with a checkable certificate.
//!
//! For a threshold `k`, a graph is in a failure state once its chromatic
//! number (for the `chrom-*` kinds) or chromatic index (`index-*` kinds) is
//! at most `k`. Each parameter is the fewest removals reaching that state:
//! edges only, vertices only, or exactly `j` vertices followed by the fewest
//! edges (mixed). Mixed removal picks edges from `G - V'` only.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::coloring::{
    is_k_edge_colorable, k_color, max_kec_below, min_mono_below, BitGraph, EdgeKernelResult,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParameterKind {
    ChromEdge,
    ChromVertex,
    ChromMixed,
    IndexEdge,
    IndexVertex,
    IndexMixed,
}

impl ParameterKind {
    pub const ALL: [ParameterKind; 6] = [
        ParameterKind::ChromEdge,
        ParameterKind::ChromVertex,
        ParameterKind::ChromMixed,
        ParameterKind::IndexEdge,
        ParameterKind::IndexVertex,
        ParameterKind::IndexMixed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParameterKind::ChromEdge => "chrom-edge",
            ParameterKind::ChromVertex => "chrom-vertex",
            ParameterKind::ChromMixed => "chrom-mixed",
            ParameterKind::IndexEdge => "index-edge",
            ParameterKind::IndexVertex => "index-vertex",
            ParameterKind::IndexMixed => "index-mixed",
        }
    }

    pub fn is_mixed(self) -> bool {
        matches!(self, ParameterKind::ChromMixed | ParameterKind::IndexMixed)
    }

    pub fn is_vertex(self) -> bool {
        matches!(
            self,
            ParameterKind::ChromVertex | ParameterKind::IndexVertex
        )
    }

    /// Whether the failure state is measured by the chromatic index.
    pub fn uses_index(self) -> bool {
        matches!(
            self,
            ParameterKind::IndexEdge | ParameterKind::IndexVertex | ParameterKind::IndexMixed
        )
    }
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParameterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ParameterKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown parameter kind {s:?}")))
    }
}

/// Coloring of whatever survives the removal, in original labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "colors", rename_all = "kebab-case")]
pub enum ResidualColoring {
    /// `(vertex, color)` for every surviving vertex.
    Vertex(Vec<(usize, u32)>),
    /// `(edge, color)` for every surviving edge.
    Edge(Vec<(Edge, u32)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemovalCertificate {
    pub kind: ParameterKind,
    pub k: usize,
    pub j: usize,
    /// The parameter: `|E'|` for edge and mixed kinds, `|V'|` for vertex kinds.
    pub value: usize,
    pub removed_vertices: Vec<usize>,
    pub removed_edges: Vec<Edge>,
    pub residual: ResidualColoring,
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::invalid("k must be at least 1"));
    }
    Ok(())
}

fn check_j(g: &Graph, j: usize) -> Result<()> {
    if j > g.order() {
        return Err(Error::invalid(format!(
            "j = {j} exceeds the graph order {}",
            g.order()
        )));
    }
    Ok(())
}

fn vertex_residual(map: &[usize], colors: &[u32]) -> ResidualColoring {
    ResidualColoring::Vertex(map.iter().copied().zip(colors.iter().copied()).collect())
}

fn lift(map: &[usize], e: Edge) -> Edge {
    Edge::new(map[e.u()], map[e.v()])
}

/// Fewest edges whose removal leaves chromatic number at most `k`: the
/// monochromatic edges of a best `k`-coloring.
pub fn chrom_edge_removal(g: &Graph, k: usize, limits: &Limits) -> Result<RemovalCertificate> {
    check_k(k)?;
    limits.check_order(g)?;
    let (_, colors) = min_mono_below(&BitGraph::from_graph(g), k, u64::MAX)
        .expect("unbounded search finds a coloring");
    let removed_edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| colors[e.u()] == colors[e.v()])
        .copied()
        .collect();
    let identity: Vec<usize> = (0..g.order()).collect();
    Ok(RemovalCertificate {
        kind: ParameterKind::ChromEdge,
        k,
        j: 0,
        value: removed_edges.len(),
        removed_vertices: Vec::new(),
        removed_edges,
        residual: vertex_residual(&identity, &colors),
    })
}

/// Fewest vertices whose removal leaves chromatic number at most `k`. The
/// first feasible subset in (size, lexicographic) order is reported.
pub fn chrom_vertex_removal(g: &Graph, k: usize, limits: &Limits) -> Result<RemovalCertificate> {
    check_k(k)?;
    limits.check_order(g)?;
    for size in 0..=g.order() {
        for subset in (0..g.order()).combinations(size) {
            let (sub, map) = g.remove_vertices(&subset)?;
            if let Some(colors) = k_color(&BitGraph::from_graph(&sub), k) {
                return Ok(RemovalCertificate {
                    kind: ParameterKind::ChromVertex,
                    k,
                    j: 0,
                    value: subset.len(),
                    removed_vertices: subset,
                    removed_edges: Vec::new(),
                    residual: vertex_residual(&map, &colors),
                });
            }
        }
    }
    unreachable!("removing every vertex reaches a failure state")
}

/// Remove exactly `j` vertices, then the fewest edges, so that the chromatic
/// number is at most `k`. Ties between vertex sets go to the
/// lexicographically first.
pub fn chrom_mixed_removal(
    g: &Graph,
    k: usize,
    j: usize,
    limits: &Limits,
) -> Result<RemovalCertificate> {
    check_k(k)?;
    check_j(g, j)?;
    limits.check_order(g)?;
    let mut cutoff = u64::MAX;
    let mut best = None;
    for subset in (0..g.order()).combinations(j) {
        let (sub, map) = g.remove_vertices(&subset)?;
        if let Some((count, colors)) = min_mono_below(&BitGraph::from_graph(&sub), k, cutoff) {
            cutoff = count;
            best = Some((subset, sub, map, colors));
            if count == 0 {
                break;
            }
        }
    }
    let (subset, sub, map, colors) = best.expect("some vertex subset of size j exists");
    let removed_edges: Vec<Edge> = sub
        .edges()
        .iter()
        .filter(|e| colors[e.u()] == colors[e.v()])
        .map(|&e| lift(&map, e))
        .collect();
    Ok(RemovalCertificate {
        kind: ParameterKind::ChromMixed,
        k,
        j,
        value: removed_edges.len(),
        removed_vertices: subset,
        removed_edges,
        residual: vertex_residual(&map, &colors),
    })
}

/// Fewest edges whose removal leaves chromatic index at most `k`: the
/// complement of a largest `k`-edge-colorable subgraph.
pub fn index_edge_removal(g: &Graph, k: usize, limits: &Limits) -> Result<RemovalCertificate> {
    check_k(k)?;
    limits.check_size(g)?;
    let (_, labels) = max_kec_below(g, k, usize::MAX).expect("unbounded search finds a subgraph");
    let kept = EdgeKernelResult::from_labels(g, k, &labels);
    Ok(RemovalCertificate {
        kind: ParameterKind::IndexEdge,
        k,
        j: 0,
        value: kept.removed.len(),
        removed_vertices: Vec::new(),
        removed_edges: kept.removed,
        residual: ResidualColoring::Edge(kept.coloring.assignments),
    })
}

/// Fewest vertices whose removal leaves chromatic index at most `k`.
pub fn index_vertex_removal(g: &Graph, k: usize, limits: &Limits) -> Result<RemovalCertificate> {
    check_k(k)?;
    limits.check_size(g)?;
    for size in 0..=g.order() {
        for subset in (0..g.order()).combinations(size) {
            let (sub, map) = g.remove_vertices(&subset)?;
            if let Some(coloring) = is_k_edge_colorable(&sub, k, limits)? {
                return Ok(RemovalCertificate {
                    kind: ParameterKind::IndexVertex,
                    k,
                    j: 0,
                    value: subset.len(),
                    removed_vertices: subset,
                    removed_edges: Vec::new(),
                    residual: ResidualColoring::Edge(
                        coloring
                            .assignments
                            .into_iter()
                            .map(|(e, c)| (lift(&map, e), c))
                            .collect(),
                    ),
                });
            }
        }
    }
    unreachable!("removing every vertex reaches a failure state")
}

/// Remove exactly `j` vertices, then the fewest edges, so that the chromatic
/// index is at most `k`.
pub fn index_mixed_removal(
    g: &Graph,
    k: usize,
    j: usize,
    limits: &Limits,
) -> Result<RemovalCertificate> {
    check_k(k)?;
    check_j(g, j)?;
    limits.check_size(g)?;
    let mut cutoff = usize::MAX;
    let mut best = None;
    for subset in (0..g.order()).combinations(j) {
        let (sub, map) = g.remove_vertices(&subset)?;
        if let Some((count, labels)) = max_kec_below(&sub, k, cutoff) {
            cutoff = count;
            best = Some((subset, sub, map, labels));
            if count == 0 {
                break;
            }
        }
    }
    let (subset, sub, map, labels) = best.expect("some vertex subset of size j exists");
    let kept = EdgeKernelResult::from_labels(&sub, k, &labels);
    Ok(RemovalCertificate {
        kind: ParameterKind::IndexMixed,
        k,
        j,
        value: kept.removed.len(),
        removed_vertices: subset,
        removed_edges: kept.removed.iter().map(|&e| lift(&map, e)).collect(),
        residual: ResidualColoring::Edge(
            kept.coloring
                .assignments
                .into_iter()
                .map(|(e, c)| (lift(&map, e), c))
                .collect(),
        ),
    })
}

/// Runs the solver for `kind`. `j` must be 0 unless the kind is mixed.
pub fn removal_parameter(
    g: &Graph,
    kind: ParameterKind,
    k: usize,
    j: usize,
    limits: &Limits,
) -> Result<RemovalCertificate> {
    if !kind.is_mixed() && j != 0 {
        return Err(Error::invalid(format!(
            "the budget j only applies to mixed kinds, not {kind}"
        )));
    }
    match kind {
        ParameterKind::ChromEdge => chrom_edge_removal(g, k, limits),
        ParameterKind::ChromVertex => chrom_vertex_removal(g, k, limits),
        ParameterKind::ChromMixed => chrom_mixed_removal(g, k, j, limits),
        ParameterKind::IndexEdge => index_edge_removal(g, k, limits),
        ParameterKind::IndexVertex => index_vertex_removal(g, k, limits),
        ParameterKind::IndexMixed => index_mixed_removal(g, k, j, limits),
    }
}

/// Checks the certificate's shape and that its residual coloring is a proper
/// coloring with at most `k` colors of exactly `g - V' - E'`. Minimality is
/// not rechecked. References to vertices or edges outside `g` are errors.
pub fn verify_certificate(g: &Graph, cert: &RemovalCertificate) -> Result<bool> {
    let n = g.order();
    let in_range = |v: usize| {
        if v < n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: n,
            })
        }
    };
    let present = |e: Edge| {
        if g.edge_index(e).is_some() {
            Ok(())
        } else {
            Err(Error::MissingEdge(e))
        }
    };
    for &v in &cert.removed_vertices {
        in_range(v)?;
    }
    for &e in &cert.removed_edges {
        present(e)?;
    }
    match &cert.residual {
        ResidualColoring::Vertex(c) => c.iter().try_for_each(|&(v, _)| in_range(v))?,
        ResidualColoring::Edge(c) => c.iter().try_for_each(|&(e, _)| present(e))?,
    }

    let kind = cert.kind;
    let shape_ok = if kind.is_mixed() {
        cert.removed_vertices.len() == cert.j && cert.value == cert.removed_edges.len()
    } else if kind.is_vertex() {
        cert.j == 0 && cert.removed_edges.is_empty() && cert.value == cert.removed_vertices.len()
    } else {
        cert.j == 0 && cert.removed_vertices.is_empty() && cert.value == cert.removed_edges.len()
    };
    if !shape_ok || cert.k < 1 {
        return Ok(false);
    }

    let mut gone = vec![false; n];
    for &v in &cert.removed_vertices {
        if std::mem::replace(&mut gone[v], true) {
            return Ok(false);
        }
    }
    let mut cut = std::collections::HashSet::new();
    for &e in &cert.removed_edges {
        if gone[e.u()] || gone[e.v()] || !cut.insert(e) {
            return Ok(false);
        }
    }
    let residual_edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| !gone[e.u()] && !gone[e.v()] && !cut.contains(*e))
        .copied()
        .collect();
    let k = cert.k as u32;

    Ok(match &cert.residual {
        ResidualColoring::Vertex(assign) => {
            if kind.uses_index() {
                return Ok(false);
            }
            let mut color = vec![0u32; n];
            for &(v, c) in assign {
                if gone[v] || color[v] != 0 || c < 1 || c > k {
                    return Ok(false);
                }
                color[v] = c;
            }
            (0..n).all(|v| gone[v] || color[v] != 0)
                && residual_edges.iter().all(|e| color[e.u()] != color[e.v()])
        }
        ResidualColoring::Edge(assign) => {
            if !kind.uses_index() {
                return Ok(false);
            }
            let mut colored: Vec<Edge> = assign.iter().map(|&(e, _)| e).collect();
            colored.sort_unstable();
            let coloring = crate::coloring::EdgeColoring {
                assignments: assign.clone(),
                palette: k,
            };
            colored == residual_edges && coloring.is_proper()
        }
    })
}
