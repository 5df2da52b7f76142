//! Exact vertex and edge coloring.
//!
//! Colors are `1..=palette`; their numeric values carry no meaning beyond
//! identity. The chromatic index is computed as the chromatic number of the
//! line graph, so both parameters share one search core.

mod kernels;
mod search;

pub use kernels::{
    max_k_edge_colorable_subgraph, maximum_matching, min_monochromatic_edges, minimum_vertex_cover,
    EdgeKernelResult,
};
pub(crate) use kernels::{max_kec_below, min_mono_below};
pub(crate) use search::{k_color, BitGraph};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexColoring {
    /// `colors[v]` is the color of vertex `v`.
    pub colors: Vec<u32>,
    pub palette: u32,
}

impl VertexColoring {
    pub fn monochromatic_edges(&self, g: &Graph) -> Vec<Edge> {
        g.edges()
            .iter()
            .filter(|e| self.colors[e.u()] == self.colors[e.v()])
            .copied()
            .collect()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order()
            && self.colors.iter().all(|&c| c >= 1 && c <= self.palette)
            && self.monochromatic_edges(g).is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    pub assignments: Vec<(Edge, u32)>,
    pub palette: u32,
}

impl EdgeColoring {
    /// No two edges sharing an endpoint have the same color.
    pub fn is_proper(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.assignments.iter().all(|&(e, c)| {
            c >= 1 && c <= self.palette && seen.insert((e.u(), c)) && seen.insert((e.v(), c))
        })
    }
}

fn edge_coloring(g: &Graph, colors: Vec<u32>, palette: u32) -> EdgeColoring {
    EdgeColoring {
        assignments: g.edges().iter().copied().zip(colors).collect(),
        palette,
    }
}

fn require_positive(k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::invalid("k must be at least 1"));
    }
    Ok(())
}

/// `m <= k * floor(n'/2)` where `n'` counts non-isolated vertices: every
/// color class is a matching.
fn fits_in_k_matchings(g: &Graph, k: usize) -> bool {
    let active = (0..g.order()).filter(|&v| g.degree(v) > 0).count();
    g.size() <= k * (active / 2)
}

/// `χ(g)` with a witness; 0 for the graph without vertices.
pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<(usize, VertexColoring)> {
    limits.check_order(g)?;
    let bg = BitGraph::from_graph(g);
    let lower = match (g.order(), g.size()) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => 2,
    };
    for k in lower..=g.order() {
        if let Some(colors) = k_color(&bg, k) {
            return Ok((
                k,
                VertexColoring {
                    colors,
                    palette: k as u32,
                },
            ));
        }
    }
    unreachable!("every graph is n-colorable")
}

/// `χ'(g)` with a witness; 0 for the edgeless graph.
pub fn chromatic_index(g: &Graph, limits: &Limits) -> Result<(usize, EdgeColoring)> {
    limits.check_size(g)?;
    if g.size() == 0 {
        return Ok((0, edge_coloring(g, Vec::new(), 0)));
    }
    let line = BitGraph::line_graph(g);
    for k in g.max_degree()..=g.size() {
        if !fits_in_k_matchings(g, k) {
            continue;
        }
        if let Some(colors) = k_color(&line, k) {
            return Ok((k, edge_coloring(g, colors, k as u32)));
        }
    }
    unreachable!("every graph is m-edge-colorable")
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn is_k_vertex_colorable(
    g: &Graph,
    k: usize,
    limits: &Limits,
) -> Result<Option<VertexColoring>> {
    require_positive(k)?;
    limits.check_order(g)?;
    Ok(
        k_color(&BitGraph::from_graph(g), k).map(|colors| VertexColoring {
            colors,
            palette: k as u32,
        }),
    )
}

/// A proper edge coloring with at most `k` colors, if one exists.
pub fn is_k_edge_colorable(g: &Graph, k: usize, limits: &Limits) -> Result<Option<EdgeColoring>> {
    require_positive(k)?;
    limits.check_size(g)?;
    if g.max_degree() > k || !fits_in_k_matchings(g, k) {
        return Ok(None);
    }
    Ok(k_color(&BitGraph::line_graph(g), k).map(|c| edge_coloring(g, c, k as u32)))
}
