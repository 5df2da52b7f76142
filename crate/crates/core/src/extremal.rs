//! Minimum and maximum of a parameter over all graphs of order `n` and size `m`.

use std::collections::HashSet;
use std::time::Instant;

use itertools::{Combinations, Itertools};
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::limits::Limits;
use crate::turan::pairs;
use crate::vulnerability::{removal_parameter, ParameterKind};

pub const MAX_DEDUP_ORDER: usize = 8;
/// Labeled streams longer than this are refused; every order up to 7 fits.
pub const MAX_LABELED_GRAPHS: u64 = 1 << 19;

const BATCH: usize = 2048;

fn binomial(n: u64, r: u64) -> u64 {
    let r = r.min(n - r);
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn all_pairs(n: usize) -> Vec<Edge> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
        .collect()
}

/// Graphs of `G(n, m)` in lexicographic order of their sorted edge lists.
pub enum GnmStream {
    Labeled {
        n: usize,
        pairs: Vec<Edge>,
        combos: Combinations<std::ops::Range<usize>>,
    },
    Classes(std::vec::IntoIter<Graph>),
}

impl Iterator for GnmStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            GnmStream::Labeled { n, pairs, combos } => combos
                .next()
                .map(|idx| Graph::from_sorted(*n, idx.into_iter().map(|i| pairs[i]).collect())),
            GnmStream::Classes(it) => it.next(),
        }
    }
}

fn check_gnm(n: usize, m: usize, dedup: bool) -> Result<u64> {
    let slots = pairs(n as u64);
    if m as u64 > slots {
        return Err(Error::invalid(format!(
            "a simple graph on {n} vertices has at most {slots} edges, not {m}"
        )));
    }
    if dedup {
        if n > MAX_DEDUP_ORDER {
            return Err(Error::CapExceeded {
                what: "enumeration order",
                value: n,
                cap: MAX_DEDUP_ORDER,
            });
        }
        return Ok(0);
    }
    let count = binomial(slots, m as u64);
    if count > MAX_LABELED_GRAPHS {
        return Err(Error::CapExceeded {
            what: "labeled graph count",
            value: count as usize,
            cap: MAX_LABELED_GRAPHS as usize,
        });
    }
    Ok(count)
}

/// One canonical representative per isomorphism class, built by adding one
/// edge at a time to every class of the previous size.
fn isomorphism_classes(n: usize, m: usize) -> Result<Vec<Graph>> {
    let slots = all_pairs(n);
    let mut layer = vec![Graph::empty(n)];
    for _ in 0..m {
        let children: Vec<Vec<(u128, Graph)>> = layer
            .par_iter()
            .map(|g| {
                slots
                    .iter()
                    .filter(|e| !g.has_edge(e.u(), e.v()))
                    .map(|&e| {
                        let mut edges = g.edges().to_vec();
                        let at = edges.binary_search(&e).unwrap_err();
                        edges.insert(at, e);
                        let c = canonical_form(&Graph::from_sorted(n, edges))?;
                        Ok((c.code, c.graph))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let mut seen = HashSet::new();
        layer = children
            .into_iter()
            .flatten()
            .filter(|(code, _)| seen.insert(*code))
            .map(|(_, g)| g)
            .collect();
    }
    layer.sort_by(|a, b| a.edges().cmp(b.edges()));
    Ok(layer)
}

/// All `m`-subsets of the possible edges in lexicographic order or, with
/// `dedup`, the lexicographically least member of each isomorphism class in
/// the same order.
pub fn enumerate_gnm(n: usize, m: usize, dedup: bool) -> Result<GnmStream> {
    check_gnm(n, m, dedup)?;
    if dedup {
        return Ok(GnmStream::Classes(isomorphism_classes(n, m)?.into_iter()));
    }
    let pairs = all_pairs(n);
    Ok(GnmStream::Labeled {
        n,
        combos: (0..pairs.len()).combinations(m),
        pairs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanQuery {
    pub n: usize,
    pub m: usize,
    pub kind: ParameterKind,
    pub k: usize,
    pub j: usize,
    /// Scan one graph per isomorphism class instead of every labeled graph.
    pub dedup: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub value: usize,
    pub order: usize,
    pub edges: Vec<Edge>,
}

impl Witness {
    pub fn graph(&self) -> Graph {
        Graph::from_sorted(self.order, self.edges.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub query: ScanQuery,
    pub graphs_examined: usize,
    pub min: Witness,
    pub max: Witness,
    pub elapsed_ms: u64,
}

fn check_query(q: &ScanQuery) -> Result<()> {
    if q.k < 1 {
        return Err(Error::invalid("k must be at least 1"));
    }
    if !q.kind.is_mixed() && q.j != 0 {
        return Err(Error::invalid(format!(
            "the budget j only applies to mixed kinds, not {}",
            q.kind
        )));
    }
    if q.j > q.n {
        return Err(Error::invalid(format!(
            "j = {} exceeds the order {}",
            q.j, q.n
        )));
    }
    Ok(())
}

/// Exhaustive scan with the exact solver on `jobs` worker threads. Ties go
/// to the first graph in stream order, so the report does not depend on
/// `jobs`. `progress` receives the running count after each batch.
pub fn extremal_scan(
    q: &ScanQuery,
    jobs: usize,
    limits: &Limits,
    mut progress: impl FnMut(usize),
) -> Result<ExtremalReport> {
    let start = Instant::now();
    check_query(q)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::invalid(format!("cannot start worker pool: {e}")))?;
    let mut stream = pool.install(|| enumerate_gnm(q.n, q.m, q.dedup))?;

    let mut examined = 0;
    let mut best: Option<(Witness, Witness)> = None;
    loop {
        let batch: Vec<Graph> = stream.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let values: Vec<usize> = pool.install(|| {
            batch
                .par_iter()
                .map(|g| removal_parameter(g, q.kind, q.k, q.j, limits).map(|c| c.value))
                .collect::<Result<_>>()
        })?;
        for (g, value) in batch.iter().zip(values) {
            let witness = || Witness {
                value,
                order: g.order(),
                edges: g.edges().to_vec(),
            };
            match &mut best {
                None => best = Some((witness(), witness())),
                Some((lo, hi)) => {
                    if value < lo.value {
                        *lo = witness();
                    }
                    if value > hi.value {
                        *hi = witness();
                    }
                }
            }
        }
        examined += batch.len();
        progress(examined);
    }
    let (min, max) = best.expect("G(n, m) is never empty");
    Ok(ExtremalReport {
        query: *q,
        graphs_examined: examined,
        min,
        max,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
