//! Turán graphs `T(n, k)`: complete multipartite graphs with `k` parts whose
//! sizes differ by at most one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// `C(x, 2)`.
pub fn pairs(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TuranSpec {
    pub n: u64,
    pub k: u64,
    /// `n = p * k + q` with `0 <= q < k`.
    pub p: u64,
    pub q: u64,
    /// `q` parts of size `p + 1` followed by `k - q` parts of size `p`.
    pub part_sizes: Vec<u64>,
    pub edge_count: u64,
}

impl TuranSpec {
    pub fn new(n: u64, k: u64) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::invalid(format!(
                "Turan graph T({n},{k}) needs 1 <= k <= n"
            )));
        }
        let (p, q) = (n / k, n % k);
        let part_sizes = std::iter::repeat_n(p + 1, q as usize)
            .chain(std::iter::repeat_n(p, (k - q) as usize))
            .collect();
        Ok(TuranSpec {
            n,
            k,
            p,
            q,
            part_sizes,
            edge_count: turan_edge_count(n, k)?,
        })
    }
}

/// `|T(n,k)| = C(n,2) - (q C(p+1,2) + (k-q) C(p,2))`.
pub fn turan_edge_count(n: u64, k: u64) -> Result<u64> {
    Ok(pairs(n) - turan_intra_pairs(n, k)?)
}

/// Pairs of vertices that share a part of `T(n,k)`, i.e. the edges of `K_n`
/// missing from the Turán graph.
pub fn turan_intra_pairs(n: u64, k: u64) -> Result<u64> {
    if k < 1 || k > n {
        return Err(Error::invalid(format!(
            "Turan graph T({n},{k}) needs 1 <= k <= n"
        )));
    }
    let (p, q) = (n / k, n % k);
    Ok(q * pairs(p + 1) + (k - q) * pairs(p))
}

/// Builds `T(n,k)` with parts occupying consecutive labels, largest first.
pub fn turan(n: usize, k: usize) -> Result<(TuranSpec, Graph)> {
    let spec = TuranSpec::new(n as u64, k as u64)?;
    let mut part = Vec::with_capacity(n);
    for (i, &size) in spec.part_sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, size as usize));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part[u] != part[v])
        .map(|(u, v)| Edge::new(u, v))
        .collect();
    Ok((spec, Graph::from_sorted(n, edges)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn turan_6_2() {
        let (spec, g) = turan(6, 2).unwrap();
        assert_eq!(spec.part_sizes, vec![3, 3]);
        assert_eq!(spec.edge_count, 9);
        assert_eq!(g.size(), 9);
    }

    #[test]
    fn turan_5_5_is_complete() {
        let (spec, g) = turan(5, 5).unwrap();
        assert_eq!(spec.edge_count, 10);
        assert_eq!(g, complete_graph(5).unwrap());
    }

    #[test]
    fn turan_7_3_brute_force_count() {
        let (spec, g) = turan(7, 3).unwrap();
        assert_eq!(spec.part_sizes, vec![3, 2, 2]);
        assert_eq!((spec.p, spec.q), (2, 1));
        // count cross-part pairs directly from an explicit partition
        let parts = [[0usize, 1, 2].as_slice(), &[3, 4], &[5, 6]];
        let mut cross = 0;
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                cross += a.len() * b.len();
            }
        }
        assert_eq!(cross, 16);
        assert_eq!(g.size(), 16);
        assert_eq!(spec.edge_count, 16);
    }

    #[test]
    fn rejects_bad_part_counts() {
        assert!(turan(3, 4).is_err());
        assert!(turan(3, 0).is_err());
    }

    #[test]
    fn formula_matches_construction() {
        for n in 1..=12 {
            for k in 1..=n {
                let (spec, g) = turan(n, k).unwrap();
                assert_eq!(g.size() as u64, spec.edge_count, "T({n},{k})");
                let max = spec.part_sizes.iter().max().unwrap();
                let min = spec.part_sizes.iter().min().unwrap();
                assert!(max - min <= 1);
                assert_eq!(spec.part_sizes.iter().sum::<u64>(), n as u64);
            }
            assert_eq!(turan(n, 1).unwrap().1.size(), 0);
            assert_eq!(turan(n, n).unwrap().1, complete_graph(n).unwrap());
        }
    }

    #[test]
    fn no_k_plus_one_clique() {
        // any k+1 vertices include two from the same part
        for n in 2..=8usize {
            for k in 1..n {
                let (_, g) = turan(n, k).unwrap();
                for subset in itertools::Itertools::combinations(0..n, k + 1) {
                    let clique = subset
                        .iter()
                        .enumerate()
                        .all(|(i, &a)| subset[i + 1..].iter().all(|&b| g.has_edge(a, b)));
                    assert!(!clique, "T({n},{k}) contains K{}", k + 1);
                }
            }
        }
    }
}
