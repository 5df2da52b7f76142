//! Closed formulas for paths, cycles and complete graphs.
//!
//! Every formula is applied only inside the range of `j` for which it is
//! known to hold; outside it [`formula_value`] returns
//! [`Error::OutsideTheoremDomain`] and [`dispatch`] falls back to the exact
//! solver. When `k` already reaches the family's chromatic number (or
//! index) the value is 0 for every kind and every `j <= n`, and that branch
//! is taken before any formula.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{complete_graph, cycle_graph, path_graph, Graph, GraphClass};
use crate::limits::Limits;
use crate::turan::{pairs, turan_intra_pairs};
use crate::vulnerability::{removal_parameter, ParameterKind, RemovalCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Path,
    Cycle,
    Complete,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Path, Family::Cycle, Family::Complete];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
        }
    }

    pub fn min_order(self) -> u64 {
        match self {
            Family::Cycle => 3,
            Family::Path | Family::Complete => 1,
        }
    }

    pub fn build(self, n: usize) -> Result<Graph> {
        match self {
            Family::Path => path_graph(n),
            Family::Cycle => cycle_graph(n),
            Family::Complete => complete_graph(n),
        }
    }

    /// Chromatic number (or index, when `index` is set) of the family member
    /// of order `n`.
    pub fn chromatic_quantity(self, n: u64, index: bool) -> u64 {
        match (self, index) {
            (Family::Path, false) => n.min(2),
            (Family::Path, true) => (n - 1).min(2),
            (Family::Cycle, _) => 2 + n % 2,
            (Family::Complete, false) => n,
            (Family::Complete, true) if n.is_multiple_of(2) => n - 1,
            (Family::Complete, true) => {
                if n == 1 {
                    0
                } else {
                    n
                }
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FormulaQuery {
    pub family: Family,
    pub n: u64,
    pub kind: ParameterKind,
    pub k: u64,
    /// Vertex budget; must be 0 for non-mixed kinds.
    pub j: u64,
}

fn outside(q: &FormulaQuery, bound: &str) -> Error {
    Error::OutsideTheoremDomain(format!(
        "{} on {}({}) with k = {}, j = {} requires {bound}",
        q.kind, q.family, q.n, q.k, q.j
    ))
}

fn clamp(x: i128) -> u64 {
    x.max(0) as u64
}

fn path_index_mixed(n: u64, j: u64) -> u64 {
    if n <= 3 * j + 2 {
        0
    } else {
        (n - 3 * j - 1) / 2
    }
}

pub fn formula_value(q: &FormulaQuery) -> Result<u64> {
    use Family::*;
    use ParameterKind::*;

    let FormulaQuery {
        family,
        n,
        kind,
        k,
        j,
    } = *q;
    if k < 1 {
        return Err(Error::invalid("k must be at least 1"));
    }
    if n < family.min_order() {
        return Err(Error::invalid(format!(
            "{family} needs at least {} vertices",
            family.min_order()
        )));
    }
    if !kind.is_mixed() && j != 0 {
        return Err(Error::invalid(format!(
            "the budget j only applies to mixed kinds, not {kind}"
        )));
    }
    if j > n {
        return Err(Error::invalid(format!("j = {j} exceeds the order {n}")));
    }
    if k >= family.chromatic_quantity(n, kind.uses_index()) {
        return Ok(0);
    }
    // From here on k is below the chromatic quantity: k = 1 for paths,
    // k <= 2 for cycles, k < n for complete graphs.
    let half = n / 2;
    let value = match (kind, family) {
        (ChromEdge, Path) => n - 1,
        (ChromEdge, Cycle) => {
            if k == 1 {
                n
            } else {
                n % 2
            }
        }
        (ChromEdge, Complete) => turan_intra_pairs(n, k)?,

        (ChromVertex, Path) => half,
        (ChromVertex, Cycle) => n % 2 + (2 - k) * half,
        (ChromVertex, Complete) => n - k,

        (ChromMixed, Path) => {
            if j > half {
                return Err(outside(q, "j <= floor(n/2)"));
            }
            clamp(n as i128 - 1 - 2 * j as i128)
        }
        (ChromMixed, Cycle) => {
            if j > half {
                return Err(outside(q, "j <= floor(n/2)"));
            }
            match k {
                1 => n - 2 * j,
                _ if n % 2 == 1 && j == 0 => 1,
                _ => 0,
            }
        }
        (ChromMixed, Complete) => {
            if j > n - k {
                return Err(outside(q, "j <= n - k"));
            }
            turan_intra_pairs(n - j, k)?
        }

        (IndexEdge, Path) => (n - 1) / 2,
        (IndexEdge, Cycle) => {
            if k == 1 {
                1 + (n - 1) / 2
            } else {
                n % 2
            }
        }
        (IndexEdge, Complete) => pairs(n) - half * k,

        (IndexVertex, Path) => n / 3,
        (IndexVertex, Cycle) => {
            if k == 1 {
                1 + (n - 1) / 3
            } else {
                n % 2
            }
        }
        (IndexVertex, Complete) => n - k - k % 2,

        (IndexMixed, Path) => {
            if j > half {
                return Err(outside(q, "j <= floor(n/2)"));
            }
            path_index_mixed(n, j)
        }
        (IndexMixed, Cycle) => {
            if j > half {
                return Err(outside(q, "j <= floor(n/2)"));
            }
            match (j, k) {
                (0, 1) => 1 + (n - 1) / 2,
                (0, _) => n % 2,
                (_, 1) => path_index_mixed(n - 1, j - 1),
                _ => 0,
            }
        }
        (IndexMixed, Complete) => {
            if j > half {
                return Err(outside(q, "j <= floor(n/2)"));
            }
            let rest = n - j;
            if k >= rest {
                0
            } else {
                pairs(rest) - rest / 2 * k
            }
        }
    };
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    ClosedForm,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dispatched {
    pub value: u64,
    pub source: Source,
    /// Present when the exact solver ran.
    pub certificate: Option<RemovalCertificate>,
}

fn family_of(class: GraphClass) -> Option<(Family, usize)> {
    match class {
        GraphClass::Path(n) => Some((Family::Path, n)),
        GraphClass::Cycle(n) => Some((Family::Cycle, n)),
        GraphClass::Complete(n) => Some((Family::Complete, n)),
        GraphClass::Other => None,
    }
}

/// Uses the closed form when `g` is a recognized family and the query lies
/// inside the formula's domain, otherwise the exact solver. `force_exact`
/// skips the closed form.
pub fn dispatch(
    g: &Graph,
    kind: ParameterKind,
    k: usize,
    j: usize,
    limits: &Limits,
    force_exact: bool,
) -> Result<Dispatched> {
    if k < 1 {
        return Err(Error::invalid("k must be at least 1"));
    }
    if !kind.is_mixed() && j != 0 {
        return Err(Error::invalid(format!(
            "the budget j only applies to mixed kinds, not {kind}"
        )));
    }
    if j > g.order() {
        return Err(Error::invalid(format!(
            "j = {j} exceeds the graph order {}",
            g.order()
        )));
    }
    if !force_exact {
        if let Some((family, n)) = family_of(g.classify()) {
            let q = FormulaQuery {
                family,
                n: n as u64,
                kind,
                k: k as u64,
                j: j as u64,
            };
            match formula_value(&q) {
                Ok(value) => {
                    return Ok(Dispatched {
                        value,
                        source: Source::ClosedForm,
                        certificate: None,
                    })
                }
                Err(Error::OutsideTheoremDomain(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    let cert = removal_parameter(g, kind, k, j, limits)?;
    Ok(Dispatched {
        value: cert.value as u64,
        source: Source::Exact,
        certificate: Some(cert),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sweep {
    pub families: Vec<(Family, RangeInclusive<usize>)>,
    pub kinds: Vec<ParameterKind>,
}

impl Sweep {
    /// Every kind, each family from its minimum order up to `n_max`.
    pub fn up_to(families: &[Family], n_max: usize) -> Self {
        Sweep {
            families: families
                .iter()
                .map(|&f| (f, f.min_order() as usize..=n_max))
                .collect(),
            kinds: ParameterKind::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweptRange {
    pub family: Family,
    pub n_min: usize,
    pub n_max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub query: FormulaQuery,
    pub formula: u64,
    pub exact: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ranges: Vec<SweptRange>,
    pub kinds: Vec<ParameterKind>,
    /// Queries where both routes produced a value.
    pub compared: usize,
    pub agreements: usize,
    /// Queries skipped because the formula does not claim a value there.
    pub outside_domain: usize,
    pub disagreements: Vec<Disagreement>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }
}

pub fn verify(sweep: &Sweep, limits: &Limits) -> Result<VerificationReport> {
    verify_with(sweep, limits, formula_value)
}

/// The sweep with a substitute formula, so the harness itself can be tested
/// against a deliberately wrong evaluator.
pub fn verify_with<F>(sweep: &Sweep, limits: &Limits, formula: F) -> Result<VerificationReport>
where
    F: Fn(&FormulaQuery) -> Result<u64> + Sync,
{
    let start = Instant::now();
    let mut cases = Vec::new();
    for (family, range) in &sweep.families {
        let lo = (*range.start()).max(family.min_order() as usize);
        cases.extend((lo..=*range.end()).map(|n| (*family, n)));
    }

    // (compared, outside, disagreements) per (family, n), kept in sweep order
    let per_case: Vec<Result<(usize, usize, Vec<Disagreement>)>> = cases
        .par_iter()
        .map(|&(family, n)| {
            let g = family.build(n)?;
            let mut compared = 0;
            let mut outside = 0;
            let mut wrong = Vec::new();
            for &kind in &sweep.kinds {
                let budgets = if kind.is_mixed() { 0..=n } else { 0..=0 };
                for k in 1..=n + 1 {
                    for j in budgets.clone() {
                        let query = FormulaQuery {
                            family,
                            n: n as u64,
                            kind,
                            k: k as u64,
                            j: j as u64,
                        };
                        let claimed = match formula(&query) {
                            Ok(v) => v,
                            Err(Error::OutsideTheoremDomain(_)) => {
                                outside += 1;
                                continue;
                            }
                            Err(e) => return Err(e),
                        };
                        let exact = removal_parameter(&g, kind, k, j, limits)?.value as u64;
                        compared += 1;
                        if claimed != exact {
                            wrong.push(Disagreement {
                                query,
                                formula: claimed,
                                exact,
                            });
                        }
                    }
                }
            }
            Ok((compared, outside, wrong))
        })
        .collect();

    let mut compared = 0;
    let mut outside_domain = 0;
    let mut disagreements = Vec::new();
    for case in per_case {
        let (c, o, d) = case?;
        compared += c;
        outside_domain += o;
        disagreements.extend(d);
    }
    Ok(VerificationReport {
        ranges: sweep
            .families
            .iter()
            .map(|(family, r)| SweptRange {
                family: *family,
                n_min: *r.start(),
                n_max: *r.end(),
            })
            .collect(),
        kinds: sweep.kinds.clone(),
        agreements: compared - disagreements.len(),
        compared,
        outside_domain,
        disagreements,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
