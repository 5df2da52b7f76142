//! Chromatic network-vulnerability parameters.
//!
//! A network is considered failed once its chromatic number (or chromatic
//! index) drops to at most `k`. This crate computes the fewest edge, vertex,
//! or mixed (vertices first, then edges) removals that force such a failure:
//!
//! * [`vulnerability`]: exact solvers for arbitrary small graphs, each
//!   returning a [`RemovalCertificate`] that [`verify_certificate`] can check.
//! * [`closed_forms`]: closed formulas for paths, cycles and complete graphs,
//!   a dispatcher that prefers them, and a sweep that checks them against
//!   the exact solvers.
//! * [`extremal`]: minimum and maximum of a parameter over every graph with
//!   a given order and size.
//!
//! The exact solvers refuse inputs above their [`Limits`] instead of
//! falling back to heuristics.

pub mod canon;
pub mod closed_forms;
pub mod coloring;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod limits;
pub mod turan;
pub mod vulnerability;

pub use error::{Error, ParseError, Result};
pub use graph::{complete_graph, cycle_graph, path_graph, Edge, Graph, GraphClass};
pub use limits::Limits;
pub use vulnerability::{removal_parameter, verify_certificate, ParameterKind, RemovalCertificate};
