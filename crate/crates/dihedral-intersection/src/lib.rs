//! Intersection graphs of dihedral-group subgroups.
//!
//! This crate builds the intersection graph of the proper nontrivial
//! subgroups of the dihedral group `D_2n` (vertices are subgroups, edges
//! join subgroups sharing a non-identity element) and computes its
//! invariants exactly:
//!
//! - subgroup enumeration for any `n >= 3`, with `tau(n) + sigma(n) - 2`
//!   subgroups in a fixed deterministic order;
//! - structural invariants: degrees, all-pairs distances, eccentricities,
//!   diameter, exact independence and clique numbers, split partition,
//!   twin classes;
//! - seven topological indices (Wiener, hyper-Wiener, both Zagreb indices,
//!   Schultz, Gutman, eccentric connectivity) computed definitionally,
//!   plus closed-form reference polynomials for `n = p^2` with `p` prime;
//! - exact metric dimension (twin lower bound plus transversal
//!   certificate, with exhaustive fallback) and the full resolving
//!   polynomial by subset enumeration;
//! - a verification report that compares every definitional computation
//!   against its closed form and flags disagreements instead of hiding
//!   them.
//!
//! All arithmetic is exact; there is no floating point anywhere.
//!
//! ```
//! use dihedral_intersection::graph::IntersectionGraph;
//! use dihedral_intersection::indices;
//!
//! let g = IntersectionGraph::build(9).unwrap();
//! assert_eq!(g.vertex_count(), 14);
//! assert_eq!(g.edge_count(), 19);
//! assert_eq!(indices::wiener(&g).unwrap(), 190);
//! ```
//!
//! The `examples/` directory has one runnable program per capability; the
//! `dihedral-intersection` binary exposes the same operations as the
//! `graph`, `indices`, `metric-dim`, `respoly`, and `verify` subcommands.

#![forbid(unsafe_code)]

pub mod cli;
mod error;
pub mod export;
pub mod formula;
pub mod graph;
pub mod group;
pub mod indices;
pub mod resolving;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Distance, IntersectionGraph, VertexClass};
pub use group::{DihedralElement, Subgroup, SubgroupKind};
