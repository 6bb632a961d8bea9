//! Restrained double Roman domination toolkit.
//!
//! A restrained double Roman dominating function labels each vertex with
//! 0, 1, 2 or 3 so that every 0-vertex has a 3-neighbor or two 2-neighbors,
//! every 1-vertex has a neighbor labeled at least 2, and no 0-vertex is
//! isolated among the 0-vertices. The minimum total label weight is the
//! restrained double Roman domination number of the graph.
//!
//! The crate bundles:
//! - graph construction, families, products and the edge-list text format;
//! - the feasibility validator for the restrained and unrestrained variants;
//! - exact solvers (exhaustive oracle and branch-and-bound), plus exact
//!   domination number and 2-packing number;
//! - a catalog of closed-form values and bounds with applicability guards
//!   and a solver cross-check harness;
//! - generators for explicit optimal labelings of the cataloged families;
//! - the exact-cover-by-3-sets reduction to chordal graphs;
//! - column-weight audits and the bagging lower-bound certificate for
//!   cyclic strips.

pub mod audits;
pub mod catalog;
pub mod chordal;
pub mod constructions;
pub mod graph;
pub mod labeling;
pub mod products;
pub mod reduction;
pub mod solver;

pub use graph::{build_family, graph_stats, parse_graph, serialize_graph, FamilySpec, Graph};
pub use labeling::{validate, weight, Labeling, Variant};
pub use solver::{brute_force, exact_rdrd, solve_rdrd_bnb, Problem, SolveResult};
