//! Multigraphs and hypergraphs embedded on surfaces of arbitrary Euler genus,
//! their duals, and exact branchwidth under pluggable symmetric width measures.
//!
//! The crate is organized around a handful of value types:
//!
//! * [`embedding::EmbeddedGraph`] — a multigraph with loops and parallel edges
//!   carrying a signed rotation system (embedding scheme). Faces, Euler genus,
//!   duals, contraction and deletion are computed combinatorially.
//! * [`measures`] — width measures on edge subsets: border size `delta`,
//!   graphic rank, the matroid connectivity function `mu`, circuit rank and
//!   fundamental cycle bases.
//! * [`decomposition::BranchTree`] — unrooted cubic trees with a leaf
//!   bijection to a ground set, evaluated under any symmetric set function.
//! * [`solver`] — exact branchwidth by subset dynamic programming, a
//!   connected-decomposition variant, a greedy heuristic, and an independent
//!   brute-force tree-enumeration oracle.
//! * [`lemmas`] — executable checkers for the structural facts relating `mu`,
//!   borders, bridges and duals, the full reduction trace, and the end-to-end
//!   self-duality verifier `bw(G*) <= bw(G) + eg(G)`.
//! * [`hypergraph`] — embedded hypergraphs as marked incidence graphs,
//!   hypergraph duals, incidence lifting of branch decompositions, and the
//!   hypergraph self-duality verifier.
//!
//! All values are immutable after construction; operations return new values
//! and are safe to evaluate from multiple threads.

pub mod decomposition;
pub mod embedding;
pub mod error;
pub mod gen;
pub mod hypergraph;
pub mod io;
pub mod lemmas;
pub mod measures;
pub mod solver;

mod flags;

pub use embedding::{
    DartId, DartSide, DualCorrespondence, EdgeClass, EdgeId, EmbeddedGraph, Face, FaceId, FaceSet,
    Side, Sign, VertexId,
};
pub use error::{Error, Result};
