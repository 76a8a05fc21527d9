//! geodex: a desk-scale toolkit for computational algebraic graph theory.
//!
//! The crate constructs a family of distance-regular and strongly regular
//! graphs (Hoffman-Singleton, Higman-Sims, Gewirtz, the M22 graph, Hamming
//! and folded cubes, Hadamard graphs, the Armanios-Wells graph, ...),
//! computes their combinatorial and symmetry invariants, and machine-checks
//! the cover/quotient relations between them, emitting JSON certificates.
//!
//! The pieces:
//! - [`graph`]: bitset graphs, distances, girth, arc/geodesic streams,
//!   intersection numbers and arrays, strong regularity.
//! - [`perm`]: permutation groups with a deterministic Schreier-Sims
//!   stabiliser chain, orbits on points and tuples, blocks, primitivity.
//! - [`aut`]: automorphism groups and canonical certificates by equitable
//!   refinement with individualization backtracking.
//! - [`constructions`]: every named graph, each self-verifying its
//!   parameters at build time, with provenance labels per vertex.
//! - [`quotients`]: quotient graphs, the cover predicate, antipodality,
//!   and structural recognition of standard double covers.
//! - [`symmetry`]: arc-, geodesic- and distance-transitivity, local
//!   actions of vertex stabilisers.
//! - [`census`]: the verification suites and their JSON report schema.
//! - [`io`]: the file formats (edge lists, generator/partition/design
//!   JSON); the parsers treat their input as untrusted.
//!
//! Graphs and groups are immutable once built and safe to share across
//! threads; all algorithms are deterministic, so identical inputs yield
//! identical reports.

pub mod aut;
pub mod census;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod perm;
pub mod quotients;
pub mod symmetry;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use perm::{Perm, PermGroup, VertexPartition};
