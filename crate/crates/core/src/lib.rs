//! Exact, combinatorial invariants of Coxeter systems.
//!
//! Starting from a finite Coxeter matrix the crate computes the number of
//! ends, the rational cohomological dimension (through the Davis chamber),
//! the algebraic rank, bounds on the virtual cohomological dimension,
//! infinity-decompositions and visual graph-of-groups decompositions, and
//! materializes residue graphs and chamber graphs on balls of the Coxeter
//! complex.

pub mod catalog;
pub mod cosetgraph;
pub mod davis;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod linalg;
pub mod named;
pub mod system;
pub mod words;

pub use catalog::{
    bilinear_signature, classify_irreducible, is_spherical, maximal_spherical_subsets, Signature,
    TypeLabel,
};
pub use error::{Error, Limits, Result};
pub use graph::SimpleGraph;
pub use system::{parse_system, CoxeterSystem, DiagramGraph, DiagramKind, Label, SpecialSubset};
