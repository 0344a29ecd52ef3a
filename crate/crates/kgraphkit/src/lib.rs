//! Combinatorial invariants of finite higher-rank graphs.
//!
//! A rank-k graph is presented as a k-colored directed multigraph together
//! with a complete, associative collection of commuting squares. On top of
//! the resulting factorization structure this crate computes boundary paths,
//! the source-removing cover, hereditary/saturated vertex sets and the ideal
//! lattice they generate, periodicity data, a catalogue of primitive-ideal
//! parameters, and direct-sum decompositions.

pub mod boundary;
pub mod budget;
pub mod decompose;
pub mod degree;
pub mod desourcify;
pub mod dot;
pub mod error;
pub mod format;
pub mod ideals;
pub mod periodicity;
pub mod skeleton;
pub mod tails_prim;

pub use budget::{BudgetConfig, PartialBudget};
pub use degree::{DegreeVector, ExtDegree, ExtEntry};
pub use error::{Error, Result};
pub use periodicity::{
    aperiodicity, equivalent_paths, h_per, per_group, transfer_check, unique_boundary_path, Equiv,
    HPerResult, IntSubgroup, PerGroupResult, PeriodicityVerdict, TransferReport,
};
pub use dot::{decomposition_dot, graph_dot, window_dot};
pub use format::{parse_kgraph, serialize_kgraph};
pub use decompose::{
    chains, decomposability, decompose, decompose_from_chain, delta_omega, succeeds,
    DecompositionReport, DeltaOmega,
};
pub use tails_prim::{
    aperiodic_tails, classify_prim, maximal_tails, prim_catalogue, MaximalTail, PhaseRelation,
    PrimClassification, PrimIdeal, PrimRecordClass, TailVerdict,
};
pub use skeleton::{
    omega_graph, product_1graphs, Edge, EdgeSpec, KGraph, KGraphSpec, Path, ShapeReport,
    SquareSpec,
};
