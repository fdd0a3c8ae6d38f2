//! Nilpotent orbits of simple Lie algebras, their polarizations and the
//! degrees of the associated generalized Springer maps.

pub mod atlas;
pub mod classical;
pub mod error;
pub mod flops;
pub mod oracle;
pub mod orbits;
pub mod parabolics;
pub mod rootkit;

pub use atlas::{Atlas, OrbitRecord, Polarization, Resolvable};
pub use classical::{CaseTag, Partition};
pub use error::{Error, Result};
pub use flops::{EquivalenceGraph, Mode};
pub use orbits::WeightedDiagram;
pub use parabolics::{ContractionReport, MarkedDiagram};
pub use rootkit::{root_system, Family, LieType, NodeSet, Root, RootSystem};
