//! Planar semimodular lattices: diagrams, 4-cells, slimming, the expansion
//! into a distributive lattice, cover-preserving join-homomorphisms and an
//! enumerator for small planar semimodular lattices.

pub mod cells;
pub mod census;
pub mod cli;
pub mod error;
pub mod expansion;
pub mod fixtures;
pub mod grid;
pub mod homs;
pub mod lattice;
pub mod slimming;

pub use error::{LatticeError, Result};
pub use lattice::LatticeDiagram;
