//! Hyperbolic `{n,k}` tilings grown by vertex inflation, Majorana-dimer
//! networks of the pentagon code on them, and analysis of the resulting
//! boundary states.
//!
//! The pipeline is: [`inflation`] words → [`tiling`] patch →
//! [`dimers::contract`] → [`entanglement`] and fidelity observables, with
//! [`geometry`] supplying Poincaré-disk coordinates for pictures.

pub mod dimers;
pub mod entanglement;
pub mod geometry;
pub mod inflation;
pub mod io;
pub mod tiling;

pub use dimers::{contract, seed_state, DimerState, Logical};
pub use geometry::{DiskPoint, Geodesic, MobiusTransform, TilingParams};
pub use inflation::{Letter, LetterSequence, MqaStack, SubstitutionRule};
pub use tiling::{build_tiling, BoundaryInterval, TilingGraph};
