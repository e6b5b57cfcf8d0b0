//! Quantum invariants of links colored by SL₂(ℂ) representations at roots
//! of unity, computed as state sums over tangle diagrams, together with the
//! classical Chern–Simons invariant of the same octahedral data.
//!
//! The pipeline: [`diagram`] parses a slice word into combinatorics,
//! [`slcoloring`] propagates a decorated representation and shadow,
//! [`logdata`] picks logarithms, [`quantum`] builds the local tensors and
//! [`evaluator`] contracts them.

pub mod diagram;
pub mod dilog;
pub mod error;
pub mod evaluator;
pub mod fixtures;
pub mod logdata;
pub mod num;
pub mod quantum;
pub mod slcoloring;
pub mod verify;

pub use error::{Error, Result};
