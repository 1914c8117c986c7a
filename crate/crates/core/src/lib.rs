//! Exact lattice computations for zero-twisting contact structures on small
//! Seifert fibred spaces: plumbing graphs, the full-path algorithm, the magic
//! C vector of a contact surgery presentation, and tightness verdicts.

pub mod contact;
pub mod embedding;
pub mod error;
pub mod fullpath;
pub mod invariants;
pub mod linalg;
pub mod notation;
pub mod plumbing;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
