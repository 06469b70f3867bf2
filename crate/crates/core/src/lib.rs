//! Finite lattices, crisp closed intervals, fuzzy sets and fuzzy intervals, with an
//! exhaustive checker for the lattice laws of the interval constructions.

pub mod cli;
pub mod crisp;
pub mod error;
pub mod fuzzy_interval;
pub mod fuzzy_set;
pub mod grade;
pub mod io;
pub mod laws;
pub mod lattice;

pub use crisp::CrispInterval;
pub use error::{Error, Result};
pub use fuzzy_interval::{FuzzyClass, FuzzyInterval};
pub use fuzzy_set::{CutFamily, ElementSet, FuzzySet};
pub use grade::Grade;
pub use lattice::{Element, FiniteLattice, StandardLattice};
