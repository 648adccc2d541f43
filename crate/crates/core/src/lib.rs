//! Permutation-group engine for checking structural facts about minimal
//! simple groups: derived series and solubility, subnormality, subgroup
//! lattices, and the linear and Suzuki groups that occur as minimal simple
//! groups.

pub mod classification;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod field;
pub mod kernel;
pub mod lattice;

pub use error::{Error, Result};
pub use field::PrimePower;
pub use kernel::{Group, Permutation};
