//! Permutation-group kernel.

mod chain;
mod group;
mod iso;
mod perm;

pub use chain::StabChain;
pub use group::{ElementTable, Group, SeriesKind, SeriesRecord, ELEMENT_BUDGET};
pub use iso::{
    automorphism_count, find_isomorphism_with_budget, fingerprint, is_isomorphic,
    is_isomorphic_with_budget, Fingerprint, ISO_BUDGET,
};
pub use perm::Permutation;
pub(crate) use perm::gcd;
