//! Computing with finite p-groups given by weighted power-conjugate
//! presentations: collection, the weighted consistency test, whole-group
//! analysis by enumeration, automorphism search, and the quadratic-map
//! invariant that separates the `H_n^eps` families.

pub mod analysis;
pub mod automorphism;
pub mod consistency;
pub mod error;
pub mod families;
pub mod pc;
pub mod quadform;
pub mod report;

pub use error::{PcError, Result};
