//! Atoms and Hecke atoms of involutions in the hyperoctahedral group W_n.
//!
//! Elements of W_n are [`SignedPermutation`]s. Atom sets are generated on the
//! inverse side, `A(z)^{-1}`, everywhere; invert explicitly to get `A(z)`.

pub mod census;
pub mod config;
pub mod equivalence;
pub mod error;
pub mod export;
pub mod hecke;
mod numbers;
pub mod orders;
pub mod perm;
pub mod structure;
pub mod tableaux;

pub use error::{Error, ParseErrorKind, Result};
pub use hecke::SignedInvolution;

pub use census::{CensusClass, CensusRow, DyckPath, Step};
pub use equivalence::MoveSystem;
pub use orders::{CoverKind, EdgeKind, HasseDiagram, OrderKind};
pub use perm::{CoxeterElement, SetPermutation, SignedPermutation, Word};
pub use structure::{Matching, NestedData, NestedDescentGraph};
pub use tableaux::Partition;
