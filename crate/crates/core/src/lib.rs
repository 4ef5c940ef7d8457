//! Permutation polytopes `P(G)`: the convex hull of the permutation matrices
//! of a group `G <= S_n`.
//!
//! The crate enumerates small permutation groups, finds their indecomposable
//! elements (those that are not a product of two nontrivial members with
//! disjoint supports), and uses them to describe the edges, smallest faces,
//! diameter and exact dimension of `P(G)`, as well as the random walk on `G`
//! whose steps are uniform indecomposables.

pub mod catalog;
pub mod error;
pub mod group;
pub mod indecomp;
pub mod mixing;
pub mod perm;
pub mod polytope;
pub mod rank;
pub mod spec_file;
pub mod stabchain;

#[cfg(test)]
mod oracle;

pub use catalog::CatalogEntry;
pub use error::{Error, Result};
pub use group::{PermutationGroup, DEFAULT_ORDER_CAP};
pub use indecomp::IndecompSet;
pub use perm::{CycleSet, Permutation};
pub use spec_file::GroupSpec;
