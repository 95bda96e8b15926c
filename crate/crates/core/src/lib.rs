//! Wachs and signed Wachs permutations under Bruhat and weak orders.

pub mod bruhat;
pub mod error;
pub mod perm;
pub mod poset;
pub mod qpoly;
pub mod verify;
pub mod wachs;
pub mod weak;

pub use error::{Error, Result};
pub use perm::{CoxeterElement, Kind, Permutation, SignedPermutation};
