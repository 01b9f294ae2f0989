//! Ideal theory of L-subrings: lattice-valued subrings of finite commutative
//! rings over finite lattices.
//!
//! The crate computes radicals, semiprime radicals and prime radicals of
//! ideals, builds and checks primary decompositions, and sweeps small
//! instances exhaustively to check the structural results relating them.

pub mod decomp;
pub mod elemset;
pub mod error;
pub mod finring;
pub mod fixtures;
pub mod lattice;
pub mod lcore;
pub mod radical;
pub mod verify;

pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use finring::FiniteRing;
pub use lattice::{Classification, FiniteLattice, Level};
pub use lcore::{Ideal, LRing, LSubset};
