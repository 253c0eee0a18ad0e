//! Finite group computations on Cayley tables: subgroup lattices,
//! homomorphism search, covering and sectional numbers, 2-cocycles of
//! extensions, and a checking harness for the identities relating them.

pub mod arith;
pub mod cli;
pub mod cohomology;
pub mod elemset;
pub mod error;
pub mod group;
pub mod homsearch;
pub mod invariants;
pub mod limits;
pub mod subgroups;

pub use error::{Error, Result};
pub use limits::Limits;
