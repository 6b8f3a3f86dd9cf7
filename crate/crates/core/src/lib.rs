//! Finite-group computations around the vanishing-off subgroup.
//!
//! The crate builds small finite groups ([`group`]), computes subgroups,
//! commutators, centralizers and sections ([`subgroup`]), the lower central
//! series and the vanishing-off central series with the companion subgroups
//! `Y_i`, `D_i`, `E_i` ([`series`]), exact character tables over cyclotomic
//! integers ([`characters`]), and runs batch verification of the series
//! identities over a corpus of groups ([`corpus`], [`verify`]).

pub mod arith;
pub mod bitset;
pub mod characters;
pub mod corpus;
pub mod error;
pub mod exec;
pub mod group;
pub mod linalg;
pub mod series;
pub mod subgroup;
pub mod verify;

#[cfg(test)]
mod testing;

pub use error::{Error, Result};
pub use exec::Mode;
pub use group::{builtin::build_builtin, quotient::quotient, Element, Family, GroupRep, Limits};
pub use subgroup::SubgroupSet;
