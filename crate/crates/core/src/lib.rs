//! Residue representations of Spin(2n,1), SU(n,1) and Sp(n,1).
//!
//! Given a K-type `tau`, the crate branches `tau` to `M`, lists the poles of
//! the Plancherel density attached to each `M`-type, and identifies the
//! irreducible constituents of the residue representation at each pole
//! through infinitesimal characters and the composition series of the
//! principal series with trivial infinitesimal character.

pub mod branching;
pub mod collingwood_tables;
pub mod error;
pub mod exact_coords;
pub mod golden;
pub mod group_data;
pub mod inf_char;
pub mod pforms;
pub mod plancherel;
pub mod resolver;
pub mod weyl_orbits;

pub use error::{Error, Result};
pub use exact_coords::{HalfInt, HalfIntVec, Rational};
pub use group_data::{build_case, build_case_with_limit, CaseId, Family, GroupCase};

pub const SCHEMA_VERSION: &str = "1.0.0";
