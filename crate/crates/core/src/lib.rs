//! Exact computation of annular skein invariants of braid closures and
//! the homology of their evaluated Koszul cubes.

pub mod annular;
pub mod cube;
pub mod error;
pub mod exact;
pub mod groupalg;
pub mod shapes;
pub mod hecke;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
