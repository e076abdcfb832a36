//! Quantum stabilizer codes from duadic constacyclic codes over GF(4).
//!
//! The crate covers splittings of the index set of `x^n - a`, the duadic
//! codes they define, exhaustive and information-set distance searches, and
//! the quantum constructions and product rules built on top.

pub mod arith;
pub mod catalog;
pub mod code;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod quantum;
pub mod splitting;
pub mod tables;
pub mod weights;

pub use error::{Error, Result};
