//! Exact verification of Huneke's condition for symbolic Rees rings of
//! finite point sets in the projective plane.

pub mod cli;
pub mod config;
pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod parse;
pub mod points;
pub mod poly;
pub mod verifier;

pub use error::{Error, Result};
