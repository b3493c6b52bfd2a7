pub mod algebra;
pub mod cli;
pub mod config;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod representation;
pub mod scalars;
pub mod selftest;
pub mod skew;

pub use error::{Error, Result};
