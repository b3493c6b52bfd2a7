//! Linear algebra helpers shared by the module constructions.

pub mod dense;
pub mod laurent;
pub mod polymodp;
pub mod sparse;
pub mod unipoly;

pub use dense::{Matrix, RowSpace};
pub use laurent::Laurent;
pub use unipoly::{det, gcd, invariant_factors, UniPoly};
