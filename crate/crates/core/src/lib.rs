//! Symmetric superpolynomials in commuting variables `x_i` and anticommuting
//! variables `θ_i`, together with the tableau and Pieri-rule combinatorics of
//! Schur superpolynomials at `q = t = 0` and their duals at `q = t = ∞`.
//!
//! All arithmetic is exact (`BigRational`). The crate only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod dual_tableaux;
pub mod error;
pub mod linalg;
pub mod partition;
pub mod pieri;
pub mod superpartition;
pub mod superpoly;
pub mod tableaux;

pub use error::Error;
pub use partition::Partition;
pub use superpartition::{Diagram, SuperPartition};
pub use superpoly::{Basis, Coeff, Expansion, SuperMonomial, SuperPolynomial};

pub type Result<T> = core::result::Result<T, Error>;
