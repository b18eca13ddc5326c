//! Exact computations for the toric orbifold attached to a finite-type Cartan
//! matrix: the fan of cones spanned by negative simple coroots and
//! fundamental coweights, its walls and cohomology, the Weyl group fixed-point
//! combinatorics, and a concrete type-A model of the Peterson variety mapping
//! onto it.
//!
//! All arithmetic is over arbitrary-precision rationals.

pub mod cartan;
pub mod cohomology;
pub mod error;
pub mod fan;
pub mod index_set;
pub mod linalg;
pub mod peterson;
pub mod poly;
pub mod report;
pub mod wall;
pub mod weyl;

pub use cartan::{Basis, CartanMatrix, DynkinType, LatticeVector};
pub use error::{Error, Result};
pub use index_set::IndexSet;
