//! Exact field arithmetic and the linear-algebra kernels used everywhere else.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod subspace;

pub use field::{Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use matrix::Matrix;
pub use poly::{factor_polynomial, Factor, Poly};
pub use subspace::{Echelon, Subspace};
