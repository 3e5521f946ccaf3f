//! Generalized down-up algebras `K<X1,X2,X3>/(g31, g12, g32)` over the
//! rationals, with machinery to certify their Gröbner presentations, do PBW
//! arithmetic in them, and study their associated graded, homogenized and
//! Rees structures.

pub mod error;
pub mod expr;
pub mod freealg;
pub mod gdu;
pub mod graded;
pub mod scalar;
pub mod solvable;

pub use error::{Error, Result};
pub use scalar::Scalar;
