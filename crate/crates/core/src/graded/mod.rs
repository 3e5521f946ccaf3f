//! Associated graded algebras, homogenization by a central variable `T`,
//! Rees dimensions, Hilbert series and growth of monomial algebras.

mod assoc;
mod homogenize;
mod monomial;
mod rees;
mod series;

pub use assoc::{assoc_graded, leading_homogeneous_set, AssocGraded, LadderRow};
pub use homogenize::{homogenize_algebra, homogenize_poly, homogenized_order, quadratic_check, HomogenizedAlgebra, T};
pub use monomial::{Growth, HilbertData, MonomialAlgebra, UfnGraph};
pub use rees::{rees_dims, ReesCheck};
pub use series::{product_series, product_series_text};

use crate::error::Result;
use crate::gdu::GduAlgebra;
use crate::solvable::SolvableAlgebra;

/// Solvable structure on the homogenized algebra, `T` central.
pub fn solvable_homogenized(h: &HomogenizedAlgebra) -> Result<SolvableAlgebra> {
    h.to_solvable()
}

/// The monomial algebra on `LM(LH(𝒢))`.
pub fn assoc_monomial(alg: &GduAlgebra) -> Result<MonomialAlgebra> {
    Ok(MonomialAlgebra::from_relations(assoc_graded(alg)?.relations()))
}
