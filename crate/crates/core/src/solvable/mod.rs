//! Solvable polynomial algebras: PBW monomials, multiplication through a
//! commutation table, checks of the monomial-ordering and solvability
//! axioms, and left Gröbner bases.

mod algebra;
mod axioms;
mod left_gb;
mod pbw;

pub use algebra::{CommutationRule, Multiplier, PbwDisplay, SolvableAlgebra, SolvableDiagnostics};
pub use axioms::{verify_ordering_axioms, OrderingReport, OrderingViolation};
pub use left_gb::{left_buchberger, nf_left};
pub use pbw::{Exponent, PbwOrder, PbwPoly};
