use super::homogenize::HomogenizedAlgebra;
use crate::gdu::{pbw_count_up_to, GduAlgebra};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesCheck {
    /// `(q, dim H(A)_q, dim F_q A)`.
    pub per_degree: Vec<(u64, u64, u64)>,
    pub holds: bool,
}

/// Compares `dim H(A)_q`, counted on the leading words of `~𝒢`, with the
/// PBW filtration dimension `dim F_q A` for `q ≤ max_degree`.
pub fn rees_dims(alg: &GduAlgebra, h: &HomogenizedAlgebra, max_degree: u64) -> ReesCheck {
    let hil = h.monomial().hilbert(max_degree).coefficients;
    let w = alg.x2_weight();
    let per_degree: Vec<(u64, u64, u64)> =
        hil.iter().enumerate().map(|(q, &c)| (q as u64, c, pbw_count_up_to(w, q as u64))).collect();
    let holds = per_degree.iter().all(|&(_, a, b)| a == b);
    ReesCheck { per_degree, holds }
}
