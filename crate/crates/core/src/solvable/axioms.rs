use std::cmp::Ordering;
use std::collections::HashMap;

use super::algebra::SolvableAlgebra;
use super::pbw::{Exponent, PbwOrder};

/// A concrete failure of one of the three monomial-ordering conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingViolation {
    /// 1, 2 or 3.
    pub condition: u8,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingReport {
    pub holds: bool,
    pub bound: u64,
    pub monomials: usize,
    pub instances_checked: usize,
    /// Instances whose product was zero or had leading monomial 1. The
    /// conditions exempt these; they never occur for products of nonzero
    /// monomials in a domain.
    pub degenerate_skipped: usize,
    pub violation: Option<OrderingViolation>,
}

/// Exhaustively checks, over all PBW monomials of weighted degree at most
/// `bound` (under the algebra's weights):
///
/// 1. `order` is a strict total order on them (so it well-orders the finite set);
/// 2. `β ≠ γ = LM(a^α a^β a^η) ≠ 1` implies `β ≺ γ`;
/// 3. `α ≺ β` implies `LM(a^γ a^α a^η) ≺ LM(a^γ a^β a^η)`.
///
/// Products are computed in `alg`; only `order` is under test.
pub fn verify_ordering_axioms(alg: &SolvableAlgebra, order: &PbwOrder, bound: u64) -> OrderingReport {
    let weights = alg.weights();
    let mut monos = Exponent::all_up_to(weights, bound);
    let mut report = OrderingReport {
        holds: true,
        bound,
        monomials: monos.len(),
        instances_checked: 0,
        degenerate_skipped: 0,
        violation: None,
    };
    let fmt = |e: &Exponent| alg.format_exponent(e);
    let fail = |mut r: OrderingReport, condition: u8, description: String| {
        r.holds = false;
        r.violation = Some(OrderingViolation { condition, description });
        r
    };

    monos.sort_by(|a, b| order.compare(a, b));
    for pair in monos.windows(2) {
        report.instances_checked += 1;
        if order.compare(&pair[0], &pair[1]) != Ordering::Less {
            let d = format!("{} and {} are not strictly ordered", fmt(&pair[0]), fmt(&pair[1]));
            return fail(report, 1, d);
        }
    }

    let mul = alg.multiplier();
    let mut lm_cache: HashMap<(Exponent, Exponent, Exponent), Option<Exponent>> = HashMap::new();
    let mut lm3 = |a: &Exponent, b: &Exponent, c: &Exponent| -> Option<Exponent> {
        lm_cache
            .entry((a.clone(), b.clone(), c.clone()))
            .or_insert_with(|| {
                let ab = mul.mul_mono(a, b);
                let abc = mul.mul(&ab, &super::pbw::PbwPoly::monomial(c.clone(), crate::scalar::Scalar::one()));
                abc.leading_exponent(order).cloned()
            })
            .clone()
    };
    let deg = |e: &Exponent| e.degree(weights);

    for alpha in &monos {
        for beta in &monos {
            for eta in &monos {
                if deg(alpha) + deg(beta) + deg(eta) > bound {
                    continue;
                }
                report.instances_checked += 1;
                match lm3(alpha, beta, eta) {
                    Some(gamma) if !gamma.is_one() => {
                        if &gamma != beta && order.compare(beta, &gamma) != Ordering::Less {
                            let d = format!(
                                "LM({}·{}·{}) = {} but {} is not below it",
                                fmt(alpha),
                                fmt(beta),
                                fmt(eta),
                                fmt(&gamma),
                                fmt(beta)
                            );
                            return fail(report, 2, d);
                        }
                    }
                    _ => report.degenerate_skipped += 1,
                }
            }
        }
    }

    for (ia, alpha) in monos.iter().enumerate() {
        for beta in &monos[ia + 1..] {
            for gamma in &monos {
                for eta in &monos {
                    let outer = deg(gamma) + deg(eta);
                    if outer + deg(alpha).max(deg(beta)) > bound {
                        continue;
                    }
                    report.instances_checked += 1;
                    let lo = lm3(gamma, alpha, eta);
                    let hi = lm3(gamma, beta, eta);
                    match (lo, hi) {
                        (Some(lo), Some(hi)) if !hi.is_one() => {
                            if order.compare(&lo, &hi) != Ordering::Less {
                                let d = format!(
                                    "{} ≺ {} but LM({}·{}·{}) = {} is not below LM({}·{}·{}) = {}",
                                    fmt(alpha),
                                    fmt(beta),
                                    fmt(gamma),
                                    fmt(alpha),
                                    fmt(eta),
                                    fmt(&lo),
                                    fmt(gamma),
                                    fmt(beta),
                                    fmt(eta),
                                    fmt(&hi)
                                );
                                return fail(report, 3, d);
                            }
                        }
                        _ => report.degenerate_skipped += 1,
                    }
                }
            }
        }
    }
    report
}
