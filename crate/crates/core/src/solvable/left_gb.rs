use std::collections::BTreeMap;

use super::algebra::{Multiplier, SolvableAlgebra};
use super::pbw::{Exponent, PbwPoly};
use crate::scalar::Scalar;

/// Remainder of `p` under left division by `basis`: no term of the result
/// is a left multiple of a basis leading monomial.
pub fn nf_left(alg: &SolvableAlgebra, p: &PbwPoly, basis: &[PbwPoly]) -> PbwPoly {
    reduce(alg, &alg.multiplier(), p, basis)
}

fn reduce(alg: &SolvableAlgebra, mul: &Multiplier<'_>, p: &PbwPoly, basis: &[PbwPoly]) -> PbwPoly {
    let order = alg.order();
    let leads: Vec<(Exponent, &PbwPoly)> = basis
        .iter()
        .filter_map(|g| g.leading_exponent(order).map(|e| (e.clone(), g)))
        .collect();
    let mut work: BTreeMap<(u64, Vec<u8>), (Exponent, Scalar)> =
        p.terms().map(|(e, c)| (order.key(e), (e.clone(), c.clone()))).collect();
    let mut rem = PbwPoly::zero();
    while let Some((_, (e, c))) = work.pop_last() {
        let Some((quot, g)) = leads.iter().find_map(|(lm, g)| e.checked_sub(lm).map(|q| (q, *g))) else {
            rem.add_term(e, c);
            continue;
        };
        // quot · g has leading monomial e; cancel c·e with a scalar multiple.
        let t = mul.mul(&PbwPoly::monomial(quot, Scalar::one()), g);
        let lc = t.coeff(&e);
        let factor = -(&c / &lc);
        for (te, tc) in t.terms() {
            if te == &e {
                continue;
            }
            let delta = tc * &factor;
            let key = order.key(te);
            let slot = work.entry(key.clone()).or_insert_with(|| (te.clone(), Scalar::zero()));
            slot.1 += &delta;
            if slot.1.is_zero() {
                work.remove(&key);
            }
        }
    }
    rem
}

/// Left Gröbner basis of the left ideal generated by `gens`: S-polynomials
/// from least common multiples of leading exponents, left division, then
/// inter-reduction. The result is monic and sorted by leading monomial.
pub fn left_buchberger(alg: &SolvableAlgebra, gens: &[PbwPoly]) -> Vec<PbwPoly> {
    let order = alg.order();
    let mul = alg.multiplier();
    let mut basis: Vec<PbwPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic(order)).collect();
    if basis.is_empty() {
        return basis;
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let li = basis[i].leading_exponent(order).expect("nonzero").clone();
        let lj = basis[j].leading_exponent(order).expect("nonzero").clone();
        let lcm = li.lcm(&lj);
        let side = |g: &PbwPoly, lm: &Exponent| {
            let q = lcm.checked_sub(lm).expect("lcm is a multiple");
            mul.mul(&PbwPoly::monomial(q, Scalar::one()), g).monic(order)
        };
        let s = &side(&basis[i], &li) - &side(&basis[j], &lj);
        let r = reduce(alg, &mul, &s, &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic(order));
            pairs.extend((0..k).map(|m| (m, k)));
        }
    }
    inter_reduce(alg, &mul, basis)
}

fn inter_reduce(alg: &SolvableAlgebra, mul: &Multiplier<'_>, basis: Vec<PbwPoly>) -> Vec<PbwPoly> {
    let order = alg.order();
    let mut kept: Vec<PbwPoly> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| order.compare(a.leading_exponent(order).unwrap(), b.leading_exponent(order).unwrap()));
    for g in sorted {
        let lm = g.leading_exponent(order).unwrap();
        if !kept.iter().any(|k| k.leading_exponent(order).unwrap().divides(lm)) {
            kept.push(g);
        }
    }
    let mut out = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<PbwPoly> = kept.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let g = &kept[i];
        let (lm, lc) = g.leading(order).map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let tail = &g.scale(&lc.inv()) - &PbwPoly::monomial(lm.clone(), Scalar::one());
        let tail = reduce(alg, mul, &tail, &others);
        out.push(&PbwPoly::monomial(lm, Scalar::one()) + &tail);
    }
    out.sort_by(|a, b| order.compare(a.leading_exponent(order).unwrap(), b.leading_exponent(order).unwrap()));
    out
}
