use super::assoc::require_nonconstant_f;
use super::monomial::MonomialAlgebra;
use crate::error::{Error, Result};
use crate::freealg::{is_groebner, FreePoly, GroebnerCertificate, RelationSet, WeightedOrder, Word};
use crate::gdu::{free_to_pbw, GduAlgebra, X1, X2, X3};
use crate::scalar::Scalar;
use crate::solvable::{CommutationRule, PbwOrder, SolvableAlgebra};

/// Index of the homogenizing variable.
pub const T: usize = 3;

/// Left-multiplies each weighted component of degree `q_i` by `T^{q_m − q_i}`,
/// where `q_m` is the top degree. `T` must have weight 1 in `order`.
pub fn homogenize_poly(f: &FreePoly, order: &WeightedOrder, t: usize) -> Result<FreePoly> {
    if f.is_zero() {
        return Err(Error::input("cannot homogenize the zero polynomial"));
    }
    if order.weight(t) != 1 {
        return Err(Error::input(format!("{} must have weight 1", order.name(t))));
    }
    let top = f.degree(order).expect("nonzero");
    let tw = Word::letter(t);
    Ok(FreePoly::from_terms(f.terms().map(|(w, c)| {
        let pad = (top - order.degree(w)) as usize;
        (tw.pow(pad).concat(w), c.clone())
    })))
}

/// The homogenized algebra `H(A) = K<X1,X2,X3,T>/(~𝒢)`, ordered graded lex
/// with `T < X2 < X1 < X3` and `T` of weight 1.
#[derive(Debug, Clone)]
pub struct HomogenizedAlgebra {
    lambda: Scalar,
    omega: Scalar,
    degree_f: usize,
    order: WeightedOrder,
    named: Vec<(&'static str, FreePoly)>,
    relations: RelationSet,
    certificate: GroebnerCertificate,
}

pub fn homogenized_order(base: &WeightedOrder) -> Result<WeightedOrder> {
    let w = base.weights();
    WeightedOrder::new(&["X1", "X2", "X3", "T"], &[w[X1], w[X2], w[X3], 1], &[T, X2, X1, X3])
}

pub fn homogenize_algebra(alg: &GduAlgebra) -> Result<HomogenizedAlgebra> {
    require_nonconstant_f(alg)?;
    let order = homogenized_order(alg.order())?;
    let mut named: Vec<(&'static str, FreePoly)> = Vec::new();
    for (name, p) in alg.named_relations() {
        named.push((name, homogenize_poly(p, &order, T)?));
    }
    for (name, x) in [("c1", X1), ("c2", X2), ("c3", X3)] {
        let xt = FreePoly::word(Word::from_letters(&[x, T]));
        let tx = FreePoly::word(Word::from_letters(&[T, x]));
        named.push((name, &xt - &tx));
    }
    let polys: Vec<FreePoly> = named.iter().map(|(_, p)| p.clone()).collect();
    let relations = RelationSet::new(&polys, &order)?;
    let certificate = is_groebner(&relations)?;
    if let Some(w) = &certificate.witness {
        return Err(Error::Internal(format!(
            "homogenized relations are not a Gröbner basis: composition at {} leaves {}",
            order.format_word(&w.s_element.ambiguity),
            w.remainder.display(&order)
        )));
    }
    let p = alg.params();
    Ok(HomogenizedAlgebra {
        lambda: p.lambda.clone(),
        omega: p.omega.clone(),
        degree_f: p.degree_f(),
        order,
        named,
        relations,
        certificate,
    })
}

impl HomogenizedAlgebra {
    pub fn order(&self) -> &WeightedOrder {
        &self.order
    }

    /// `~g31, ~g12, ~g32` followed by the commutators `c_i = X_iT − TX_i`.
    pub fn named(&self) -> &[(&'static str, FreePoly)] {
        &self.named
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn certificate(&self) -> &GroebnerCertificate {
        &self.certificate
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.relations.leading_words()
    }

    pub fn monomial(&self) -> MonomialAlgebra {
        MonomialAlgebra::from_relations(&self.relations)
    }

    /// `T ↦ 1` applied to `~g31, ~g12, ~g32`.
    pub fn dehomogenize(&self) -> Vec<(&'static str, FreePoly)> {
        self.named[..3].iter().map(|(n, p)| (*n, p.erase_letter(T))).collect()
    }

    /// A printed variant of `~g12` with `γTX3` in place of `γTX2`, and a note
    /// explaining why the computed form is the right one.
    pub fn g12_discrepancy(&self) -> (FreePoly, String) {
        let g12 = &self.named[1].1;
        let gamma = g12.coeff(&Word::from_letters(&[T, X2]));
        let mut variant = g12.clone();
        variant.add_term(Word::from_letters(&[T, X2]), -&gamma);
        variant.add_term(Word::from_letters(&[T, X3]), gamma.clone());
        let note = if gamma.is_zero() {
            "γ = 0, so ~g12 has no T-term and the γTX2 / γTX3 variants coincide".to_string()
        } else {
            format!(
                "~g12 = {} by definition; the variant {} (γTX3 in place of γTX2) does not dehomogenize to g12 \
                 and is not used",
                g12.display(&self.order),
                variant.display(&self.order)
            )
        };
        (variant, note)
    }

    /// Commutation table on `(T, a2, a1, a3)` with `T` central and weights
    /// `(1, n, 1, n)`, `n = deg f`.
    pub fn to_solvable(&self) -> Result<SolvableAlgebra> {
        if self.lambda.is_zero() || self.omega.is_zero() {
            return Err(Error::precondition(format!("λω ≠ 0 fails (λ = {}, ω = {})", self.lambda, self.omega)));
        }
        let n = self.degree_f as u32;
        let weights = [1, n, 1, n];
        let letters = [T, X2, X1, X3];
        let pos = |x: usize| letters.iter().position(|&l| l == x).expect("known generator");
        let mut rules = Vec::new();
        for (_, p) in &self.named {
            let (lw, lc) = p.leading(&self.order)?;
            let l: Vec<usize> = lw.letters().collect();
            let (j, i) = (l[0], l[1]);
            let swapped = Word::from_letters(&[i, j]);
            let tail = &p.scale(&lc.inv()) - &FreePoly::word(lw.clone());
            let lambda = -tail.coeff(&swapped);
            let mut rest = tail.clone();
            rest.add_term(swapped, lambda.clone());
            let f = free_to_pbw(&rest.scale(&-Scalar::one()), &letters)?;
            rules.push(CommutationRule { j: pos(j), i: pos(i), lambda, f });
        }
        let alg = SolvableAlgebra::new(&["T", "X2", "X1", "X3"], &weights, PbwOrder::GradedLex { weights: weights.to_vec() }, rules)?;
        let diag = alg.verify_solvable();
        if !diag.holds {
            return Err(Error::Internal(format!("homogenized table fails the solvable axioms: {}", diag.issues.join("; "))));
        }
        Ok(alg)
    }
}

/// `true` iff all weights are 1 and every relation is homogeneous of degree 2.
pub fn quadratic_check(rels: &RelationSet) -> bool {
    let order = rels.order();
    order.weights().iter().all(|&w| w == 1)
        && rels.relations().iter().all(|r| r.poly().is_homogeneous(order) && r.poly().degree(order) == Some(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gdu::{GduParams, Preset, WeightScheme};

    fn sl2() -> GduAlgebra {
        crate::gdu::preset(&Preset::Sl2, WeightScheme::AllOnes).unwrap()
    }

    #[test]
    fn sl2_homogenized() {
        let alg = sl2();
        let h = homogenize_algebra(&alg).unwrap();
        assert_eq!(h.relations().len(), 6);
        assert!(h.certificate().holds);
        let shown: Vec<String> = h.named().iter().map(|(_, p)| p.display(h.order()).to_string()).collect();
        assert_eq!(shown[0], "X3·X1 − X1·X3 + 2·T·X3");
        assert_eq!(shown[1], "X1·X2 − X2·X1 + 2·T·X2");
        assert_eq!(shown[2], "X3·X2 − X2·X3 − T·X1");
        assert_eq!(shown[3], "X1·T − T·X1");
        let lms: Vec<String> = h.leading_words().iter().map(|w| h.order().format_word(w)).collect();
        assert_eq!(lms, ["X2·T", "X1·T", "X1·X2", "X3·T", "X3·X2", "X3·X1"]);
    }

    #[test]
    fn dehomogenization_recovers() {
        let alg = sl2();
        let h = homogenize_algebra(&alg).unwrap();
        for ((_, back), (_, orig)) in h.dehomogenize().iter().zip(alg.named_relations()) {
            assert_eq!(back, orig);
        }
        let (variant, note) = h.g12_discrepancy();
        assert_ne!(variant.erase_letter(T), *alg.named_relations()[1].1);
        assert!(note.contains("γTX3"));
    }

    #[test]
    fn weighted_padding() {
        let p = GduParams::new(Scalar::one(), Scalar::one(), Scalar::zero(), vec![Scalar::one(), Scalar::zero(), Scalar::from_int(3)])
            .unwrap();
        let alg = GduAlgebra::build(p, WeightScheme::DegF).unwrap();
        let h = homogenize_algebra(&alg).unwrap();
        // 2n = 4: 3·T^2·X1^2 + T^4
        assert_eq!(h.named()[2].1.display(h.order()).to_string(), "X3·X2 − X2·X3 + 3·T^2·X1^2 + T^4");
        assert!(!quadratic_check(h.relations()));
    }

    #[test]
    fn homogeneous_input_unchanged() {
        let order = WeightedOrder::new(&["X1", "X2", "X3", "T"], &[1, 1, 1, 1], &[3, 1, 0, 2]).unwrap();
        let f = FreePoly::from_terms([(Word::from_letters(&[2, 0]), Scalar::one()), (Word::from_letters(&[0, 2]), Scalar::from_int(-1))]);
        assert_eq!(homogenize_poly(&f, &order, T).unwrap(), f);
        assert!(homogenize_poly(&FreePoly::zero(), &order, T).is_err());
    }

    #[test]
    fn quadratic_all_ones() {
        let h = homogenize_algebra(&sl2()).unwrap();
        assert!(quadratic_check(h.relations()));
    }

    #[test]
    fn solvable_sl2_homogenized() {
        let h = homogenize_algebra(&sl2()).unwrap();
        let s = h.to_solvable().unwrap();
        assert!(s.rule(1, 0).is_some_and(|r| r.lambda.is_one() && r.f.is_zero()));
        assert!(s.verify_solvable().holds);
    }
}
