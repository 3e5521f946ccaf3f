use super::params::{GduParams, WeightScheme};
use crate::error::{Error, Result};
use crate::freealg::{is_groebner, normal_word_counts, FreePoly, GroebnerCertificate, RelationSet, WeightedOrder, Word};
use crate::scalar::Scalar;
use crate::solvable::{CommutationRule, Exponent, PbwOrder, PbwPoly, SolvableAlgebra};

/// Free-algebra indices of the generators.
pub const X1: usize = 0;
pub const X2: usize = 1;
pub const X3: usize = 2;

/// PBW positions, in basis order `a2^i a1^j a3^l`.
pub const PBW_POSITIONS: [usize; 3] = [X2, X1, X3];

/// A generalized down-up algebra `K<X1,X2,X3>/(g31, g12, g32)` with
///
/// ```text
/// g31 = X3X1 − λ X1X3 + γ X3
/// g12 = X1X2 − λ X2X1 + γ X2
/// g32 = X3X2 − ω X2X3 + f(X1)
/// ```
///
/// ordered by graded lex with `X2 < X1 < X3`. Construction certifies that
/// the three relations form a Gröbner basis.
#[derive(Debug, Clone)]
pub struct GduAlgebra {
    params: GduParams,
    scheme: WeightScheme,
    order: WeightedOrder,
    g31: FreePoly,
    g12: FreePoly,
    g32: FreePoly,
    relations: RelationSet,
    certificate: GroebnerCertificate,
}

/// Per-degree comparison of normal-word counts with PBW exponent counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwCheck {
    /// `(degree, normal words, exponent triples)`.
    pub per_degree: Vec<(u64, u64, u64)>,
    pub holds: bool,
}

/// Exponent triples `(i, j, l)` with `w(i + l) + j = q`.
pub fn pbw_count_exact(x2_weight: u64, q: u64) -> u64 {
    (0..=q / x2_weight).map(|s| s + 1).sum()
}

/// Exponent triples `(i, j, l)` with `w(i + l) + j ≤ q`, i.e. `dim F_q A`.
pub fn pbw_count_up_to(x2_weight: u64, q: u64) -> u64 {
    (0..=q).map(|d| pbw_count_exact(x2_weight, d)).sum()
}

pub fn gdu_order(weights: [u32; 3]) -> Result<WeightedOrder> {
    WeightedOrder::new(&["X1", "X2", "X3"], &weights, &[X2, X1, X3])
}

/// The three defining relations for `params`, in the order g31, g12, g32.
pub fn defining_relations(params: &GduParams) -> [FreePoly; 3] {
    let w = Word::from_letters;
    let one = Scalar::one();
    let g31 = FreePoly::from_terms([(w(&[X3, X1]), one.clone()), (w(&[X1, X3]), -&params.lambda), (w(&[X3]), params.gamma.clone())]);
    let g12 = FreePoly::from_terms([(w(&[X1, X2]), one.clone()), (w(&[X2, X1]), -&params.lambda), (w(&[X2]), params.gamma.clone())]);
    let mut g32 = FreePoly::from_terms([(w(&[X3, X2]), one), (w(&[X2, X3]), -&params.omega)]);
    for (i, c) in params.f_coeffs().iter().enumerate() {
        g32.add_term(Word::letter(X1).pow(i), c.clone());
    }
    [g31, g12, g32]
}

impl GduAlgebra {
    pub fn build(params: GduParams, scheme: WeightScheme) -> Result<GduAlgebra> {
        let n = params.degree_f();
        scheme.check(n)?;
        let order = gdu_order(scheme.weights(n))?;
        let [g31, g12, g32] = defining_relations(&params);
        let relations = RelationSet::new(&[g31.clone(), g12.clone(), g32.clone()], &order)?;
        let certificate = is_groebner(&relations)?;
        if let Some(w) = &certificate.witness {
            return Err(Error::Internal(format!(
                "defining relations for {params} ({scheme}) are not a Gröbner basis: composition at {} leaves {}",
                order.format_word(&w.s_element.ambiguity),
                w.remainder.display(&order)
            )));
        }
        Ok(GduAlgebra { params, scheme, order, g31, g12, g32, relations, certificate })
    }

    pub fn params(&self) -> &GduParams {
        &self.params
    }

    pub fn scheme(&self) -> WeightScheme {
        self.scheme
    }

    pub fn order(&self) -> &WeightedOrder {
        &self.order
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    /// `[("g31", g31), ("g12", g12), ("g32", g32)]`.
    pub fn named_relations(&self) -> [(&'static str, &FreePoly); 3] {
        [("g31", &self.g31), ("g12", &self.g12), ("g32", &self.g32)]
    }

    pub fn certificate(&self) -> &GroebnerCertificate {
        &self.certificate
    }

    pub fn degree_f(&self) -> usize {
        self.params.degree_f()
    }

    /// Weighted degree of `X2` (and `X3`) under the scheme.
    pub fn x2_weight(&self) -> u64 {
        self.order.weight(X2) as u64
    }

    pub fn normal_form(&self, p: &FreePoly) -> Result<FreePoly> {
        self.relations.normal_form(p)
    }

    /// Compares, for every weighted degree up to `max_degree`, the number of
    /// normal words with the number of PBW monomials `a2^i a1^j a3^l`.
    pub fn check_pbw(&self, max_degree: u64) -> PbwCheck {
        let counts = normal_word_counts(&self.relations, max_degree);
        let w = self.x2_weight();
        let per_degree: Vec<(u64, u64, u64)> =
            counts.iter().enumerate().map(|(q, &c)| (q as u64, c, pbw_count_exact(w, q as u64))).collect();
        let holds = per_degree.iter().all(|&(_, a, b)| a == b);
        PbwCheck { per_degree, holds }
    }

    /// The commutation table on `(a2, a1, a3)` with weights `(n, 1, n)`,
    /// `n = deg f`, and graded lex `a2 < a1 < a3`:
    ///
    /// ```text
    /// a1a2 = λ a2a1 − γ a2
    /// a3a2 = ω a2a3 − f(a1)
    /// a3a1 = λ a1a3 − γ a3
    /// ```
    pub fn to_solvable(&self) -> Result<SolvableAlgebra> {
        let p = &self.params;
        let n = p.degree_f();
        if p.lambda.is_zero() || p.omega.is_zero() {
            return Err(Error::precondition(format!("λω ≠ 0 fails (λ = {}, ω = {})", p.lambda, p.omega)));
        }
        if n == 0 {
            return Err(Error::precondition("deg f ≥ 1 fails"));
        }
        let weights = [n as u32, 1, n as u32];
        let e = |v: [u32; 3]| Exponent::new(v.to_vec());
        let minus_gamma = -&p.gamma;
        let f_tail = PbwPoly::from_terms(p.f_coeffs().iter().enumerate().map(|(i, c)| (e([0, i as u32, 0]), -c)));
        let rules = vec![
            CommutationRule { j: 1, i: 0, lambda: p.lambda.clone(), f: PbwPoly::monomial(e([1, 0, 0]), minus_gamma.clone()) },
            CommutationRule { j: 2, i: 0, lambda: p.omega.clone(), f: f_tail },
            CommutationRule { j: 2, i: 1, lambda: p.lambda.clone(), f: PbwPoly::monomial(e([0, 0, 1]), minus_gamma) },
        ];
        let alg = SolvableAlgebra::new(&["X2", "X1", "X3"], &weights, PbwOrder::GradedLex { weights: weights.to_vec() }, rules)?;
        let diag = alg.verify_solvable();
        if !diag.holds {
            return Err(Error::Internal(format!("commutation table fails the solvable axioms: {}", diag.issues.join("; "))));
        }
        Ok(alg)
    }

    /// `a2^i a1^j a3^l ↦ X2^i X1^j X3^l`.
    pub fn pbw_to_free(&self, p: &PbwPoly) -> FreePoly {
        pbw_to_free(p, &PBW_POSITIONS)
    }

    /// Inverse of [`GduAlgebra::pbw_to_free`] on normal forms.
    pub fn free_to_pbw(&self, p: &FreePoly) -> Result<PbwPoly> {
        free_to_pbw(p, &PBW_POSITIONS)
    }
}

/// Renders a relation with its leading word first and the swapped word
/// second, e.g. `X3·X2 − ω·X2·X3 + a·X1^2`, matching the usual layout.
pub fn relation_text(p: &FreePoly, order: &WeightedOrder) -> String {
    let Some(lw) = p.leading_word(order) else { return "0".to_string() };
    let mut first = vec![lw.clone()];
    if lw.len() == 2 {
        let l: Vec<usize> = lw.letters().collect();
        first.push(Word::from_letters(&[l[1], l[0]]));
    }
    p.display_with_first(order, &first).to_string()
}

/// Maps exponent position `k` to free generator `letters[k]`.
pub fn pbw_to_free(p: &PbwPoly, letters: &[usize]) -> FreePoly {
    FreePoly::from_terms(p.terms().map(|(e, c)| {
        let word: Vec<usize> = e.word().into_iter().map(|pos| letters[pos as usize]).collect();
        (Word::from_letters(&word), c.clone())
    }))
}

/// Reads each word as `letters[0]^e0 letters[1]^e1 ⋯`; fails on words not
/// of that shape.
pub fn free_to_pbw(p: &FreePoly, letters: &[usize]) -> Result<PbwPoly> {
    let mut out = PbwPoly::zero();
    for (w, c) in p.terms() {
        let mut exps = vec![0u32; letters.len()];
        let mut pos = 0;
        for l in w.letters() {
            let k = letters.iter().position(|&x| x == l).ok_or_else(|| Error::input(format!("generator {l} has no PBW position")))?;
            if k < pos {
                return Err(Error::input(format!("word {w:?} is not an ordered PBW monomial")));
            }
            pos = k;
            exps[k] += 1;
        }
        out.add_term(Exponent::new(exps), c.clone());
    }
    Ok(out)
}
