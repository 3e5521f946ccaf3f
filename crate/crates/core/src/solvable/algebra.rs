use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use super::pbw::{Exponent, PbwOrder, PbwPoly};
use crate::error::{Error, Result};
use crate::freealg::write_terms;
use crate::scalar::Scalar;

/// `a_j a_i = lambda · a_i a_j + f` for generator positions `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationRule {
    pub j: usize,
    pub i: usize,
    pub lambda: Scalar,
    pub f: PbwPoly,
}

/// An algebra with PBW basis `a_0^e_0 ⋯ a_{n-1}^e_{n-1}` presented by one
/// commutation rule per pair of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvableAlgebra {
    names: Vec<String>,
    weights: Vec<u32>,
    order: PbwOrder,
    /// `rules[j][i]` for `i < j`.
    rules: Vec<Vec<Option<CommutationRule>>>,
}

/// Outcome of checking the solvable-algebra axioms on the commutation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvableDiagnostics {
    pub holds: bool,
    pub rules_checked: usize,
    pub issues: Vec<String>,
}

impl SolvableAlgebra {
    pub fn new(names: &[&str], weights: &[u32], order: PbwOrder, rules: Vec<CommutationRule>) -> Result<SolvableAlgebra> {
        let n = names.len();
        if weights.len() != n {
            return Err(Error::input("one weight per generator required"));
        }
        if weights.contains(&0) {
            return Err(Error::input("generator weights must be positive"));
        }
        let mut table: Vec<Vec<Option<CommutationRule>>> = (0..n).map(|j| vec![None; j]).collect();
        for rule in rules {
            if !(rule.i < rule.j && rule.j < n) {
                return Err(Error::input(format!("rule positions ({}, {}) out of range", rule.j, rule.i)));
            }
            if rule.f.terms().any(|(e, _)| e.len() != n) {
                return Err(Error::input("rule tail uses an exponent of the wrong length"));
            }
            let (j, i) = (rule.j, rule.i);
            if table[j][i].replace(rule).is_some() {
                return Err(Error::input(format!("duplicate rule for pair ({j}, {i})")));
            }
        }
        Ok(SolvableAlgebra { names: names.iter().map(|s| s.to_string()).collect(), weights: weights.to_vec(), order, rules: table })
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> &PbwOrder {
        &self.order
    }

    pub fn rule(&self, j: usize, i: usize) -> Option<&CommutationRule> {
        self.rules.get(j).and_then(|row| row.get(i)).and_then(|r| r.as_ref())
    }

    pub fn rules(&self) -> impl Iterator<Item = &CommutationRule> {
        self.rules.iter().flatten().flatten()
    }

    pub fn generator(&self, position: usize) -> PbwPoly {
        PbwPoly::generator(self.num_generators(), position)
    }

    pub fn one(&self) -> PbwPoly {
        PbwPoly::constant(self.num_generators(), Scalar::one())
    }

    /// Every `λ_ji` is nonzero and every nonzero `f_ji` has leading monomial
    /// below `a_i a_j`.
    pub fn verify_solvable(&self) -> SolvableDiagnostics {
        let n = self.num_generators();
        let mut issues = Vec::new();
        let mut rules_checked = 0;
        for j in 0..n {
            for i in 0..j {
                let Some(rule) = self.rule(j, i) else {
                    issues.push(format!("missing rule for {}·{}", self.names[j], self.names[i]));
                    continue;
                };
                rules_checked += 1;
                if rule.lambda.is_zero() {
                    issues.push(format!("{}·{}: scalar λ is zero", self.names[j], self.names[i]));
                }
                let target = Exponent::unit(n, i).add(&Exponent::unit(n, j));
                if let Some(lm) = rule.f.leading_exponent(&self.order) {
                    if self.order.compare(lm, &target) != std::cmp::Ordering::Less {
                        issues.push(format!(
                            "{}·{}: leading monomial {} of the tail is not below {}·{}",
                            self.names[j],
                            self.names[i],
                            self.format_exponent(lm),
                            self.names[i],
                            self.names[j]
                        ));
                    }
                }
            }
        }
        SolvableDiagnostics { holds: issues.is_empty(), rules_checked, issues }
    }

    /// A multiplication context with a memo table for monomial products.
    pub fn multiplier(&self) -> Multiplier<'_> {
        Multiplier { alg: self, cache: RefCell::new(HashMap::new()) }
    }

    pub fn multiply(&self, p: &PbwPoly, q: &PbwPoly) -> PbwPoly {
        self.multiplier().mul(p, q)
    }

    pub fn format_exponent(&self, e: &Exponent) -> String {
        let parts: Vec<String> = e
            .as_slice()
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(p, &k)| if k == 1 { self.names[p].clone() } else { format!("{}^{k}", self.names[p]) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("·")
        }
    }

    pub fn display<'a>(&'a self, p: &'a PbwPoly) -> PbwDisplay<'a> {
        PbwDisplay { alg: self, poly: p }
    }
}

pub struct PbwDisplay<'a> {
    alg: &'a SolvableAlgebra,
    poly: &'a PbwPoly,
}

impl fmt::Display for PbwDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, Scalar)> = self
            .poly
            .sorted_terms(self.alg.order())
            .into_iter()
            .map(|(e, c)| (if e.is_one() { String::new() } else { self.alg.format_exponent(e) }, c.clone()))
            .collect();
        write_terms(f, &terms)
    }
}

/// Memoising product evaluator. The cache is private to one value, so
/// products stay pure functions of their inputs.
pub struct Multiplier<'a> {
    alg: &'a SolvableAlgebra,
    cache: RefCell<HashMap<(Exponent, usize), PbwPoly>>,
}

impl Multiplier<'_> {
    pub fn mul(&self, p: &PbwPoly, q: &PbwPoly) -> PbwPoly {
        let mut out = PbwPoly::zero();
        for (b, cb) in q.terms() {
            let right = self.mul_poly_mono(p, b);
            out.add_scaled(&right, cb);
        }
        out
    }

    pub fn mul_mono(&self, a: &Exponent, b: &Exponent) -> PbwPoly {
        self.mul_poly_mono(&PbwPoly::monomial(a.clone(), Scalar::one()), b)
    }

    fn mul_poly_mono(&self, p: &PbwPoly, b: &Exponent) -> PbwPoly {
        let mut cur = p.clone();
        for (pos, &k) in b.as_slice().iter().enumerate() {
            for _ in 0..k {
                cur = self.mul_poly_gen(&cur, pos);
            }
        }
        cur
    }

    fn mul_poly_gen(&self, p: &PbwPoly, k: usize) -> PbwPoly {
        let mut out = PbwPoly::zero();
        for (a, c) in p.terms() {
            out.add_scaled(&self.mul_mono_gen(a, k), c);
        }
        out
    }

    /// `a^alpha · a_k`: move `a_k` left past every larger generator using the
    /// commutation rules.
    fn mul_mono_gen(&self, alpha: &Exponent, k: usize) -> PbwPoly {
        let last = alpha.as_slice().iter().rposition(|&e| e > 0);
        let j = match last {
            Some(j) if j > k => j,
            _ => return PbwPoly::monomial(alpha.with(k, 1), Scalar::one()),
        };
        if let Some(hit) = self.cache.borrow().get(&(alpha.clone(), k)) {
            return hit.clone();
        }
        let rule = self.alg.rule(j, k).unwrap_or_else(|| panic!("no commutation rule for pair ({j}, {k})"));
        let rest = alpha.with(j, -1);
        // a^rest · a_j · a_k = λ (a^rest · a_k) · a_j + a^rest · f
        let moved = self.mul_mono_gen(&rest, k);
        let mut out = self.mul_poly_gen(&moved, j).scale(&rule.lambda);
        let rest_poly = PbwPoly::monomial(rest, Scalar::one());
        out.add_scaled(&self.mul(&rest_poly, &rule.f), &Scalar::one());
        self.cache.borrow_mut().insert((alpha.clone(), k), out.clone());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Exponent {
        Exponent::new(v.to_vec())
    }

    /// U(sl2) on positions (a2, a1, a3): a1a2 = a2a1 − 2a2,
    /// a3a2 = a2a3 + a1, a3a1 = a1a3 − 2a3.
    fn sl2() -> SolvableAlgebra {
        let rules = vec![
            CommutationRule { j: 1, i: 0, lambda: Scalar::one(), f: PbwPoly::monomial(e(&[1, 0, 0]), Scalar::from_int(-2)) },
            CommutationRule { j: 2, i: 0, lambda: Scalar::one(), f: PbwPoly::monomial(e(&[0, 1, 0]), Scalar::one()) },
            CommutationRule { j: 2, i: 1, lambda: Scalar::one(), f: PbwPoly::monomial(e(&[0, 0, 1]), Scalar::from_int(-2)) },
        ];
        SolvableAlgebra::new(&["X2", "X1", "X3"], &[1, 1, 1], PbwOrder::GradedLex { weights: vec![1, 1, 1] }, rules).unwrap()
    }

    #[test]
    fn generator_swaps() {
        let alg = sl2();
        let a3a1 = alg.multiply(&alg.generator(2), &alg.generator(1));
        assert_eq!(alg.display(&a3a1).to_string(), "X1·X3 − 2·X3");
        let a3a2 = alg.multiply(&alg.generator(2), &alg.generator(0));
        assert_eq!(alg.display(&a3a2).to_string(), "X2·X3 + X1");
    }

    #[test]
    fn identity_is_neutral() {
        let alg = sl2();
        let p = &alg.generator(2) + &alg.generator(1).scale(&Scalar::new(3, 4));
        assert_eq!(alg.multiply(&alg.one(), &p), p);
        assert_eq!(alg.multiply(&p, &alg.one()), p);
    }

    #[test]
    fn sl2_is_solvable() {
        let d = sl2().verify_solvable();
        assert!(d.holds, "{:?}", d.issues);
        assert_eq!(d.rules_checked, 3);
    }

    #[test]
    fn zero_lambda_and_large_tail_rejected() {
        let bad_lambda = vec![CommutationRule { j: 1, i: 0, lambda: Scalar::zero(), f: PbwPoly::zero() }];
        let alg = SolvableAlgebra::new(&["a", "b"], &[1, 1], PbwOrder::GradedLex { weights: vec![1, 1] }, bad_lambda).unwrap();
        assert!(!alg.verify_solvable().holds);

        let big_tail = vec![CommutationRule { j: 1, i: 0, lambda: Scalar::one(), f: PbwPoly::monomial(e(&[1, 1]), Scalar::one()) }];
        let alg = SolvableAlgebra::new(&["a", "b"], &[1, 1], PbwOrder::GradedLex { weights: vec![1, 1] }, big_tail).unwrap();
        let d = alg.verify_solvable();
        assert!(!d.holds);
        assert_eq!(d.issues.len(), 1);
    }

    #[test]
    fn missing_rule_reported() {
        let alg = SolvableAlgebra::new(&["a", "b"], &[1, 1], PbwOrder::GradedLex { weights: vec![1, 1] }, vec![]).unwrap();
        assert!(!alg.verify_solvable().holds);
    }

    #[test]
    fn associativity_on_sample() {
        let alg = sl2();
        let m = alg.multiplier();
        let x = PbwPoly::from_terms([(e(&[0, 1, 1]), Scalar::one()), (e(&[1, 0, 0]), Scalar::from_int(2))]);
        let y = PbwPoly::from_terms([(e(&[0, 0, 2]), Scalar::one()), (e(&[0, 1, 0]), Scalar::new(-1, 3))]);
        let z = PbwPoly::from_terms([(e(&[2, 1, 0]), Scalar::one())]);
        assert_eq!(m.mul(&m.mul(&x, &y), &z), m.mul(&x, &m.mul(&y, &z)));
    }
}
