use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::scalar::Scalar;

/// Exponent vector of a PBW monomial `a_1^e_1 ⋯ a_n^e_n`, positions in the
/// algebra's fixed generator order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(exps: Vec<u32>) -> Exponent {
        Exponent(exps)
    }

    pub fn one(n: usize) -> Exponent {
        Exponent(vec![0; n])
    }

    pub fn unit(n: usize, position: usize) -> Exponent {
        let mut v = vec![0; n];
        v[position] = 1;
        Exponent(v)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn degree(&self, weights: &[u32]) -> u64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − other` if `other` divides `self` componentwise.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        self.0.iter().zip(&other.0).map(|(&a, &b)| a.checked_sub(b)).collect::<Option<Vec<_>>>().map(Exponent)
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub(crate) fn with(&self, position: usize, delta: i64) -> Exponent {
        let mut v = self.0.clone();
        v[position] = (v[position] as i64 + delta) as u32;
        Exponent(v)
    }

    /// Positions of the expanded word `a_0^e_0 a_1^e_1 ⋯`.
    pub fn word(&self) -> Vec<u8> {
        self.0.iter().enumerate().flat_map(|(p, &e)| std::iter::repeat(p as u8).take(e as usize)).collect()
    }

    /// Every exponent vector with weighted degree at most `bound`.
    pub fn all_up_to(weights: &[u32], bound: u64) -> Vec<Exponent> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; weights.len()];
        fn rec(pos: usize, left: u64, weights: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
            if pos == weights.len() {
                out.push(Exponent(cur.clone()));
                return;
            }
            let w = weights[pos] as u64;
            let mut e = 0;
            while e * w <= left {
                cur[pos] = e as u32;
                rec(pos + 1, left - e * w, weights, cur, out);
                e += 1;
            }
            cur[pos] = 0;
        }
        rec(0, bound, weights, &mut cur, &mut out);
        out
    }
}

/// A total order on PBW monomials, comparing their expanded words with
/// generator positions ranked `0 < 1 < ⋯`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PbwOrder {
    /// Weighted degree first, then lexicographic on the expanded word.
    GradedLex { weights: Vec<u32> },
    /// Lexicographic on the expanded word, degree ignored (prefixes first).
    /// Not a monomial ordering in general; kept for negative checks.
    Lex,
}

impl PbwOrder {
    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Ordering {
        let by_word = || a.word().cmp(&b.word());
        match self {
            PbwOrder::GradedLex { weights } => a.degree(weights).cmp(&b.degree(weights)).then_with(by_word),
            PbwOrder::Lex => by_word(),
        }
    }

    pub(crate) fn key(&self, a: &Exponent) -> (u64, Vec<u8>) {
        match self {
            PbwOrder::GradedLex { weights } => (a.degree(weights), a.word()),
            PbwOrder::Lex => (0, a.word()),
        }
    }
}

/// A linear combination of PBW monomials.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct PbwPoly {
    terms: BTreeMap<Exponent, Scalar>,
}

impl PbwPoly {
    pub fn zero() -> PbwPoly {
        PbwPoly::default()
    }

    pub fn constant(n: usize, c: Scalar) -> PbwPoly {
        PbwPoly::monomial(Exponent::one(n), c)
    }

    pub fn monomial(e: Exponent, c: Scalar) -> PbwPoly {
        let mut p = PbwPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn generator(n: usize, position: usize) -> PbwPoly {
        PbwPoly::monomial(Exponent::unit(n, position), Scalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, Scalar)>>(terms: I) -> PbwPoly {
        let mut p = PbwPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, e: Exponent, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &PbwPoly, c: &Scalar) {
        for (e, a) in &other.terms {
            self.add_term(e.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> PbwPoly {
        let mut out = PbwPoly::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn leading(&self, order: &PbwOrder) -> Option<(&Exponent, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn leading_exponent(&self, order: &PbwOrder) -> Option<&Exponent> {
        self.leading(order).map(|(e, _)| e)
    }

    pub fn monic(&self, order: &PbwOrder) -> PbwPoly {
        match self.leading(order) {
            None => PbwPoly::zero(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn degree(&self, weights: &[u32]) -> Option<u64> {
        self.terms.keys().map(|e| e.degree(weights)).max()
    }

    pub fn sorted_terms(&self, order: &PbwOrder) -> Vec<(&Exponent, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }
}

impl Add<&PbwPoly> for &PbwPoly {
    type Output = PbwPoly;
    fn add(self, rhs: &PbwPoly) -> PbwPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub<&PbwPoly> for &PbwPoly {
    type Output = PbwPoly;
    fn sub(self, rhs: &PbwPoly) -> PbwPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl Neg for &PbwPoly {
    type Output = PbwPoly;
    fn neg(self) -> PbwPoly {
        self.scale(&-Scalar::one())
    }
}
