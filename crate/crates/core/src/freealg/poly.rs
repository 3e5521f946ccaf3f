use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::word::{WeightedOrder, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finite linear combination of words with rational coefficients.
/// Zero coefficients are never stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct FreePoly {
    terms: BTreeMap<Word, Scalar>,
}

impl FreePoly {
    pub fn zero() -> FreePoly {
        FreePoly::default()
    }

    pub fn one() -> FreePoly {
        FreePoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> FreePoly {
        FreePoly::monomial(Word::empty(), c)
    }

    pub fn word(w: Word) -> FreePoly {
        FreePoly::monomial(w, Scalar::one())
    }

    pub fn letter(index: usize) -> FreePoly {
        FreePoly::word(Word::letter(index))
    }

    pub fn monomial(w: Word, c: Scalar) -> FreePoly {
        let mut p = FreePoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(terms: I) -> FreePoly {
        let mut p = FreePoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> FreePoly {
        if c.is_zero() {
            return FreePoly::zero();
        }
        FreePoly { terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect() }
    }

    /// `left · self · right` for words `left`, `right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> FreePoly {
        FreePoly { terms: self.terms.iter().map(|(w, c)| (w.sandwich(left, right), c.clone())).collect() }
    }

    pub fn check_generators(&self, order: &WeightedOrder) -> Result<()> {
        self.terms.keys().try_for_each(|w| order.check_word(w))
    }

    /// Largest weighted degree of a term; `None` for zero.
    pub fn degree(&self, order: &WeightedOrder) -> Option<u64> {
        self.terms.keys().map(|w| order.degree(w)).max()
    }

    pub fn is_homogeneous(&self, order: &WeightedOrder) -> bool {
        let mut degrees = self.terms.keys().map(|w| order.degree(w));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Leading word and coefficient under `order`.
    pub fn leading(&self, order: &WeightedOrder) -> Result<(Word, Scalar)> {
        self.check_generators(order)?;
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(w, c)| (w.clone(), c.clone()))
            .ok_or_else(|| Error::input("leading term of the zero polynomial"))
    }

    pub fn leading_word(&self, order: &WeightedOrder) -> Option<&Word> {
        self.terms.keys().max_by(|a, b| order.cmp(a, b))
    }

    /// Sum of the terms of maximal weighted degree.
    pub fn leading_homogeneous(&self, order: &WeightedOrder) -> Result<FreePoly> {
        self.check_generators(order)?;
        let top = self.degree(order).ok_or_else(|| Error::input("leading homogeneous part of the zero polynomial"))?;
        Ok(self.homogeneous_component(order, top))
    }

    pub fn homogeneous_component(&self, order: &WeightedOrder, degree: u64) -> FreePoly {
        FreePoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| order.degree(w) == degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &WeightedOrder) -> Result<FreePoly> {
        let (_, lc) = self.leading(order)?;
        Ok(self.scale(&lc.inv()))
    }

    /// Substitutes `1` for every occurrence of generator `letter`.
    pub fn erase_letter(&self, letter: usize) -> FreePoly {
        FreePoly::from_terms(self.terms.iter().map(|(w, c)| {
            let kept: Vec<usize> = w.letters().filter(|&l| l != letter).collect();
            (Word::from_letters(&kept), c.clone())
        }))
    }

    /// Terms sorted from the largest word down.
    pub fn sorted_terms(&self, order: &WeightedOrder) -> Vec<(&Word, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn display<'a>(&'a self, order: &'a WeightedOrder) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, order, first: &[] }
    }

    /// Like [`FreePoly::display`], but the words in `first` (when present)
    /// come before the remaining terms, in the given order.
    pub fn display_with_first<'a>(&'a self, order: &'a WeightedOrder, first: &'a [Word]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, order, first }
    }
}

/// Renders a polynomial with generator names, largest term first, e.g.
/// `X1·X3 − 2·X3`.
pub struct PolyDisplay<'a> {
    poly: &'a FreePoly,
    order: &'a WeightedOrder,
    first: &'a [Word],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sorted = self.poly.sorted_terms(self.order);
        let head = self.first.iter().filter_map(|w| self.poly.terms.get_key_value(w));
        let rest = sorted.into_iter().filter(|(w, _)| !self.first.contains(w));
        let terms: Vec<(String, Scalar)> = head
            .chain(rest)
            .map(|(w, c)| (if w.is_empty() { String::new() } else { self.order.format_word(w) }, c.clone()))
            .collect();
        write_terms(f, &terms)
    }
}

/// Shared term renderer: `monomial` is empty for the constant term.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(String, Scalar)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (mono, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => write!(f, "−")?,
            (0, false) => {}
            (_, true) => write!(f, " − ")?,
            (_, false) => write!(f, " + ")?,
        }
        let a = c.abs();
        if mono.is_empty() {
            write!(f, "{a}")?;
        } else if a.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{a}·{mono}")?;
        }
    }
    Ok(())
}

impl Add<&FreePoly> for &FreePoly {
    type Output = FreePoly;
    fn add(self, rhs: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&FreePoly> for &FreePoly {
    type Output = FreePoly;
    fn sub(self, rhs: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        self.scale(&-Scalar::one())
    }
}

impl Mul<&FreePoly> for &FreePoly {
    type Output = FreePoly;
    fn mul(self, rhs: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<FreePoly> for FreePoly {
            type Output = FreePoly;
            fn $method(self, rhs: FreePoly) -> FreePoly {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
