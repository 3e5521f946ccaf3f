use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::poly::FreePoly;
use super::word::{WeightedOrder, Word, WordKey};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A monic relation with its leading word split off.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    poly: FreePoly,
    lm: Word,
    /// Non-leading terms.
    tail: Vec<(Word, Scalar)>,
}

impl Relation {
    fn new(poly: &FreePoly, order: &WeightedOrder) -> Result<Relation> {
        if poly.is_zero() {
            return Err(Error::input("zero relation"));
        }
        let poly = poly.monic(order)?;
        let lm = poly.leading_word(order).cloned().expect("nonzero");
        if lm.is_empty() {
            return Err(Error::input("relation with constant leading monomial generates the unit ideal"));
        }
        let tail = poly.terms().filter(|(w, _)| **w != lm).map(|(w, c)| (w.clone(), c.clone())).collect();
        Ok(Relation { poly, lm, tail })
    }

    pub fn poly(&self) -> &FreePoly {
        &self.poly
    }

    pub fn leading_word(&self) -> &Word {
        &self.lm
    }
}

/// Which occurrence of which leading word to rewrite inside a reducible term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Largest applicable leading word, leftmost occurrence.
    #[default]
    LargestLeftmost,
    /// Occurrence starting furthest left, any leading word.
    Leftmost,
    /// Occurrence ending furthest right, any leading word.
    Rightmost,
}

/// A finite set of monic relations sorted by leading word under an order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    order: WeightedOrder,
    relations: Vec<Relation>,
}

impl RelationSet {
    pub fn new(polys: &[FreePoly], order: &WeightedOrder) -> Result<RelationSet> {
        let mut relations = polys.iter().map(|p| Relation::new(p, order)).collect::<Result<Vec<_>>>()?;
        relations.sort_by(|a, b| order.cmp(&a.lm, &b.lm).then_with(|| a.poly.terms().cmp(b.poly.terms())));
        Ok(RelationSet { order: order.clone(), relations })
    }

    pub fn order(&self) -> &WeightedOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn polys(&self) -> Vec<FreePoly> {
        self.relations.iter().map(|r| r.poly.clone()).collect()
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.relations.iter().map(|r| r.lm.clone()).collect()
    }

    pub fn max_degree(&self) -> u64 {
        self.relations.iter().filter_map(|r| r.poly.degree(&self.order)).max().unwrap_or(0)
    }

    /// True if `w` has no leading word of the set as a subword.
    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.relations.iter().all(|r| !w.contains(&r.lm))
    }

    pub fn normal_form(&self, poly: &FreePoly) -> Result<FreePoly> {
        self.normal_form_with(poly, Strategy::default())
    }

    /// Rewrites the largest reducible term until no term contains a leading
    /// word. Every rewrite replaces a term by strictly smaller ones, so the
    /// loop terminates.
    pub fn normal_form_with(&self, poly: &FreePoly, strategy: Strategy) -> Result<FreePoly> {
        poly.check_generators(&self.order)?;
        let order = &self.order;
        let mut work: BTreeMap<WordKey, Scalar> = poly.terms().map(|(w, c)| (order.key(w), c.clone())).collect();
        let mut out = FreePoly::zero();
        while let Some((key, c)) = work.pop_last() {
            let w = order.word_of(&key);
            match self.find_reducer(&w, strategy) {
                None => out.add_term(w, c),
                Some((rel, pos)) => {
                    let left = w.slice(0, pos);
                    let right = w.slice(pos + rel.lm.len(), w.len());
                    for (t, a) in &rel.tail {
                        let delta = -(&c * a);
                        match work.entry(order.key(&t.sandwich(&left, &right))) {
                            Entry::Vacant(e) => {
                                e.insert(delta);
                            }
                            Entry::Occupied(mut e) => {
                                *e.get_mut() += &delta;
                                if e.get().is_zero() {
                                    e.remove();
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn find_reducer(&self, w: &Word, strategy: Strategy) -> Option<(&Relation, usize)> {
        match strategy {
            Strategy::LargestLeftmost => self
                .relations
                .iter()
                .rev()
                .find_map(|r| w.occurrences(&r.lm).next().map(|pos| (r, pos))),
            Strategy::Leftmost => self
                .relations
                .iter()
                .filter_map(|r| w.occurrences(&r.lm).next().map(|pos| (r, pos)))
                .min_by_key(|(_, pos)| *pos),
            Strategy::Rightmost => self
                .relations
                .iter()
                .filter_map(|r| w.occurrences(&r.lm).last().map(|pos| (r, pos)))
                .max_by_key(|(r, pos)| pos + r.lm.len()),
        }
    }
}
