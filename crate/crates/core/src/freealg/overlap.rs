use super::poly::FreePoly;
use super::word::{WeightedOrder, Word};
use crate::error::Result;

/// How two leading words meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Composition {
    /// A proper suffix of `LM(g)` equals a proper prefix of `LM(h)`:
    /// `LM(g)·right = left·LM(h)` with the shared part of length `shared`.
    Overlap { left: Word, right: Word, shared: usize },
    /// `LM(outer) = left·LM(inner)·right`; `g_is_outer` tells which side is
    /// the containing word.
    Inclusion { left: Word, right: Word, g_is_outer: bool },
}

/// An S-element (composition) of two relations together with how it arose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SElement {
    pub composition: Composition,
    /// The ambiguous word both rewrites start from.
    pub ambiguity: Word,
    pub poly: FreePoly,
}

/// All compositions of `g` (on the left) with `h`: proper overlaps
/// `LM(g)·s = p·LM(h)` and inclusions of either leading word in the other.
/// Both inputs are normalised to be monic first.
pub fn overlaps(g: &FreePoly, h: &FreePoly, order: &WeightedOrder) -> Result<Vec<SElement>> {
    let g = g.monic(order)?;
    let h = h.monic(order)?;
    let a = g.leading_word(order).cloned().expect("nonzero");
    let b = h.leading_word(order).cloned().expect("nonzero");
    let same = g == h;
    let mut out = Vec::new();

    for k in 1..a.len().min(b.len()) {
        if a.raw()[a.len() - k..] == b.raw()[..k] {
            let left = a.slice(0, a.len() - k);
            let right = b.slice(k, b.len());
            let poly = &g.sandwich(&Word::empty(), &right) - &h.sandwich(&left, &Word::empty());
            out.push(SElement {
                composition: Composition::Overlap { left: left.clone(), right: right.clone(), shared: k },
                ambiguity: a.concat(&right),
                poly,
            });
        }
    }

    let mut inclusions = |outer: &FreePoly, ow: &Word, inner: &FreePoly, iw: &Word, g_is_outer: bool| {
        for pos in ow.occurrences(iw).collect::<Vec<_>>() {
            if same && iw.len() == ow.len() {
                continue;
            }
            let left = ow.slice(0, pos);
            let right = ow.slice(pos + iw.len(), ow.len());
            let poly = outer - &inner.sandwich(&left, &right);
            out.push(SElement {
                composition: Composition::Inclusion { left, right, g_is_outer },
                ambiguity: ow.clone(),
                poly,
            });
        }
    };
    inclusions(&g, &a, &h, &b, true);
    if a != b {
        inclusions(&h, &b, &g, &a, false);
    }
    Ok(out)
}
