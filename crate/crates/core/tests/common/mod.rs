//! Independent oracles shared by the integration tests. None of them calls
//! the reduction, Gröbner or counting code under test.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use gdu_core::freealg::{FreePoly, WeightedOrder, Word};
use gdu_core::gdu::{GduAlgebra, GduParams, Preset, WeightScheme};
use gdu_core::solvable::{Exponent, PbwPoly, SolvableAlgebra};
use gdu_core::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- words

/// Sort key for graded lex: weighted degree, then letter ranks left to right.
pub type Key = (u64, Vec<usize>);

pub fn key(order: &WeightedOrder, w: &Word) -> Key {
    let prec = order.precedence();
    let ranks = w.letters().map(|l| prec.iter().position(|&g| g == l).unwrap()).collect();
    (order.degree(w), ranks)
}

/// All words of weighted degree at most `max_degree`.
pub fn words_up_to(order: &WeightedOrder, max_degree: u64) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for x in 0..order.num_generators() {
                let v = w.concat(&Word::letter(x));
                if order.degree(&v) <= max_degree {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

pub fn contains_any(w: &Word, obstructions: &[Word]) -> bool {
    obstructions.iter().any(|o| w.contains(o))
}

/// Obstruction-free words per weighted degree, by enumeration.
pub fn brute_normal_counts(order: &WeightedOrder, obstructions: &[Word], max_degree: u64) -> Vec<u64> {
    let mut counts = vec![0u64; max_degree as usize + 1];
    for w in words_up_to(order, max_degree) {
        if !contains_any(&w, obstructions) {
            counts[order.degree(&w) as usize] += 1;
        }
    }
    counts
}

fn leading_word(order: &WeightedOrder, p: &FreePoly) -> Word {
    p.terms().map(|(w, _)| w.clone()).max_by_key(|w| key(order, w)).unwrap()
}

/// Leading word under graded lex, computed from the oracle key.
pub fn lm(order: &WeightedOrder, p: &FreePoly) -> Word {
    leading_word(order, p)
}

// ---------------------------------------------------------------- linear span

/// Row-echelon basis of a space of polynomials, pivoted on leading words.
pub struct Echelon<K: Ord + Clone, M: Ord + Clone> {
    rows: BTreeMap<K, (M, BTreeMap<K, (M, Scalar)>)>,
}

impl<K: Ord + Clone, M: Ord + Clone> Echelon<K, M> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    /// Reduces `v` (keyed terms) and returns what is left.
    pub fn reduce(&self, mut v: BTreeMap<K, (M, Scalar)>) -> BTreeMap<K, (M, Scalar)> {
        let mut done = BTreeMap::new();
        while let Some((k, (m, c))) = v.pop_last() {
            match self.rows.get(&k) {
                None => {
                    done.insert(k, (m, c));
                }
                Some((_, row)) => {
                    // row is monic with leading key k
                    for (rk, (rm, rc)) in row {
                        let slot = v.entry(rk.clone()).or_insert_with(|| (rm.clone(), Scalar::zero()));
                        slot.1 -= &(&c * rc);
                        if slot.1.is_zero() {
                            v.remove(rk);
                        }
                    }
                }
            }
        }
        done
    }

    /// Adds `v` to the span; returns its new pivot if it was independent.
    pub fn insert(&mut self, v: BTreeMap<K, (M, Scalar)>) -> Option<M> {
        let mut r = self.reduce(v);
        let (k, (m, c)) = r.pop_last()?;
        let inv = c.inv();
        let tail = r.into_iter().map(|(rk, (rm, rc))| (rk, (rm, &rc * &inv))).collect();
        self.rows.insert(k, (m.clone(), tail));
        Some(m)
    }

    pub fn contains(&self, v: BTreeMap<K, (M, Scalar)>) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &M> {
        self.rows.values().map(|(m, _)| m)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn free_vector(order: &WeightedOrder, p: &FreePoly) -> BTreeMap<Key, (Word, Scalar)> {
    p.terms().map(|(w, c)| (key(order, w), (w.clone(), c.clone()))).collect()
}

/// Span of `u·g·v` over words with `deg u + deg g + deg v ≤ max_degree`,
/// where `deg g` is the top weighted degree of `g`.
pub fn ideal_span(order: &WeightedOrder, gens: &[FreePoly], max_degree: u64) -> Echelon<Key, Word> {
    let mut ech = Echelon::new();
    let mut products: Vec<FreePoly> = Vec::new();
    for g in gens {
        let dg = g.terms().map(|(w, _)| order.degree(w)).max().unwrap();
        if dg > max_degree {
            continue;
        }
        let budget = max_degree - dg;
        let sides = words_up_to(order, budget);
        for u in &sides {
            for v in &sides {
                if order.degree(u) + order.degree(v) <= budget {
                    products.push(g.sandwich(u, v));
                }
            }
        }
    }
    products.sort_by_key(|p| key(order, &leading_word(order, p)));
    for p in products {
        ech.insert(free_vector(order, &p));
    }
    ech
}

/// Gröbner property up to `max_degree`: every leading word of the truncated
/// ideal span contains the leading word of some generator.
pub fn groebner_up_to(order: &WeightedOrder, gens: &[FreePoly], max_degree: u64) -> bool {
    let lms: Vec<Word> = gens.iter().map(|g| lm(order, g)).collect();
    let span = ideal_span(order, gens, max_degree);
    let ok = span.pivots().all(|w| contains_any(w, &lms));
    ok
}

// ---------------------------------------------------------------- rewriting

/// Every normal form reachable by rewriting `p` with `rules` (leading word
/// ↦ minus the monic tail), exploring every term and every position.
pub fn all_rewrites(order: &WeightedOrder, rules: &[FreePoly], p: &FreePoly) -> BTreeSet<Vec<(Word, Scalar)>> {
    let rules: Vec<(Word, FreePoly)> = rules
        .iter()
        .map(|g| {
            let w = lm(order, g);
            let c = g.coeff(&w);
            let monic = g.scale(&c.inv());
            let tail = &monic - &FreePoly::word(w.clone());
            (w, tail.scale(&-Scalar::one()))
        })
        .collect();
    let canon = |p: &FreePoly| -> Vec<(Word, Scalar)> { p.terms().map(|(w, c)| (w.clone(), c.clone())).collect() };
    let mut seen: BTreeSet<Vec<(Word, Scalar)>> = BTreeSet::new();
    let mut results = BTreeSet::new();
    let mut stack = vec![p.clone()];
    while let Some(cur) = stack.pop() {
        if !seen.insert(canon(&cur)) {
            continue;
        }
        let mut moved = false;
        for (w, c) in cur.terms() {
            for (lw, rhs) in &rules {
                for pos in w.occurrences(lw) {
                    let left = w.slice(0, pos);
                    let right = w.slice(pos + lw.len(), w.len());
                    let mut next = cur.clone();
                    next.add_term(w.clone(), -c);
                    next = &next + &rhs.sandwich(&left, &right).scale(c);
                    stack.push(next);
                    moved = true;
                }
            }
        }
        if !moved {
            results.insert(canon(&cur));
        }
    }
    results
}

// ---------------------------------------------------------------- PBW

/// `#{(i, j, l) : w(i + l) + j = q}` by direct enumeration.
pub fn exponent_triples(x2_weight: u64, q: u64) -> u64 {
    let mut n = 0;
    for i in 0..=q {
        for j in 0..=q {
            for l in 0..=q {
                if x2_weight * (i + l) + j == q {
                    n += 1;
                }
            }
        }
    }
    n
}

/// `#{(a, i, j, l) : a + j + w(i + l) = q}`, i.e. coefficients of
/// `1/((1−t)^2 (1−t^w)^2)`.
pub fn exponent_quadruples(w: u64, q: u64) -> u64 {
    (0..=q).map(|a| exponent_triples(w, q - a)).sum()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn pbw_vector(alg: &SolvableAlgebra, p: &PbwPoly) -> BTreeMap<(u64, Vec<u32>), (Exponent, Scalar)> {
    // graded by weights, ties by the expanded word (positions ascending)
    p.terms()
        .map(|(e, c)| {
            let word: Vec<u32> = e.as_slice().iter().enumerate().flat_map(|(k, &n)| std::iter::repeat(k as u32).take(n as usize)).collect();
            ((e.degree(alg.weights()), word), (e.clone(), c.clone()))
        })
        .collect()
}

/// Span of `m·g` over PBW monomials `m` with `deg m + deg g ≤ max_degree`.
pub fn left_ideal_span(
    alg: &SolvableAlgebra,
    gens: &[PbwPoly],
    max_degree: u64,
) -> Echelon<(u64, Vec<u32>), Exponent> {
    let mut ech = Echelon::new();
    let monos = Exponent::all_up_to(alg.weights(), max_degree);
    for g in gens {
        let dg = g.degree(alg.weights()).unwrap_or(0);
        for m in &monos {
            if m.degree(alg.weights()) + dg <= max_degree {
                let prod = alg.multiply(&PbwPoly::monomial(m.clone(), Scalar::one()), g);
                ech.insert(pbw_vector(alg, &prod));
            }
        }
    }
    ech
}

// ---------------------------------------------------------------- instances

pub fn small_scalar<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::new(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let s = small_scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// `count` random parameter tuples with `1 ≤ deg f ≤ max_degree`.
pub fn random_params(seed: u64, count: usize, max_degree: usize) -> Vec<GduParams> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let d = r.gen_range(1..=max_degree);
            GduParams::random(&mut r, d)
        })
        .collect()
}

/// Presets and seeded random instances under both schemes.
pub fn test_algebras(seed: u64, random_count: usize) -> Vec<(String, GduAlgebra)> {
    let mut out = Vec::new();
    for p in Preset::defaults() {
        for scheme in [WeightScheme::AllOnes, WeightScheme::DegF] {
            let alg = gdu_core::gdu::preset(&p, scheme).unwrap();
            out.push((format!("{p} [{scheme}]"), alg));
        }
    }
    for (k, params) in random_params(seed, random_count, 2).into_iter().enumerate() {
        let alg = GduAlgebra::build(params.clone(), WeightScheme::AllOnes).unwrap();
        out.push((format!("random#{k} {params} [all-ones]"), alg));
    }
    for (k, params) in random_params(seed ^ 0x5eed, random_count, 3).into_iter().enumerate() {
        let alg = GduAlgebra::build(params.clone(), WeightScheme::DegF).unwrap();
        out.push((format!("random#{k} {params} [deg-f]"), alg));
    }
    out
}

/// A random PBW polynomial with up to `terms` terms and exponents ≤ `max_exp`.
pub fn random_pbw<R: Rng>(rng: &mut R, n: usize, terms: usize, max_exp: u32) -> PbwPoly {
    let k = rng.gen_range(1..=terms);
    PbwPoly::from_terms((0..k).map(|_| {
        let e = Exponent::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect());
        (e, nonzero_scalar(rng))
    }))
}

// ---------------------------------------------------------------- mutants

/// Perturbs one non-leading coefficient of sl2's relations.
pub fn mutate(seed: u64) -> (Vec<FreePoly>, GduAlgebra) {
    let alg = gdu_core::gdu::preset(&Preset::Sl2, WeightScheme::AllOnes).unwrap();
    let mut r = rng(seed);
    let mut polys = alg.relations().polys();
    let slots: Vec<(usize, Word)> = polys
        .iter()
        .enumerate()
        .flat_map(|(i, p)| {
            let top = lm(alg.order(), p);
            p.terms().filter(move |(w, _)| **w != top).map(move |(w, _)| (i, w.clone())).collect::<Vec<_>>()
        })
        .collect();
    let (i, w) = slots[r.gen_range(0..slots.len())].clone();
    let old = polys[i].coeff(&w);
    let new = loop {
        let s = small_scalar(&mut r);
        if s != old {
            break s;
        }
    };
    polys[i].add_term(w, &new - &old);
    (polys, alg)
}
