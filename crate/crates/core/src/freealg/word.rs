use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A generator of a free algebra: its index, display name and weighted degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub index: usize,
    pub name: String,
    pub weight: u32,
}

/// A noncommutative monomial, stored as a sequence of generator indices.
/// The empty word is the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letter(index: usize) -> Word {
        Word(vec![letter_index(index)])
    }

    pub fn from_letters(letters: &[usize]) -> Word {
        Word(letters.iter().map(|&l| letter_index(l)).collect())
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&l| l as usize)
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.0
    }

    pub(crate) fn from_raw(raw: Vec<u8>) -> Word {
        Word(raw)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left · self · right`
    pub fn sandwich(&self, left: &Word, right: &Word) -> Word {
        let mut v = Vec::with_capacity(left.0.len() + self.0.len() + right.0.len());
        v.extend_from_slice(&left.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&right.0);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn pow(&self, exp: usize) -> Word {
        Word(self.0.repeat(exp))
    }

    /// Start positions of every occurrence of `pattern` as a contiguous subword.
    pub fn occurrences<'a>(&'a self, pattern: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let n = pattern.0.len();
        let upper = if n > self.0.len() { 0 } else { self.0.len() - n + 1 };
        (0..upper).filter(move |&i| self.0[i..i + n] == pattern.0[..])
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        self.occurrences(pattern).next().is_some()
    }

    pub fn ends_with(&self, pattern: &Word) -> bool {
        self.0.ends_with(&pattern.0)
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().max().map(|&l| l as usize)
    }
}

fn letter_index(index: usize) -> u8 {
    u8::try_from(index).expect("generator index exceeds 255")
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| format!("x{l}")).collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Graded lexicographic order on words: weighted degree first, then
/// left-to-right comparison of letters ranked by a precedence permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedOrder {
    generators: Vec<Generator>,
    /// Generator indices, smallest first.
    precedence: Vec<usize>,
    rank: Vec<u8>,
}

/// Sort key realising a [`WeightedOrder`] as the natural order on keys.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct WordKey {
    pub(crate) degree: u64,
    pub(crate) ranks: Vec<u8>,
}

impl WeightedOrder {
    /// `names` and `weights` are indexed by generator; `precedence` lists
    /// generator indices from smallest to largest.
    pub fn new(names: &[&str], weights: &[u32], precedence: &[usize]) -> Result<WeightedOrder> {
        let n = names.len();
        if weights.len() != n {
            return Err(Error::input("one weight per generator required"));
        }
        if n > 255 {
            return Err(Error::input("at most 255 generators"));
        }
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(Error::input(format!("generator {} has weight 0", names[pos])));
        }
        let mut sorted = precedence.to_vec();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::input("precedence must be a permutation of the generator indices"));
        }
        let mut rank = vec![0u8; n];
        for (r, &g) in precedence.iter().enumerate() {
            rank[g] = r as u8;
        }
        let generators = names
            .iter()
            .zip(weights)
            .enumerate()
            .map(|(index, (name, &weight))| Generator { index, name: name.to_string(), weight })
            .collect();
        Ok(WeightedOrder { generators, precedence: precedence.to_vec(), rank })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn weights(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.weight).collect()
    }

    pub fn weight(&self, index: usize) -> u32 {
        self.generators[index].weight
    }

    pub fn name(&self, index: usize) -> &str {
        &self.generators[index].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    /// Same generators and precedence, different weights.
    pub fn with_weights(&self, weights: &[u32]) -> Result<WeightedOrder> {
        let names: Vec<&str> = self.generators.iter().map(|g| g.name.as_str()).collect();
        WeightedOrder::new(&names, weights, &self.precedence)
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.max_letter() {
            Some(l) if l >= self.generators.len() => {
                Err(Error::input(format!("unknown generator index {l}")))
            }
            _ => Ok(()),
        }
    }

    pub fn degree(&self, w: &Word) -> u64 {
        w.raw().iter().map(|&l| self.generators[l as usize].weight as u64).sum()
    }

    pub(crate) fn key(&self, w: &Word) -> WordKey {
        WordKey {
            degree: self.degree(w),
            ranks: w.raw().iter().map(|&l| self.rank[l as usize]).collect(),
        }
    }

    pub(crate) fn word_of(&self, key: &WordKey) -> Word {
        Word::from_raw(key.ranks.iter().map(|&r| self.precedence[r as usize] as u8).collect())
    }

    /// Compares two words; both must only use generators of this order.
    pub fn compare_words(&self, u: &Word, v: &Word) -> Result<Ordering> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(self.cmp(u, v))
    }

    pub(crate) fn cmp(&self, u: &Word, v: &Word) -> Ordering {
        self.degree(u).cmp(&self.degree(v)).then_with(|| {
            for (&a, &b) in u.raw().iter().zip(v.raw()) {
                match self.rank[a as usize].cmp(&self.rank[b as usize]) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            u.len().cmp(&v.len())
        })
    }

    /// Display form such as `X1·X3^2`, with `1` for the empty word.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let raw = w.raw();
        let mut parts = Vec::new();
        let mut i = 0;
        while i < raw.len() {
            let mut j = i;
            while j < raw.len() && raw[j] == raw[i] {
                j += 1;
            }
            let name = &self.generators[raw[i] as usize].name;
            if j - i == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        parts.join("·")
    }
}
