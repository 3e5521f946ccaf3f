use super::relations::RelationSet;
use super::word::Word;

/// All words of weighted degree at most `max_degree` containing no leading
/// word of `rels`, by depth-first extension. Normal words are closed under
/// prefixes, so checking suffixes of each extension suffices.
pub fn normal_words(rels: &RelationSet, max_degree: u64) -> Vec<Word> {
    let order = rels.order();
    let lms = rels.leading_words();
    let mut out = Vec::new();
    let mut stack = vec![(Word::empty(), 0u64)];
    while let Some((w, d)) = stack.pop() {
        for g in 0..order.num_generators() {
            let nd = d + order.weight(g) as u64;
            if nd > max_degree {
                continue;
            }
            let next = w.concat(&Word::letter(g));
            if lms.iter().any(|lm| next.ends_with(lm)) {
                continue;
            }
            stack.push((next, nd));
        }
        out.push(w);
    }
    out.sort_by(|a, b| order.cmp(a, b));
    out
}

/// Number of normal words in each weighted degree `0..=max_degree`.
pub fn normal_word_counts(rels: &RelationSet, max_degree: u64) -> Vec<u64> {
    let mut counts = vec![0u64; max_degree as usize + 1];
    for w in normal_words(rels, max_degree) {
        counts[rels.order().degree(&w) as usize] += 1;
    }
    counts
}
