//! Enumeration and ranking of the distinct words with a given evaluation.

use alloc::vec::Vec;

use crate::word::{Evaluation, Symbol, Word};

/// Multinomial coefficient `(Σc)! / Π c!`, saturating at `u128::MAX`.
pub fn multinomial(counts: &[usize]) -> u128 {
    let mut total: u128 = 0;
    let mut result: u128 = 1;
    for &c in counts {
        for i in 1..=c as u128 {
            total += 1;
            // result * total / i stays integral at every step
            result = match result.checked_mul(total) {
                Some(r) => r / i,
                None => return u128::MAX,
            };
        }
    }
    result
}

/// Rearranges `symbols` into the next permutation in lexicographic order.
/// Returns `false` (leaving the slice sorted ascending) after the last one.
pub fn next_permutation(symbols: &mut [Symbol]) -> bool {
    if symbols.len() < 2 {
        return false;
    }
    let mut i = symbols.len() - 1;
    while i > 0 && symbols[i - 1] >= symbols[i] {
        i -= 1;
    }
    if i == 0 {
        symbols.reverse();
        return false;
    }
    let mut j = symbols.len() - 1;
    while symbols[j] <= symbols[i - 1] {
        j -= 1;
    }
    symbols.swap(i - 1, j);
    symbols[i..].reverse();
    true
}

/// Calls `f` on every word with evaluation `e`, in lexicographic order.
pub fn for_each_word<F: FnMut(&[Symbol])>(e: &Evaluation, mut f: F) {
    let mut current = e.sorted_word().into_symbols();
    loop {
        f(&current);
        if !next_permutation(&mut current) {
            break;
        }
    }
}

/// Iterator over the words with a given evaluation, in lexicographic order.
pub struct MultisetPermutations {
    current: Vec<Symbol>,
    done: bool,
}

impl MultisetPermutations {
    pub fn new(e: &Evaluation) -> Self {
        MultisetPermutations { current: e.sorted_word().into_symbols(), done: false }
    }
}

impl Iterator for MultisetPermutations {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let out = Word::new(self.current.clone());
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

/// Lexicographic rank of a word among all words sharing its evaluation.
///
/// The rank agrees with the position produced by [`for_each_word`].
#[derive(Debug, Clone)]
pub struct PermutationRanker {
    counts: Vec<u64>,
    total: u64,
    len: usize,
}

impl PermutationRanker {
    /// Requires `e.multinomial() * e.total()` to fit in a `u64`.
    pub fn new(e: &Evaluation) -> Self {
        PermutationRanker {
            counts: e.counts().iter().map(|&c| c as u64).collect(),
            total: e.multinomial() as u64,
            len: e.total(),
        }
    }

    pub fn size(&self) -> u64 {
        self.total
    }

    pub fn rank(&self, word: &[Symbol]) -> u64 {
        debug_assert_eq!(word.len(), self.len);
        let mut counts = self.counts.clone();
        let mut remaining = self.total;
        let mut rank = 0;
        for (pos, s) in word.iter().enumerate() {
            let len = (self.len - pos) as u64;
            let idx = s.index();
            let smaller: u64 = counts[..idx].iter().sum();
            rank += remaining * smaller / len;
            remaining = remaining * counts[idx] / len;
            counts[idx] -= 1;
        }
        rank
    }
}
