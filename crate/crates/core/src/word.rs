//! Words over the ordered alphabet `{1 < 2 < …}` and their evaluations.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A letter of the alphabet. Always at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u32);

impl Symbol {
    pub const ONE: Symbol = Symbol(1);

    pub fn new(value: u32) -> Option<Symbol> {
        (value >= 1).then_some(Symbol(value))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Zero-based position of the symbol in the alphabet.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub(crate) fn from_index(index: usize) -> Symbol {
        Symbol(index as u32 + 1)
    }
}

impl TryFrom<u32> for Symbol {
    type Error = Error;

    fn try_from(value: u32) -> Result<Symbol> {
        Symbol::new(value).ok_or(Error::InvalidSymbol(value.into()))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which of the two Patience Sorting insertions is in use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// lPS insertion; the Bell monoid.
    Left,
    /// rPS insertion.
    Right,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Left => "left",
            Variant::Right => "right",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s.trim() {
            "left" | "l" => Ok(Variant::Left),
            "right" | "r" => Ok(Variant::Right),
            other => {
                Err(Error::Parse { position: 0, message: format!("unknown variant `{other}`, expected left or right") })
            }
        }
    }
}

/// An element of the free monoid. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Word {
        Word(symbols)
    }

    pub fn from_values(values: &[u32]) -> Result<Word> {
        values.iter().map(|&v| Symbol::try_from(v)).collect::<Result<Vec<_>>>().map(Word)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.0);
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }

    pub fn max_symbol(&self) -> Option<Symbol> {
        self.0.iter().copied().max()
    }

    pub fn evaluation(&self) -> Evaluation {
        Evaluation::of_symbols(&self.0)
    }

    /// Every symbol of `A_n` occurs exactly once, for `n = |w| ≥ 1`.
    pub fn is_standard(&self) -> bool {
        !self.is_empty() && self.evaluation().is_standard()
    }

    /// `w2·w1` for `w = w1·w2`, by the length of `w1`.
    pub fn rotation(&self, split: usize) -> Word {
        let mut symbols = Vec::with_capacity(self.len());
        symbols.extend_from_slice(&self.0[split..]);
        symbols.extend_from_slice(&self.0[..split]);
        Word(symbols)
    }

    /// All cyclic shifts of the word, the word itself included.
    pub fn rotations(&self) -> BTreeSet<Word> {
        if self.is_empty() {
            return BTreeSet::from([Word::empty()]);
        }
        (0..self.len()).map(|i| self.rotation(i)).collect()
    }

    /// Splits at `at`: returns `(w[..at], w[at..])`.
    pub fn split_at(&self, at: usize) -> (Word, Word) {
        (Word(self.0[..at].to_vec()), Word(self.0[at..].to_vec()))
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Word {
        Word(symbols)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

/// Digit shorthand when every symbol is at most 9, comma form otherwise.
/// A single symbol above 9 gets a trailing comma so that it does not read
/// back as digits.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|s| s.0 <= 9) {
            for s in &self.0 {
                write!(f, "{}", s.0)?;
            }
            return Ok(());
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", s.0)?;
        }
        if self.0.len() == 1 {
            f.write_str(",")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `4,5,1,1` or the digit shorthand `4511`. Whitespace around
    /// entries is ignored; the empty string is the empty word.
    fn from_str(s: &str) -> Result<Word> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Word::empty());
        }
        let offset = s.find(trimmed).unwrap_or(0);
        if !trimmed.contains(',') {
            return trimmed
                .char_indices()
                .map(|(i, c)| match c.to_digit(10) {
                    Some(d) if d >= 1 => Ok(Symbol(d)),
                    Some(_) => Err(parse_error(offset + i, "symbol 0 is not allowed")),
                    None => Err(parse_error(offset + i, &format!("unexpected character `{c}`"))),
                })
                .collect::<Result<Vec<_>>>()
                .map(Word);
        }
        let mut symbols = Vec::new();
        let mut position = offset;
        let pieces: Vec<&str> = trimmed.split(',').collect();
        let last = pieces.len() - 1;
        for (i, piece) in pieces.into_iter().enumerate() {
            let entry = piece.trim();
            if entry.is_empty() && i == last && i > 0 {
                break;
            }
            let value: u32 = entry
                .parse()
                .map_err(|_| parse_error(position, &format!("expected a positive integer, found `{entry}`")))?;
            symbols.push(Symbol::new(value).ok_or_else(|| parse_error(position, "symbol 0 is not allowed"))?);
            position += piece.len() + 1;
        }
        Ok(Word(symbols))
    }
}

fn parse_error(position: usize, message: &str) -> Error {
    Error::Parse { position, message: message.into() }
}

/// Multiplicities of each symbol, entry `a-1` holding `|w|_a`. Trailing zeros
/// are trimmed so equal evaluations compare equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Evaluation(Vec<usize>);

impl Evaluation {
    pub fn from_counts(mut counts: Vec<usize>) -> Evaluation {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Evaluation(counts)
    }

    pub fn of_symbols(symbols: &[Symbol]) -> Evaluation {
        let mut counts = Vec::new();
        for s in symbols {
            let i = s.index();
            if counts.len() <= i {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
        }
        Evaluation(counts)
    }

    /// `(1,1,…,1)` of length `n`.
    pub fn standard(n: usize) -> Evaluation {
        Evaluation(alloc::vec![1; n])
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn count(&self, symbol: Symbol) -> usize {
        self.0.get(symbol.index()).copied().unwrap_or(0)
    }

    /// Length of any word with this evaluation.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Largest symbol with a nonzero count.
    pub fn max_symbol(&self) -> Option<Symbol> {
        (!self.0.is_empty()).then(|| Symbol::from_index(self.0.len() - 1))
    }

    /// Number of distinct symbols occurring.
    pub fn content_size(&self) -> usize {
        self.0.iter().filter(|&&c| c > 0).count()
    }

    /// Whether the content is exactly `{1, …, n}` for `n = self.counts().len()`.
    pub fn has_full_content(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn is_standard(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&c| c == 1)
    }

    /// The smallest word with this evaluation: `1^{c1} 2^{c2} …`.
    pub fn sorted_word(&self) -> Word {
        let mut symbols = Vec::with_capacity(self.total());
        for (i, &c) in self.0.iter().enumerate() {
            symbols.extend(core::iter::repeat_n(Symbol::from_index(i), c));
        }
        Word(symbols)
    }

    /// Number of distinct words with this evaluation, saturating.
    pub fn multinomial(&self) -> u128 {
        crate::multiset::multinomial(&self.0)
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Evaluation {
    type Err = Error;

    /// Accepts `(2,1,1)`; the parentheses may be omitted.
    fn from_str(s: &str) -> Result<Evaluation> {
        let trimmed = s.trim();
        let inner = trimmed.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(trimmed);
        if inner.trim().is_empty() {
            return Ok(Evaluation::default());
        }
        let mut counts = Vec::new();
        let mut position = s.find(inner).unwrap_or(0);
        for piece in inner.split(',') {
            let entry = piece.trim();
            let value: usize = entry
                .parse()
                .map_err(|_| parse_error(position, &format!("expected a non-negative integer, found `{entry}`")))?;
            counts.push(value);
            position += piece.len() + 1;
        }
        Ok(Evaluation::from_counts(counts))
    }
}
