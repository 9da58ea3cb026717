//! Constructive cyclic shift paths toward distinguished elements of a right
//! evaluation class.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::insertion::{column_reading, insert_symbols, insert_word};
use crate::tableau::PsTableau;
use crate::word::{Evaluation, Symbol, Variant, Word};

/// One cyclic shift: the source is `P(x·y)`, the target `P(y·x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftStep {
    pub x: Word,
    pub y: Word,
    pub target: PsTableau,
}

/// A walk in the cyclic shift graph, each step carrying its factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftPath {
    start: PsTableau,
    steps: Vec<ShiftStep>,
}

impl ShiftPath {
    pub fn new(start: PsTableau) -> ShiftPath {
        ShiftPath { start, steps: Vec::new() }
    }

    pub fn start(&self) -> &PsTableau {
        &self.start
    }

    pub fn end(&self) -> &PsTableau {
        self.steps.last().map_or(&self.start, |s| &s.target)
    }

    pub fn steps(&self) -> &[ShiftStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Appends the shift `x·y → y·x`.
    pub fn push(&mut self, x: Word, y: Word) {
        let target = insert_word(&y.concat(&x), self.start.variant());
        self.steps.push(ShiftStep { x, y, target });
    }

    /// Every witness reproduces both of its endpoints under insertion.
    pub fn verify(&self) -> bool {
        let variant = self.start.variant();
        let mut current = &self.start;
        for step in &self.steps {
            if insert_word(&step.x.concat(&step.y), variant) != *current
                || insert_word(&step.y.concat(&step.x), variant) != step.target
            {
                return false;
            }
            current = &step.target;
        }
        true
    }
}

/// Size `n` of the content `{1, …, n}`, or `None` when the content has gaps.
fn full_content(e: &Evaluation) -> Option<usize> {
    (e.has_full_content() && !e.counts().is_empty()).then(|| e.counts().len())
}

fn repeated(symbol: usize, times: usize, out: &mut Vec<Symbol>) {
    let s = Symbol::new(symbol as u32).expect("symbols are positive");
    out.extend(core::iter::repeat_n(s, times));
}

/// `P_r((n-1)^{c_{n-1}} ⋯ 2^{c_2} 1^{c_1} n^{c_n})` for content `{1,…,n}`,
/// `n ≥ 3`.
pub fn central_element(e: &Evaluation) -> Result<PsTableau> {
    let n = full_content(e).filter(|&n| n >= 3).ok_or(Error::CenterUndefined)?;
    let c = e.counts();
    let mut word = Vec::with_capacity(e.total());
    for a in (1..n).rev() {
        repeated(a, c[a - 1], &mut word);
    }
    repeated(n, c[n - 1], &mut word);
    Ok(insert_symbols(&word, Variant::Right))
}

fn check_right_full(t: &PsTableau, min_n: usize) -> Result<(Evaluation, usize)> {
    if t.variant() != Variant::Right {
        return Err(Error::Precondition("path construction needs a right tableau"));
    }
    let e = t.evaluation();
    match full_content(&e) {
        Some(n) if n >= min_n => Ok((e, n)),
        _ => Err(Error::Precondition("content must be {1,…,n} with n large enough")),
    }
}

fn split_reading(reading: &Word, at: usize) -> (Word, Word) {
    reading.split_at(at)
}

/// Index in the column reading of the first occurrence of `s` within
/// column `col`.
fn first_in_column(t: &PsTableau, col: usize, s: Symbol) -> Option<usize> {
    let offset: usize = t.columns()[..col].iter().map(|c| c.height()).sum();
    t.columns()[col].reading().position(|a| a == s).map(|p| offset + p)
}

fn column_contains(t: &PsTableau, col: usize, s: Symbol) -> bool {
    t.columns().get(col).is_some_and(|c| c.entries().contains(&s))
}

fn leading_run(reading: &Word, s: Symbol) -> usize {
    reading.iter().take_while(|&a| a == s).count()
}

/// A shift path of length at most `n - 2` from `t` to
/// [`central_element`]`(ev(t))`.
///
/// While the second column has bottom `k < n`, the reading `u·k·v` is cut
/// just before the first `k` of the second column and the element moves to
/// `P(k·v)·P(u)`; this gathers every symbol up to `k` in the first column.
/// A single column, or a second column made of `n`s while the first still
/// holds some `n`, is handled by rotating the leading run of `n`s to the
/// end.
pub fn path_to_center(t: &PsTableau) -> Result<ShiftPath> {
    let (e, n) = check_right_full(t, 3)?;
    let center = central_element(&e)?;
    let top = Symbol::new(n as u32).expect("n ≥ 3");
    let mut path = ShiftPath::new(t.clone());
    while *path.end() != center {
        if path.len() >= n - 2 {
            return Err(Error::PathConstruction(n - 2));
        }
        let current = path.end().clone();
        let reading = column_reading(&current);
        let cut = if current.columns().len() == 1 || current.columns()[1].bottom() == top {
            leading_run(&reading, top)
        } else {
            let k = current.columns()[1].bottom();
            first_in_column(&current, 1, k).expect("bottom entry is in its column")
        };
        let (x, y) = split_reading(&reading, cut);
        path.push(x, y);
    }
    Ok(path)
}

/// `P_r(1^{c_1} (n-1)^{c_{n-1}} ⋯ 3^{c_3} 2 n^{c_n})`.
pub fn repeated_min_target(e: &Evaluation) -> Result<PsTableau> {
    let n = full_content(e).filter(|&n| n >= 4).ok_or(Error::Precondition("content must be {1,…,n} with n ≥ 4"))?;
    let c = e.counts();
    if c[0] < 2 || c[1] != 1 {
        return Err(Error::Precondition("symbol 1 must repeat and symbol 2 occur once"));
    }
    let mut word = Vec::with_capacity(e.total());
    repeated(1, c[0], &mut word);
    for a in (2..n).rev() {
        repeated(a, c[a - 1], &mut word);
    }
    repeated(n, c[n - 1], &mut word);
    Ok(insert_symbols(&word, Variant::Right))
}

/// Cuts the reading of `t` with its bottom-left `1` delayed to just before
/// index `at` of the column reading (`at` past the first column). Returns
/// `(u, 1·v)` where `u·1·v` is a delayed reading of `t`.
fn delayed_cut(t: &PsTableau, at: usize) -> Result<(Word, Word)> {
    let reading = column_reading(t).into_symbols();
    let held = t.columns()[0].height() - 1;
    debug_assert!(at > held);
    let mut u = reading[..at].to_vec();
    let one = u.remove(held);
    let mut y = alloc::vec![one];
    y.extend_from_slice(&reading[at..]);
    let mut delayed = u.clone();
    delayed.extend_from_slice(&y);
    if insert_symbols(&delayed, Variant::Right) != *t {
        return Err(Error::PathConstruction(0));
    }
    Ok((Word::new(u), Word::new(y)))
}

/// A shift path from `t` to [`repeated_min_target`]`(ev(t))`, for content
/// `{1,…,n}` with `n ≥ 4`, symbol 1 repeated and symbol 2 occurring once.
///
/// The steps use delayed column readings, so the repeated `1`s stay alone
/// in the first column while the second column collects `k ⋯ 3 2`. The path
/// has length at most `n - 3` for `n ≥ 5`. For `n = 4` it can take two
/// steps; some elements, such as `P_r(43211)`, are at distance 2 from the
/// target.
pub fn path_to_center_repeated_min(t: &PsTableau) -> Result<ShiftPath> {
    let (e, n) = check_right_full(t, 4)?;
    let target = repeated_min_target(&e)?;
    let one = Symbol::ONE;
    let two = Symbol::new(2).expect("positive");
    let top = Symbol::new(n as u32).expect("positive");
    let cap = (n - 3).max(2);
    let mut path = ShiftPath::new(t.clone());
    while *path.end() != target {
        if path.len() >= cap {
            return Err(Error::PathConstruction(cap));
        }
        let current = path.end().clone();
        let cols = current.columns();
        let reading = column_reading(&current);
        let only_ones = cols[0].entries().iter().all(|&a| a == one);
        let (x, y) = if cols.len() == 1 || (cols[1].bottom() == top && column_contains(&current, 0, top)) {
            split_reading(&reading, leading_run(&reading, top))
        } else if cols[1].bottom() == top {
            // the first column holds every symbol below n: delay a 1 to the end
            delayed_cut(&current, reading.len())?
        } else if cols[1].bottom() != two {
            let k = cols[1].bottom();
            delayed_cut(&current, first_in_column(&current, 1, k).expect("present"))?
        } else {
            // the second column starts with 2 and every symbol of the first
            // column other than 1 will stack on it: bring in the smallest
            // symbol below n still occurring past the second column
            let offset = cols[0].height() + cols[1].height();
            let rest = &reading.symbols()[offset..];
            let missing = rest.iter().filter(|&&a| a != top).min();
            match missing.and_then(|&s| rest.iter().position(|&a| a == s)) {
                Some(p) => delayed_cut(&current, offset + p)?,
                None if only_ones => {
                    // n is stacked on the second column: delay the 1 past it
                    let run = cols[1].reading().take_while(|&a| a == top).count();
                    delayed_cut(&current, cols[0].height() + run)?
                }
                None => delayed_cut(&current, reading.len())?,
            }
        };
        path.push(x, y);
    }
    Ok(path)
}
