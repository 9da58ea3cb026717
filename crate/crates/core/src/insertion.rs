//! PS insertion of words, column readings and the fibres of the congruence.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Guard, Result};
use crate::multiset::for_each_word;
use crate::tableau::{Column, PsTableau};
use crate::word::{Symbol, Variant, Word};

impl PsTableau {
    /// One insertion step. Appends a new column when `a` is at least (left)
    /// or greater than (right) the last bottom entry; otherwise `a` goes to
    /// the bottom of the leftmost column whose bottom is greater than (left)
    /// or at least (right) `a`, pushing that column up.
    pub fn insert(&mut self, a: Symbol) {
        let variant = self.variant();
        let columns = self.columns_mut();
        let m = match variant {
            Variant::Left => columns.partition_point(|c| c.bottom() <= a),
            Variant::Right => columns.partition_point(|c| c.bottom() < a),
        };
        if m == columns.len() {
            columns.push(Column::single(a));
        } else {
            columns[m].push_bottom(a);
        }
    }

    pub fn insert_all<I: IntoIterator<Item = Symbol>>(&mut self, symbols: I) {
        for a in symbols {
            self.insert(a);
        }
    }

    /// The product of two elements: `self · other`.
    pub fn product(&self, other: &PsTableau) -> PsTableau {
        let mut t = self.clone();
        t.insert_all(column_reading(other).iter());
        t
    }
}

pub fn insert_symbol(t: &PsTableau, a: Symbol) -> PsTableau {
    let mut out = t.clone();
    out.insert(a);
    out
}

/// `P_l(w)` or `P_r(w)`.
pub fn insert_word(w: &Word, variant: Variant) -> PsTableau {
    insert_symbols(w.symbols(), variant)
}

pub fn insert_symbols(symbols: &[Symbol], variant: Variant) -> PsTableau {
    let mut t = PsTableau::empty(variant);
    t.insert_all(symbols.iter().copied());
    t
}

/// Columns left to right, each read from top to bottom.
pub fn column_reading(t: &PsTableau) -> Word {
    let mut symbols = Vec::with_capacity(t.len());
    for c in t.columns() {
        symbols.extend(c.reading());
    }
    Word::new(symbols)
}

/// Readings of a right tableau that postpone the bottom entry of the first
/// column to some strictly later position, keeping only those that still
/// insert to `t`. The column reading itself is never included.
pub fn delayed_column_readings(t: &PsTableau) -> Result<BTreeSet<Word>> {
    if t.variant() != Variant::Right {
        return Err(Error::DelayedReadingsUndefined("tableau is not a right tableau"));
    }
    let Some(min) = t.min_symbol() else {
        return Err(Error::DelayedReadingsUndefined("tableau is empty"));
    };
    if t.evaluation().count(min) < 2 {
        return Err(Error::DelayedReadingsUndefined("minimum symbol occurs only once"));
    }
    let reading = column_reading(t).into_symbols();
    let first_height = t.columns()[0].height();
    // the bottom of the first column is the last symbol of its reading
    let held = first_height - 1;
    let mut rest = reading.clone();
    let delayed = rest.remove(held);
    let mut out = BTreeSet::new();
    for pos in held + 1..=rest.len() {
        let mut candidate = rest.clone();
        candidate.insert(pos, delayed);
        if insert_symbols(&candidate, Variant::Right) == *t {
            out.insert(Word::new(candidate));
        }
    }
    Ok(out)
}

/// Every word in the congruence class of `t`.
pub fn words_of(t: &PsTableau, guard: Guard) -> Result<BTreeSet<Word>> {
    let e = t.evaluation();
    guard.check(e.multinomial())?;
    let variant = t.variant();
    let mut out = BTreeSet::new();
    let mut scratch = PsTableau::empty(variant);
    for_each_word(&e, |w| {
        scratch.columns_mut().clear();
        scratch.insert_all(w.iter().copied());
        if scratch == *t {
            out.insert(Word::new(w.to_vec()));
        }
    });
    Ok(out)
}

/// `u ≡x v`.
pub fn equivalent(u: &Word, v: &Word, variant: Variant) -> bool {
    u.len() == v.len() && insert_word(u, variant) == insert_word(v, variant)
}
