//! PS tableaux: bottom-justified columns with variant-dependent monotonicity.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::word::{Evaluation, Symbol, Variant};

/// One column, entries listed bottom to top. Never empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Column(Vec<Symbol>);

impl Column {
    pub fn new(entries: Vec<Symbol>) -> Result<Column> {
        if entries.is_empty() {
            return Err(Error::InvalidTableau("empty column"));
        }
        Ok(Column(entries))
    }

    pub(crate) fn single(a: Symbol) -> Column {
        Column(alloc::vec![a])
    }

    pub fn entries(&self) -> &[Symbol] {
        &self.0
    }

    pub fn bottom(&self) -> Symbol {
        self.0[0]
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    /// Left columns strictly decrease from top to bottom, right columns
    /// weakly decrease.
    pub fn is_valid(&self, variant: Variant) -> bool {
        !self.0.is_empty()
            && self.0.windows(2).all(|p| match variant {
                Variant::Left => p[0] < p[1],
                Variant::Right => p[0] <= p[1],
            })
    }

    /// Puts `a` at the bottom, pushing every entry one box up.
    pub(crate) fn push_bottom(&mut self, a: Symbol) {
        self.0.insert(0, a);
    }

    /// Entries read from top to bottom.
    pub fn reading(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().rev().copied()
    }
}

/// A left (lPS) or right (rPS) Patience Sorting tableau. Columns are listed
/// leftmost first. The empty tableau is the identity element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PsTableau {
    variant: Variant,
    columns: Vec<Column>,
}

impl PsTableau {
    pub fn empty(variant: Variant) -> PsTableau {
        PsTableau { variant, columns: Vec::new() }
    }

    /// Builds a tableau without checking the shape invariants; see
    /// [`PsTableau::is_valid`].
    pub fn from_columns_unchecked(variant: Variant, columns: Vec<Column>) -> PsTableau {
        PsTableau { variant, columns }
    }

    pub fn from_columns(variant: Variant, columns: Vec<Column>) -> Result<PsTableau> {
        let t = PsTableau { variant, columns };
        t.check()?;
        Ok(t)
    }

    /// Columns given as raw bottom-to-top values.
    pub fn from_values(variant: Variant, columns: &[&[u32]]) -> Result<PsTableau> {
        let columns = columns
            .iter()
            .map(|c| c.iter().map(|&v| Symbol::try_from(v)).collect::<Result<Vec<_>>>().and_then(Column::new))
            .collect::<Result<Vec<_>>>()?;
        PsTableau::from_columns(variant, columns)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub(crate) fn columns_mut(&mut self) -> &mut Vec<Column> {
        &mut self.columns
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Number of boxes.
    pub fn len(&self) -> usize {
        self.columns.iter().map(Column::height).sum()
    }

    pub fn bottom_row(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.columns.iter().map(Column::bottom)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.columns.iter().flat_map(|c| c.entries().iter().copied())
    }

    pub fn evaluation(&self) -> Evaluation {
        let symbols: Vec<Symbol> = self.symbols().collect();
        Evaluation::of_symbols(&symbols)
    }

    pub fn min_symbol(&self) -> Option<Symbol> {
        self.bottom_row().next()
    }

    pub fn max_symbol(&self) -> Option<Symbol> {
        self.symbols().max()
    }

    pub fn is_standard(&self) -> bool {
        self.evaluation().is_standard()
    }

    /// Column and bottom-row invariants for the tableau's variant.
    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    fn check(&self) -> Result<()> {
        if !self.columns.iter().all(|c| c.is_valid(self.variant)) {
            return Err(Error::InvalidTableau(match self.variant {
                Variant::Left => "left columns must strictly decrease from top to bottom",
                Variant::Right => "right columns must weakly decrease from top to bottom",
            }));
        }
        let bottoms: Vec<Symbol> = self.bottom_row().collect();
        let row_ok = bottoms.windows(2).all(|p| match self.variant {
            Variant::Left => p[0] <= p[1],
            Variant::Right => p[0] < p[1],
        });
        if !row_ok {
            return Err(Error::InvalidTableau(match self.variant {
                Variant::Left => "left bottom row must weakly increase",
                Variant::Right => "right bottom row must strictly increase",
            }));
        }
        Ok(())
    }
}

/// Free-function form of [`PsTableau::is_valid`].
pub fn validate_tableau(t: &PsTableau) -> bool {
    t.is_valid()
}

/// Draws the diagram with the bottom row last, as the tableaux are usually
/// pictured. The empty tableau renders as `∅`.
impl fmt::Display for PsTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.columns.is_empty() {
            return f.write_str("∅");
        }
        let width = self.symbols().map(|s| decimal_width(s.get())).max().unwrap_or(1);
        let height = self.columns.iter().map(Column::height).max().unwrap_or(0);
        for row in (0..height).rev() {
            let mut line = String::new();
            for (i, col) in self.columns.iter().enumerate() {
                if i > 0 {
                    line.push(' ');
                }
                match col.entries().get(row) {
                    Some(s) => {
                        let text = alloc::format!("{:>width$}", s.get(), width = width);
                        line.push_str(&text);
                    }
                    None => line.extend(core::iter::repeat_n(' ', width)),
                }
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

fn decimal_width(mut v: u32) -> usize {
    let mut w = 1;
    while v >= 10 {
        v /= 10;
        w += 1;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn example_tableaux_validate() {
        let r = PsTableau::from_values(Variant::Left, &[&[1, 4], &[1, 5], &[2, 3, 4]]).unwrap();
        assert!(r.is_valid());
        let s = PsTableau::from_values(Variant::Right, &[&[1, 1, 4], &[2, 3, 4, 5]]).unwrap();
        assert!(s.is_valid());
        assert!(PsTableau::empty(Variant::Left).is_valid());
    }

    #[test]
    fn invalid_shapes_are_rejected() {
        let col = |v: &[u32]| Column::new(v.iter().map(|&x| Symbol::new(x).unwrap()).collect()).unwrap();
        let t = PsTableau::from_columns_unchecked(Variant::Left, alloc::vec![col(&[1, 1])]);
        assert!(!validate_tableau(&t));
        let t = PsTableau::from_columns_unchecked(Variant::Right, alloc::vec![col(&[1, 1])]);
        assert!(validate_tableau(&t));
        let t = PsTableau::from_columns_unchecked(Variant::Right, alloc::vec![col(&[1]), col(&[1])]);
        assert!(!validate_tableau(&t));
        let t = PsTableau::from_columns_unchecked(Variant::Left, alloc::vec![col(&[1]), col(&[1])]);
        assert!(validate_tableau(&t));
        let t = PsTableau::from_columns_unchecked(Variant::Left, alloc::vec![col(&[2]), col(&[1])]);
        assert!(!validate_tableau(&t));
        assert!(Column::new(alloc::vec![]).is_err());
    }

    #[test]
    fn diagram_rendering() {
        let r = PsTableau::from_values(Variant::Left, &[&[1, 4], &[1, 5], &[2, 3, 4]]).unwrap();
        assert_eq!(r.to_string(), "    4\n4 5 3\n1 1 2\n");
        assert_eq!(PsTableau::empty(Variant::Right).to_string(), "∅");
    }
}
