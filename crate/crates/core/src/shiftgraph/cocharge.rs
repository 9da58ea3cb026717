use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::insertion::column_reading;
use crate::tableau::PsTableau;
use crate::word::{Variant, Word};

/// Cocharge labels of a standard word, entry `a-1` labelling symbol `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CochargeSequence(Vec<usize>);

impl CochargeSequence {
    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    /// Starts at 0 and every step adds 0 or 1.
    pub fn is_well_formed(&self) -> bool {
        self.0.first().is_none_or(|&f| f == 0) && self.0.windows(2).all(|p| p[1] == p[0] || p[1] == p[0] + 1)
    }

    /// Largest termwise difference to `other`; `None` if lengths differ.
    pub fn max_difference(&self, other: &CochargeSequence) -> Option<usize> {
        (self.0.len() == other.0.len())
            .then(|| self.0.iter().zip(&other.0).map(|(a, b)| a.abs_diff(*b)).max().unwrap_or(0))
    }
}

impl fmt::Display for CochargeSequence {
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

/// Symbol 1 gets label 0; `a+1` gets the label of `a`, plus one when `a+1`
/// sits to the left of `a` (the clockwise walk from `a` wraps past the
/// marker).
pub fn cocharge(w: &Word) -> Result<CochargeSequence> {
    if !w.is_standard() {
        return Err(Error::NotStandard);
    }
    let mut position = vec![0; w.len()];
    for (i, s) in w.iter().enumerate() {
        position[s.index()] = i;
    }
    let mut labels = Vec::with_capacity(w.len());
    labels.push(0);
    for a in 1..w.len() {
        let prev = labels[a - 1];
        labels.push(if position[a] < position[a - 1] { prev + 1 } else { prev });
    }
    Ok(CochargeSequence(labels))
}

/// Cocharge of a standard right element, through its column reading.
pub fn cocharge_of_element(t: &PsTableau) -> Result<CochargeSequence> {
    if t.variant() != Variant::Right {
        return Err(Error::Precondition("cocharge of an element needs a right tableau"));
    }
    cocharge(&column_reading(t))
}
