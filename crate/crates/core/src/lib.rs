//! Left and right Patience Sorting monoids at finite rank.
//!
//! Elements are represented by their PS tableaux. The crate covers insertion
//! and readings ([`insertion`]), the defining relations of both monoids
//! ([`presentation`]), the cyclic shift graph with diameters, central
//! elements and the cocharge invariant ([`shiftgraph`]), and bounded
//! deciders for the conjugacy relations ([`conjugacy`]).
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod conjugacy;
mod error;
pub mod insertion;
pub mod multiset;
pub mod presentation;
pub mod shiftgraph;
pub mod tableau;
pub mod word;

pub use error::{Error, Guard, Result};
pub use insertion::{column_reading, insert_word};
pub use tableau::{Column, PsTableau};
pub use word::{Evaluation, Symbol, Variant, Word};
