//! Cyclic shift graphs of the finite-rank monoids.
//!
//! Two elements are adjacent when they factor as `x·y` and `y·x`. A
//! [`ShiftGraph`] is built from an evaluation class by inserting every word
//! of the class, bucketing words by tableau, and joining the bucket of each
//! word to the buckets of its rotations.

mod center;
mod cocharge;
mod graph;

pub use center::{
    central_element, path_to_center, path_to_center_repeated_min, repeated_min_target, ShiftPath, ShiftStep,
};
pub use cocharge::{cocharge, cocharge_of_element, CochargeSequence};
pub use graph::{component, diameter, enumerate_class, shift_neighbors, ShiftGraph, UNREACHABLE};
