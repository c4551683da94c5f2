//! Core types and statistics for parking functions with more spots than
//! cars.
//!
//! `m` cars drive down a one-way street of `n` spots; car `i` heads for its
//! preferred spot and takes the first free one at or beyond it. A
//! preference sequence under which everyone parks is a parking function.
//! This crate owns the validated [`ParkingFunction`] type, the parking
//! process itself, and the per-function statistics everything downstream
//! builds on: displacement, lucky cars, critical left-to-right maxima, the
//! queue profile, the split into independent classical segments, and the
//! (counts, order) encoding.
//!
//! The crate is dependency-free and deliberately small; enumeration,
//! bijections to forests, and randomized checks live in sibling crates.

#![forbid(unsafe_code)]

mod error;
mod multipark;
mod pairs;
mod parking;
mod queue;
mod segments;
mod stats;
mod text;

pub use error::{Error, Incompatibility};
pub use multipark::{
    budgets_park, budgets_to_prefs, complete_graph_budgets_ok, prefs_to_budgets,
};
pub use pairs::{
    from_compatible_pair, invert, order_permutation, reading_word, specification,
};
pub use parking::{is_parking_function, park, Outcome, ParkingFunction};
pub use queue::{queue_profile, unattempted_spots};
pub use segments::SegmentDecomposition;
pub use stats::critical_lr_maxima;
pub use text::{format_pf, parse_pf, ParseError};
