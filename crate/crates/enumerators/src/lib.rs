//! Exact combinatorics for parking functions: counts (closed-form,
//! recursive, refined by first preference and by hole pattern), the
//! brute-force enumerator backing every identity test, displacement
//! and inversion enumerator polynomials, Tutte polynomials of complete
//! graphs computed from two directions, a root-per-component graph
//! counting oracle, Abel binomial sums, and the lucky-car generating
//! function.
//!
//! Everything here is exact: unbounded integers for counts and
//! polynomial coefficients, rationals wherever an intermediate term is
//! fractional. Floating point belongs to the `randomized` crate.
//!
//! Brute-force entry points take an explicit object cap and fail with
//! [`Error::ResourceLimit`] instead of silently truncating; pass
//! [`DEFAULT_ENUM_CAP`] when in doubt.

#![forbid(unsafe_code)]

mod abel;
mod counts;
mod disp;
mod error;
mod graphs;
mod lucky;
mod poly;
mod tutte;

pub use abel::{abel_sum, rational_pow};
pub use counts::{
    binomial, count_pf, count_pf_first, count_pf_recursive, count_pf_with_holes, enumerate_pf,
    multinomial, PfIter, DEFAULT_ENUM_CAP,
};
pub use disp::{disp_enumerator, inv_enumerator};
pub use error::Error;
pub use graphs::{displacement_binomial_sum, graph_count_components};
pub use lucky::lucky_gf;
pub use poly::{IntPoly, XyPoly};
pub use tutte::{
    forest_tutte_identity, tutte_complete, tutte_complete_unmemoized, tutte_from_pf, MAX_COMPLETE,
};
