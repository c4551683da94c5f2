//! Labeled rooted forests and their bijections with parking functions.
//!
//! A forest here has `s` interchangeable roots and `m` labeled non-root
//! vertices. There are `s (m + s)^{m-1}` of them, exactly as many as
//! parking functions of `m` cars on `m + s - 1` spots, and this crate
//! implements three explicit bijections:
//!
//! * [`BfsOrder::LevelOrder`]: breadth-first over the whole forest;
//! * [`BfsOrder::TreeByTree`]: breadth-first one tree at a time, which
//!   makes each tree correspond to one classical segment of the parking
//!   function;
//! * [`pf_to_forest_disp`]: the label-trading bijection that turns total
//!   displacement into the forest's inversion count.
//!
//! All three share the same encoding backbone, the (counts, order) pair
//! from `pfcore`.

#![forbid(unsafe_code)]

mod bfs;
mod enumerate;
mod forest;
mod knuth;
#[cfg(test)]
mod testdata;
mod text;

pub use bfs::{bfs_vertices, forest_to_pf, pf_to_forest, BfsOrder};
pub use enumerate::{all_forests, count_forests, ForestIter};
pub use forest::{ForestError, RootedForest, Vertex};
pub use knuth::{forest_to_pf_disp, pf_to_forest_disp};
pub use text::{forest_to_dot, format_forest, parse_forest, ParseError};

use pfcore::{critical_lr_maxima, ParkingFunction};

/// The pair (critical left-to-right maxima, displacement) of a parking
/// function. Summed as `x^cm y^disp` over all of `PF(n, n)` these monomials
/// build the Tutte polynomial of the complete graph on `n + 1` vertices;
/// the enumerators crate does exactly that.
pub fn tutte_monomial(pf: &ParkingFunction) -> (usize, usize) {
    (critical_lr_maxima(pf), pf.displacement())
}
