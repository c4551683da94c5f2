//! Rescaled occupancy profiles between consecutive unattempted spots.
//!
//! The unattempted spots split `[1, n]` into segments. Within segment
//! `i`, bounded by unattempted spots `k_i < k_{i+1}` (with sentinels
//! `k_0 = 0` and `k_last = n+1`), every one of the `L = k_{i+1} - k_i - 1`
//! interior spots is taken, and the cars that fill them all prefer
//! spots inside the segment. The empirical distribution of those
//! preferences, recentered by the line and blown up by the square root
//! of the segment width, is the discrete excursion this module
//! evaluates on a uniform grid.

use crate::error::Error;
use pfcore::{unattempted_spots, ParkingFunction};

/// Evaluates the rescaled profile of `segment` at the grid points
/// `g / grid` for `g = 0, ..., grid`. Segments are numbered from 0
/// (left of the first unattempted spot) to `n - m` (right of the last).
/// A width-zero segment yields all zeros.
///
/// At `x`, the raw profile is the fraction of the segment's preferences
/// that fall within the first `ceil(L * x)` interior spots; the result
/// is `sqrt(k_{i+1} - k_i) * (profile - x)`, which is nonnegative
/// because prefixes of a parking function always carry enough cars.
pub fn excursion_profile(
    pf: &ParkingFunction,
    segment: usize,
    grid: usize,
) -> Result<Vec<f64>, Error> {
    let n = pf.spots();
    let m = pf.cars();
    assert!(grid > 0, "grid must have at least one step");

    let mut bounds = Vec::with_capacity(n - m + 2);
    bounds.push(0);
    bounds.extend(unattempted_spots(pf));
    bounds.push(n + 1);
    let segments = bounds.len() - 1;
    if segment >= segments {
        return Err(Error::InvalidSegment { segment, segments });
    }

    let lo = bounds[segment];
    let hi = bounds[segment + 1];
    let width = hi - lo - 1;
    if width == 0 {
        return Ok(vec![0.0; grid + 1]);
    }

    // counts[t] = number of preferences in (lo, lo + t].
    let mut counts = vec![0usize; width + 1];
    for &p in pf.prefs() {
        if p > lo && p < hi {
            counts[p - lo] += 1;
        }
    }
    for t in 1..=width {
        counts[t] += counts[t - 1];
    }

    let scale = ((hi - lo) as f64).sqrt();
    let len = width as f64;
    let profile = (0..=grid)
        .map(|g| {
            let x = g as f64 / grid as f64;
            // ceil(width * g / grid) in integers.
            let t = (width * g).div_ceil(grid);
            scale * (counts[t] as f64 / len - x)
        })
        .collect();
    Ok(profile)
}
