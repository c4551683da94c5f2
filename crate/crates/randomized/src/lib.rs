//! Exact sampling and Monte Carlo validation for parking functions.
//!
//! The centerpiece is a rejection-free uniform sampler built on
//! circular parking: a uniform word over one extra spot, rotated so a
//! uniformly chosen unattempted spot wraps to the top, is a uniform
//! parking function. Around it sit the closed-form laws it can be
//! tested against: the distribution and moments of the first
//! preference, displacement moments, occupancy-gap positions, the
//! Borel and Poisson boundary approximations, lucky-car normality,
//! pattern ensembles, and rescaled segment profiles.
//!
//! All randomness flows through [`RandomSource`], a SplitMix64 stream,
//! so every check is reproducible from its seed.

#![forbid(unsafe_code)]

mod borel;
mod checks;
mod coordinate;
mod ensemble;
mod error;
mod excursion;
mod report;
mod rng;
mod sampler;
mod shuffle;

pub use borel::{borel_pmf, borel_tail, boundary_laws, BoundaryLaws};
pub use checks::{
    chi_square_uniformity, hole_means_check, lucky_clt_check, repeats_check, var_first_mc,
};
pub use coordinate::{
    covariance_checks, disp_mean_via_holes, disp_moments_asymptotic, disp_moments_exact,
    expected_holes, hole_estimator, moment_first, moment_first_asymptotic,
    pmf_first_coordinate, pmf_largest_feasible, q_function, rational_to_f64, CovarianceReport,
    DispMoments,
};
pub use ensemble::{pattern_distributions, PatternRow};
pub use error::Error;
pub use excursion::excursion_profile;
pub use report::{ReportConfig, ReportRow, SampleReport, Verdict};
pub use rng::{sub_seed, RandomSource};
pub use sampler::sample_pf;
pub use shuffle::{max_first_preference, recompose, shuffle_decompose, ShuffleError, ShuffleWitness};
