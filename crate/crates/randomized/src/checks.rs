//! Monte Carlo validation checks. Each one draws from the exact
//! sampler, compares against a closed-form reference, and returns a
//! [`SampleReport`] whose verdicts use explicit thresholds: chi-square
//! critical values at a stated significance, or three standard errors
//! for mean estimates.

use std::collections::HashMap;

use enumerators::enumerate_pf;
use statrs::distribution::{ChiSquared, ContinuousCDF, Normal};

use crate::coordinate::{expected_holes, rational_to_f64};
use crate::error::Error;
use crate::report::{ReportConfig, SampleReport};
use crate::rng::RandomSource;
use crate::sampler::sample_pf;

/// Draws `trials` samples and tests uniformity over the full support
/// with a chi-square statistic. The support is enumerated exactly, so
/// this is only practical when the counting bound `(n-m+1)(n+1)^(m-1)`
/// is modest; `cap` guards against accidental blowups.
pub fn chi_square_uniformity(
    cars: usize,
    spots: usize,
    trials: u64,
    seed: u64,
    significance: f64,
    cap: u128,
) -> Result<SampleReport, Error> {
    if cars > spots {
        return Err(Error::CarsExceedSpots { cars, spots });
    }
    let support: Vec<Vec<usize>> = enumerate_pf(cars, spots, cap)?
        .map(|pf| pf.prefs().to_vec())
        .collect();
    let index: HashMap<&[usize], usize> = support
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();

    let mut rng = RandomSource::new(seed);
    let mut observed = vec![0u64; support.len()];
    for _ in 0..trials {
        let pf = sample_pf(cars, spots, &mut rng);
        let i = index[pf.prefs()];
        observed[i] += 1;
    }

    let cells = support.len();
    let expected = trials as f64 / cells as f64;
    let statistic: f64 = observed
        .iter()
        .map(|&o| {
            let d = o as f64 - expected;
            d * d / expected
        })
        .sum();

    let dof = (cells - 1) as f64;
    let chi = ChiSquared::new(dof).expect("positive degrees of freedom");
    let critical = chi.inverse_cdf(1.0 - significance);
    let p_value = 1.0 - chi.cdf(statistic);

    let mut report = SampleReport::new("chi_square_uniformity", ReportConfig {
        cars,
        spots,
        trials,
        seed,
    });
    report.stat("cells", cells as f64);
    report.stat("dof", dof);
    report.stat("statistic", statistic);
    report.stat("critical", critical);
    report.stat("p_value", p_value);
    report.stat("significance", significance);
    // Per-cell rows would swamp the report at realistic sizes; record
    // only the extremes.
    if let (Some(&min), Some(&max)) = (observed.iter().min(), observed.iter().max()) {
        report.row("min_cell".into(), min as f64, expected, 0.0);
        report.row("max_cell".into(), max as f64, expected, 0.0);
    }
    report.verdict("chi_square_below_critical", statistic, critical, statistic <= critical);
    Ok(report)
}

/// Standardizes the lucky-car count with its exact mean and variance
/// and measures the Kolmogorov distance from the standard normal over
/// the sample. With zero trials the report is empty and vacuously
/// passing.
pub fn lucky_clt_check(
    cars: usize,
    spots: usize,
    trials: u64,
    seed: u64,
    threshold: f64,
) -> Result<SampleReport, Error> {
    if cars > spots {
        return Err(Error::CarsExceedSpots { cars, spots });
    }
    let mut report = SampleReport::new("lucky_clt", ReportConfig {
        cars,
        spots,
        trials,
        seed,
    });
    if trials == 0 {
        return Ok(report);
    }

    // Lucky cars are a sum of independent indicators, car i succeeding
    // with probability 1 - (i-1)/(n+1), which gives the exact moments.
    let shift = 1.0 / (spots as f64 + 1.0);
    let mut mean = 0.0;
    let mut var = 0.0;
    for i in 0..cars {
        let q = i as f64 * shift;
        mean += 1.0 - q;
        var += q * (1.0 - q);
    }
    let sd = var.sqrt();
    report.stat("mean", mean);
    report.stat("sd", sd);

    let mut rng = RandomSource::new(seed);
    let mut standardized: Vec<f64> = (0..trials)
        .map(|_| {
            let pf = sample_pf(cars, spots, &mut rng);
            (pf.lucky_count() as f64 - mean) / sd
        })
        .collect();
    standardized.sort_by(|a, b| a.partial_cmp(b).expect("finite standardized values"));

    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    let count = trials as f64;
    let mut ks = 0.0f64;
    for (i, z) in standardized.iter().enumerate() {
        let phi = normal.cdf(*z);
        let above = (i as f64 + 1.0) / count - phi;
        let below = phi - i as f64 / count;
        ks = ks.max(above.max(below));
    }
    report.stat("ks_distance", ks);

    // Decile table of the empirical quantiles against the normal ones.
    for d in 1..10 {
        let q = d as f64 / 10.0;
        let idx = ((q * count) as usize).min(standardized.len() - 1);
        report.row(
            format!("decile_{}", d),
            standardized[idx],
            normal.inverse_cdf(q),
            0.0,
        );
    }
    report.verdict("ks_below_threshold", ks, threshold, ks <= threshold);
    Ok(report)
}

/// Estimates the occupancy-gap indicator means and compares each
/// against its exact value at three standard errors.
pub fn hole_means_check(
    cars: usize,
    spots: usize,
    trials: u64,
    seed: u64,
) -> Result<SampleReport, Error> {
    if cars > spots {
        return Err(Error::CarsExceedSpots { cars, spots });
    }
    let exact: Vec<f64> = expected_holes(cars, spots)
        .iter()
        .map(rational_to_f64)
        .collect();

    let gaps = spots - cars;
    let mut rng = RandomSource::new(seed);
    let mut sums = vec![0.0f64; gaps];
    let mut sq = vec![0.0f64; gaps];
    for _ in 0..trials {
        let pf = sample_pf(cars, spots, &mut rng);
        for (i, &spot) in pfcore::unattempted_spots(&pf).iter().enumerate() {
            let v = spot as f64;
            sums[i] += v;
            sq[i] += v * v;
        }
    }

    let mut report = SampleReport::new("hole_means", ReportConfig {
        cars,
        spots,
        trials,
        seed,
    });
    let count = trials as f64;
    for i in 0..gaps {
        let mean = sums[i] / count;
        let variance = (sq[i] / count - mean * mean).max(0.0);
        let se = (variance / count).sqrt();
        let z = if se > 0.0 { (mean - exact[i]) / se } else { 0.0 };
        report.row(format!("gap_{}", i + 1), mean, exact[i], z);
        report.verdict(&format!("gap_{}_within_3se", i + 1), z.abs(), 3.0, z.abs() <= 3.0);
    }
    Ok(report)
}

/// Compares the distribution of the number of repeated consecutive
/// preferences against the Poisson law with rate `m/n`, one verdict per
/// count `j <= max_j`, each at three standard errors.
pub fn repeats_check(
    cars: usize,
    spots: usize,
    trials: u64,
    seed: u64,
    max_j: usize,
) -> Result<SampleReport, Error> {
    if cars > spots {
        return Err(Error::CarsExceedSpots { cars, spots });
    }
    let mut rng = RandomSource::new(seed);
    let mut tally = vec![0u64; max_j + 2];
    for _ in 0..trials {
        let pf = sample_pf(cars, spots, &mut rng);
        let p = pf.prefs();
        let repeats = (1..p.len()).filter(|&i| p[i] == p[i - 1]).count();
        let slot = repeats.min(max_j + 1);
        tally[slot] += 1;
    }

    let rate = cars as f64 / spots as f64;
    let mut report = SampleReport::new("repeats", ReportConfig {
        cars,
        spots,
        trials,
        seed,
    });
    report.stat("rate", rate);
    let count = trials as f64;
    let mut pmf = (-rate).exp();
    for j in 0..=max_j {
        if j > 0 {
            pmf *= rate / j as f64;
        }
        let observed = tally[j] as f64 / count;
        let se = (pmf * (1.0 - pmf) / count).sqrt();
        let z = if se > 0.0 { (observed - pmf) / se } else { 0.0 };
        report.row(format!("repeats_{}", j), observed, pmf, z);
        report.verdict(&format!("repeats_{}_within_3se", j), z.abs(), 3.0, z.abs() <= 3.0);
    }
    Ok(report)
}

/// Estimates the variance of the first preference on the full-density
/// diagonal, rescaled by `n^2`, and tests agreement with the limiting
/// value `1/12` at three standard errors of the sample variance.
pub fn var_first_mc(spots: usize, trials: u64, seed: u64) -> Result<SampleReport, Error> {
    let mut rng = RandomSource::new(seed);
    let mut values: Vec<f64> = Vec::with_capacity(trials as usize);
    for _ in 0..trials {
        let pf = sample_pf(spots, spots, &mut rng);
        values.push(pf.prefs()[0] as f64);
    }

    let count = trials as f64;
    let mean = values.iter().sum::<f64>() / count;
    let m2 = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / count;
    let m4 = values.iter().map(|v| (v - mean).powi(4)).sum::<f64>() / count;
    // Standard error of the sample variance from the fourth central
    // moment.
    let se_var = ((m4 - m2 * m2).max(0.0) / count).sqrt();

    let scale = (spots as f64) * (spots as f64);
    let observed = m2 / scale;
    let target = 1.0 / 12.0;
    let se = se_var / scale;
    let z = if se > 0.0 { (observed - target) / se } else { 0.0 };

    let mut report = SampleReport::new("var_first", ReportConfig {
        cars: spots,
        spots,
        trials,
        seed,
    });
    report.stat("mean_first", mean);
    report.stat("var_first", m2);
    report.row("var_over_n2".into(), observed, target, z);
    report.verdict("var_within_3se", z.abs(), 3.0, z.abs() <= 3.0);
    Ok(report)
}
