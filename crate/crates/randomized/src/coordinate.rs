//! Exact and asymptotic laws for single coordinates, displacement
//! moments, coordinate covariances, and unattempted-spot locations of a
//! uniform parking function. Exact values are rationals; asymptotic
//! approximations are doubles, and the signature says which is which.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use enumerators::{binomial, count_pf, count_pf_first, enumerate_pf, rational_pow};
use pfcore::unattempted_spots;

use crate::error::Error;
use crate::rng::RandomSource;
use crate::sampler::sample_pf;

fn big(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Exact distribution of the first coordinate: entry j−1 is P(π₁ = j).
///
/// The probabilities are constant for j up to n−m+1 and non-increasing
/// beyond; both endpoints have closed forms, pinned in the tests.
pub fn pmf_first_coordinate(m: usize, n: usize) -> Result<Vec<BigRational>, Error> {
    let total = count_pf(m, n)?;
    (1..=n)
        .map(|j| {
            let c = count_pf_first(m, n, j)?;
            Ok(BigRational::new(c, total.clone()))
        })
        .collect()
}

/// Exact distribution of the largest feasible first preference: pairs
/// (k, P(feasible firsts = [1, k])) for k from n−m+1 to n.
///
/// Conditioned on the tail, the first coordinate is uniform on [1, k],
/// so Σ k·P([1,k]) = 1 and P(π₁ = j) = Σ_{k ≥ j} P([1,k]).
pub fn pmf_largest_feasible(m: usize, n: usize) -> Result<Vec<(usize, BigRational)>, Error> {
    if m > n {
        return Err(Error::CarsExceedSpots { cars: m, spots: n });
    }
    if m == 0 {
        return Err(Error::Unsupported {
            detail: "no first preference exists for zero cars".into(),
        });
    }
    let denom = rational_pow(&big(n + 1), m as i64 - 1)?;
    (n - m + 1..=n)
        .map(|k| {
            let tails = BigRational::from_integer(binomial(m - 1, n - k))
                * rational_pow(&big(k), (m + k) as i64 - n as i64 - 2)?
                * rational_pow(&big(n - k + 1), n as i64 - k as i64 - 1)?;
            Ok((k, tails / denom.clone()))
        })
        .collect()
}

/// Exact E(π₁^l) from the first-coordinate distribution.
pub fn moment_first(m: usize, n: usize, l: u32) -> Result<BigRational, Error> {
    let pmf = pmf_first_coordinate(m, n)?;
    let mut sum = BigRational::zero();
    for (j, p) in pmf.iter().enumerate() {
        sum += BigRational::from_integer(BigInt::from(j + 1).pow(l)) * p;
    }
    Ok(sum)
}

/// Second-order asymptotic approximation to E(π₁^l).
///
/// Away from the critical density (m < n) every moment has the same
/// two-term shape in 1/n. At m = n the expansion switches to half-power
/// corrections and only the first two moments are implemented.
pub fn moment_first_asymptotic(m: usize, n: usize, l: u32) -> Result<f64, Error> {
    if m > n {
        return Err(Error::CarsExceedSpots { cars: m, spots: n });
    }
    let nf = n as f64;
    if m < n {
        let c = m as f64 / nf;
        let lf = l as f64;
        let correction = (1.0 - c + lf * (1.0 - 3.0 * c)) / (2.0 * (1.0 - c));
        Ok(nf.powi(l as i32) / (lf + 1.0) * (1.0 + correction / nf))
    } else {
        match l {
            1 => Ok(nf / 2.0 * (1.0 - (std::f64::consts::PI / (2.0 * nf)).sqrt() + 10.0 / (3.0 * nf))),
            2 => {
                let root = (2.0 * std::f64::consts::PI).sqrt();
                Ok(nf * nf / 3.0 * (1.0 - 3.0 * root / (4.0 * nf.sqrt()) + 11.0 / (2.0 * nf)))
            }
            _ => Err(Error::Unsupported {
                detail: format!("moment {l} of the first coordinate at full density"),
            }),
        }
    }
}

/// The hypergeometric-style finite sum
/// Q_r(m, n) = Σ_j C(r+j, j) · n(n−1)⋯(n−j+1) / m^j,
/// which terminates at j = n. Displacement moments reduce to r = 0.
pub fn q_function(r: usize, m: usize, n: usize) -> BigRational {
    assert!(m >= 1, "q_function needs a positive denominator base");
    let mut sum = BigRational::zero();
    let mut falling = BigInt::one();
    let mut power = BigInt::one();
    for j in 0..=n {
        if j > 0 {
            falling *= BigInt::from(n - j + 1);
            power *= BigInt::from(m);
        }
        sum += BigRational::new(binomial(r + j, j) * falling.clone(), power.clone());
    }
    sum
}

/// Exact mean and second moment of total displacement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DispMoments {
    pub mean: BigRational,
    pub second_moment: BigRational,
}

/// Exact displacement moments via the Q-function closed forms.
///
/// Writing u = n−m+1 and q = Q_0(n+1, m−1), the mean is
/// m(q−1)/2 and the second moment is
/// m/12 · [u³+(m+3)u²+(8m+1)u+5m²+4m−1 − (u³+4u²+(6m+3)u+8m)q].
/// At full density m = n this reduces to the classical pair in terms of
/// Q(n+1) = Q_0(n+1, n), which the tests check independently.
pub fn disp_moments_exact(m: usize, n: usize) -> Result<DispMoments, Error> {
    if m > n {
        return Err(Error::CarsExceedSpots { cars: m, spots: n });
    }
    if m == 0 {
        return Ok(DispMoments { mean: BigRational::zero(), second_moment: BigRational::zero() });
    }
    let q = q_function(0, n + 1, m - 1);
    let u = big(n - m + 1);
    let mb = big(m);

    let mean = mb.clone() / big(2) * (q.clone() - BigRational::one());

    let u2 = u.clone() * u.clone();
    let u3 = u2.clone() * u.clone();
    let plain = u3.clone()
        + (mb.clone() + big(3)) * u2.clone()
        + (big(8) * mb.clone() + BigRational::one()) * u.clone()
        + big(5) * mb.clone() * mb.clone()
        + big(4) * mb.clone()
        - BigRational::one();
    let weighted = u3
        + big(4) * u2
        + (big(6) * mb.clone() + big(3)) * u
        + big(8) * mb.clone();
    let second_moment = mb / big(12) * (plain - weighted * q);

    Ok(DispMoments { mean, second_moment })
}

/// Asymptotic displacement mean and variance at density c = m/n < 1.
pub fn disp_moments_asymptotic(m: usize, n: usize) -> Result<(f64, f64), Error> {
    if m >= n {
        return Err(Error::Unsupported {
            detail: "displacement asymptotics here cover the subcritical regime m < n".into(),
        });
    }
    let nf = n as f64;
    let c = m as f64 / nf;
    let mean = c * c / (2.0 * (1.0 - c)) * nf + c * (c * c - c - 1.0) / (2.0 * (1.0 - c).powi(3));
    let var = c * (6.0 * c - 6.0 * c * c + 4.0 * c.powi(3) - c.powi(4)) / (12.0 * (1.0 - c).powi(4)) * nf;
    Ok((mean, var))
}

/// Exact coordinate covariance structure at full density, with the
/// large-n approximations alongside.
#[derive(Debug, Clone)]
pub struct CovarianceReport {
    pub spots: usize,
    pub var_first: BigRational,
    pub cov_first_second: BigRational,
    pub var_disp: BigRational,
    /// Var(disp) = n·Var(π₁) + n(n−1)·Cov(π₁, π₂), which holds exactly
    /// because displacement is a symmetric function of the coordinates.
    pub decomposition_holds: bool,
    pub var_first_asymptotic: f64,
    pub cov_asymptotic: f64,
}

/// Enumerates PF(n, n) and computes Var(π₁), Cov(π₁, π₂), and
/// Var(disp) exactly, checking the symmetry decomposition that ties
/// them together.
pub fn covariance_checks(n: usize, cap: u128) -> Result<CovarianceReport, Error> {
    if n == 0 {
        return Ok(CovarianceReport {
            spots: 0,
            var_first: BigRational::zero(),
            cov_first_second: BigRational::zero(),
            var_disp: BigRational::zero(),
            decomposition_holds: true,
            var_first_asymptotic: 0.0,
            cov_asymptotic: 0.0,
        });
    }
    let mut count = BigInt::zero();
    let mut sum1 = BigInt::zero();
    let mut sum1_sq = BigInt::zero();
    let mut sum12 = BigInt::zero();
    let mut sum_d = BigInt::zero();
    let mut sum_d_sq = BigInt::zero();
    for pf in enumerate_pf(n, n, cap)? {
        let p = pf.prefs();
        let first = BigInt::from(p[0]);
        count += 1;
        sum1 += &first;
        sum1_sq += &first * &first;
        if n >= 2 {
            sum12 += &first * BigInt::from(p[1]);
        }
        let d = BigInt::from(pf.displacement());
        sum_d += &d;
        sum_d_sq += &d * &d;
    }

    let mean1 = BigRational::new(sum1, count.clone());
    let var_first = BigRational::new(sum1_sq, count.clone()) - mean1.clone() * mean1.clone();
    let cov_first_second = if n >= 2 {
        BigRational::new(sum12, count.clone()) - mean1.clone() * mean1.clone()
    } else {
        BigRational::zero()
    };
    let mean_d = BigRational::new(sum_d, count.clone());
    let var_disp = BigRational::new(sum_d_sq, count) - mean_d.clone() * mean_d;

    let nb = big(n);
    let recomposed = nb.clone() * var_first.clone()
        + nb.clone() * (nb.clone() - BigRational::one()) * cov_first_second.clone();
    let decomposition_holds = recomposed == var_disp;

    let nf = n as f64;
    let pi = std::f64::consts::PI;
    Ok(CovarianceReport {
        spots: n,
        var_first,
        cov_first_second,
        var_disp,
        decomposition_holds,
        var_first_asymptotic: nf * nf / 12.0 + (4.0 - 3.0 * pi) / 24.0 * nf,
        cov_asymptotic: (8.0 - 3.0 * pi) / 24.0 * nf + (208.0 - 57.0 * pi) / 144.0,
    })
}

/// Exact expected locations of the n−m unattempted spots:
/// E(k_i) = i(n+1)/(n−m+1).
pub fn expected_holes(m: usize, n: usize) -> Vec<BigRational> {
    (1..=n.saturating_sub(m))
        .map(|i| big(i * (n + 1)) / big(n - m + 1))
        .collect()
}

/// Monte Carlo means of the unattempted-spot locations.
pub fn hole_estimator(m: usize, n: usize, rng: &mut RandomSource, trials: u64) -> Vec<f64> {
    let holes = n - m;
    if trials == 0 {
        return Vec::new();
    }
    let mut sums = vec![0.0f64; holes];
    for _ in 0..trials {
        let pf = sample_pf(m, n, rng);
        for (i, &k) in unattempted_spots(&pf).iter().enumerate() {
            sums[i] += k as f64;
        }
    }
    sums.iter().map(|s| s / trials as f64).collect()
}

/// Exact E(disp) via the hole identity
/// E(disp) = C(n+1, 2) − m·E(π₁) − (n+1)(n−m)/2,
/// used as an independent cross-check of the Q-function route.
pub fn disp_mean_via_holes(m: usize, n: usize) -> Result<BigRational, Error> {
    if m == 0 {
        return Ok(BigRational::zero());
    }
    let choose2 = big(n * (n + 1) / 2);
    let hole_mass = big((n + 1) * (n - m)) / big(2);
    Ok(choose2 - big(m) * moment_first(m, n, 1)? - hole_mass)
}

/// Nearest double to an exact rational. The conversion scales by bit
/// length internally, so ratios of astronomically large integers come
/// out right instead of overflowing pointwise.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use enumerators::DEFAULT_ENUM_CAP;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_first_coordinate_distributions_are_pinned() {
        assert_eq!(pmf_first_coordinate(2, 2).unwrap(), vec![rat(2, 3), rat(1, 3)]);
        assert_eq!(
            pmf_first_coordinate(2, 3).unwrap(),
            vec![rat(3, 8), rat(3, 8), rat(2, 8)]
        );
        // A single car is uniform.
        assert_eq!(
            pmf_first_coordinate(1, 4).unwrap(),
            vec![rat(1, 4); 4]
        );
    }

    #[test]
    fn largest_feasible_pmf_sums_against_the_coordinate_law() {
        for n in 1..=7usize {
            for m in 1..=n {
                let per_k = pmf_largest_feasible(m, n).unwrap();
                let pmf = pmf_first_coordinate(m, n).unwrap();

                // Σ k·q_k = 1: the first coordinate is uniform on [1,k]
                // given the tail.
                let mass: BigRational =
                    per_k.iter().map(|(k, q)| big(*k) * q).sum();
                assert_eq!(mass, BigRational::one(), "m={m} n={n}");

                // P(π₁=j) accumulates the q_k with k ≥ j.
                for j in 1..=n {
                    let acc: BigRational = per_k
                        .iter()
                        .filter(|(k, _)| *k >= j)
                        .map(|(_, q)| q.clone())
                        .sum();
                    assert_eq!(acc, pmf[j - 1], "m={m} n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn first_moment_matches_pinned_values() {
        assert_eq!(moment_first(2, 2, 1).unwrap(), rat(4, 3));
        // Uniform single coordinate.
        assert_eq!(moment_first(1, 9, 1).unwrap(), rat(5, 1));
    }

    #[test]
    fn q_function_values_are_pinned() {
        assert_eq!(q_function(0, 3, 2), rat(17, 9));
        assert_eq!(q_function(0, 3, 1), rat(4, 3));
        assert_eq!(q_function(2, 5, 0), rat(1, 1));
    }

    #[test]
    fn q_function_growth_matches_the_root_n_scale() {
        // Q_0(n+1, n) grows like sqrt(pi n / 2).
        let n = 100;
        let q = rational_to_f64(&q_function(0, n + 1, n));
        let ratio = q / (std::f64::consts::PI * n as f64 / 2.0).sqrt();
        assert!((ratio - 1.0).abs() < 0.1, "ratio {ratio}");
    }

    #[test]
    fn displacement_moments_are_pinned_at_two_cars() {
        let m = disp_moments_exact(2, 2).unwrap();
        assert_eq!(m.mean, rat(1, 3));
        assert_eq!(m.second_moment, rat(1, 3));
        let empty = disp_moments_exact(0, 4).unwrap();
        assert_eq!(empty.mean, BigRational::zero());
    }

    #[test]
    fn full_density_q_form_agrees_with_the_general_form() {
        // At m = n the classical pair uses Q(n+1) = Q_0(n+1, n); the
        // implementation uses Q_0(n+1, n−1). This checks the two
        // algebraic routes coincide.
        for n in 1..=25usize {
            let general = disp_moments_exact(n, n).unwrap();
            let q = q_function(0, n + 1, n);
            let classical_mean =
                big(n + 1) / big(2) * (q.clone() - BigRational::one()) - big(n) / big(2);
            assert_eq!(general.mean, classical_mean, "n={n}");

            let second = big(n) / big(12)
                * (big(5 * n * n + 13 * n + 4)
                    - big(14 * n + 8) * big(n + 1) / big(n) * (q - BigRational::one()));
            assert_eq!(general.second_moment, second, "n={n}");
        }
    }

    #[test]
    fn covariances_at_two_spots_are_pinned() {
        let r = covariance_checks(2, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(r.var_first, rat(2, 9));
        assert_eq!(r.cov_first_second, rat(-1, 9));
        assert_eq!(r.var_disp, rat(2, 9));
        assert!(r.decomposition_holds);

        let lone = covariance_checks(1, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(lone.var_first, BigRational::zero());
        assert_eq!(lone.var_disp, BigRational::zero());
        assert!(lone.decomposition_holds);
    }

    #[test]
    fn expected_hole_positions_are_linear() {
        assert_eq!(expected_holes(1, 2), vec![rat(3, 2)]);
        assert_eq!(expected_holes(3, 5), vec![rat(2, 1), rat(4, 1)]);
        assert_eq!(expected_holes(4, 4), Vec::<BigRational>::new());
    }

    #[test]
    fn hole_identity_for_the_displacement_mean() {
        for n in 1..=6usize {
            for m in 1..=n {
                assert_eq!(
                    disp_mean_via_holes(m, n).unwrap(),
                    disp_moments_exact(m, n).unwrap().mean,
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn asymptotic_moment_needs_a_supported_regime() {
        assert!(moment_first_asymptotic(5, 5, 3).is_err());
        assert!(moment_first_asymptotic(5, 5, 1).is_ok());
        assert!(moment_first_asymptotic(3, 6, 4).is_ok());
    }
}
