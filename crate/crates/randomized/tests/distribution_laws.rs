//! Closed-form laws against direct enumeration at small sizes, and the
//! structural properties of the first-coordinate distribution.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use enumerators::enumerate_pf;
use randomized::{
    covariance_checks, disp_mean_via_holes, disp_moments_exact, moment_first,
    pattern_distributions, pmf_first_coordinate,
};

const CAP: u128 = 1 << 20;

fn big(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[test]
fn first_coordinate_moments_match_enumeration() {
    for n in 1..=5usize {
        for m in 1..=n {
            let mut sums = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
            let mut total = 0usize;
            for pf in enumerate_pf(m, n, CAP).unwrap() {
                let first = pf.prefs()[0];
                sums[0] += big(first);
                sums[1] += big(first * first);
                sums[2] += big(first * first * first);
                total += 1;
            }
            for (l, sum) in sums.into_iter().enumerate() {
                let brute = sum / big(total);
                let closed = moment_first(m, n, l as u32 + 1).unwrap();
                assert_eq!(closed, brute, "order {} moment at ({m}, {n})", l + 1);
            }
        }
    }
}

#[test]
fn displacement_moments_match_enumeration() {
    for n in 1..=5usize {
        for m in 0..=n {
            let mut mean = BigRational::zero();
            let mut second = BigRational::zero();
            let mut total = 0usize;
            for pf in enumerate_pf(m, n, CAP).unwrap() {
                let d = pf.displacement();
                mean += big(d);
                second += big(d * d);
                total += 1;
            }
            mean /= big(total);
            second /= big(total);

            let closed = disp_moments_exact(m, n).unwrap();
            assert_eq!(closed.mean, mean, "mean at ({m}, {n})");
            assert_eq!(closed.second_moment, second, "second moment at ({m}, {n})");

            if m >= 1 {
                assert_eq!(disp_mean_via_holes(m, n).unwrap(), mean, "hole route at ({m}, {n})");
            }
        }
    }
}

#[test]
fn variance_decomposition_holds_at_full_density() {
    for n in 1..=5usize {
        let report = covariance_checks(n, CAP).unwrap();
        assert!(report.decomposition_holds, "spots {n}");
    }
}

#[test]
fn pattern_laws_agree_with_uniform_words() {
    for n in 1..=4usize {
        for m in 1..=n {
            for row in pattern_distributions(m, n, CAP).unwrap() {
                assert_eq!(
                    row.parking, row.uniform_words,
                    "pattern {:?} at ({m}, {n})",
                    row.pattern
                );
            }
        }
    }
}

#[test]
fn first_coordinate_pmf_is_a_plateau_then_strictly_decreasing() {
    for n in 1..=7usize {
        for m in 1..=n {
            let pmf = pmf_first_coordinate(m, n).unwrap();
            assert_eq!(pmf.len(), n);

            let mass: BigRational = pmf.iter().sum();
            assert_eq!(mass, big(1), "mass at ({m}, {n})");

            // Constant while every preference below n-m+1 sees the same
            // feasible completions, then strictly decreasing.
            let plateau = n - m + 1;
            for j in 1..plateau {
                assert_eq!(pmf[j], pmf[0], "plateau break at ({m}, {n}) index {j}");
            }
            for j in plateau..n {
                assert!(pmf[j] < pmf[j - 1], "no drop at ({m}, {n}) index {j}");
            }
        }
    }
}
