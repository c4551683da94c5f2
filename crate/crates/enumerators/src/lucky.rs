//! Generating function for the number of cars that park exactly at
//! their preferred spot.

use num_bigint::BigInt;

use crate::error::Error;
use crate::poly::IntPoly;

/// `Σ q^{L(π)}` over `PF(m, n)`, where `L` counts cars that suffer no
/// displacement: `(n-m+1) q Π_{i=1}^{m-1} (i + (n-i+1) q)`. With no
/// cars the empty function contributes the constant 1.
pub fn lucky_gf(m: usize, n: usize) -> Result<IntPoly, Error> {
    if m > n {
        return Err(Error::CarsExceedSpots { cars: m, spots: n });
    }
    if m == 0 {
        return Ok(IntPoly::one());
    }
    let mut gf = IntPoly::monomial(1, BigInt::from(n - m + 1));
    for i in 1..m {
        let factor = IntPoly::from_coeffs(vec![BigInt::from(i), BigInt::from(n - i + 1)]);
        gf = &gf * &factor;
    }
    Ok(gf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::{count_pf, DEFAULT_ENUM_CAP};

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn pinned_small_cases() {
        assert_eq!(lucky_gf(2, 2).unwrap(), poly(&[0, 1, 2]));
        for n in 1..=6 {
            assert_eq!(lucky_gf(1, n).unwrap(), poly(&[0, n as i64]));
        }
        assert_eq!(lucky_gf(0, 5).unwrap(), IntPoly::one());
        assert!(lucky_gf(3, 2).is_err());
    }

    #[test]
    fn total_mass_is_the_count_and_brute_force_agrees() {
        for n in 0..=5usize {
            for m in 0..=n {
                let gf = lucky_gf(m, n).unwrap();
                assert_eq!(gf.eval_one(), count_pf(m, n).unwrap(), "({m},{n})");

                let mut brute = IntPoly::zero();
                for pf in crate::counts::enumerate_pf(m, n, DEFAULT_ENUM_CAP).unwrap() {
                    brute.add_term(pf.lucky_count(), &BigInt::from(1));
                }
                assert_eq!(gf, brute, "({m},{n})");
            }
        }
    }
}
