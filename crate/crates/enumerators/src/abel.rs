//! Abel-style binomial sums in exact rational arithmetic.
//!
//! `abel_sum(n, x, y, p, q)` is the two-parameter family
//! `Σ_{s=0}^{n} C(n,s) (x+s)^{s+p} (y+n-s)^{n-s+q}`. The exponents may
//! go negative, which is why everything is rational; a zero base under
//! a negative exponent is rejected rather than guessed at. The family
//! obeys a symmetry in (x, p) ↔ (y, q), two recurrences, and closed
//! forms at small negative `p`, all of which the tests exercise and
//! the moment formulas elsewhere in the workspace rely on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::counts::binomial;
use crate::error::Error;
use crate::poly::pow_bigint;

/// `Σ_{s=0}^{n} C(n,s) (x+s)^{s+p} (y+n-s)^{n-s+q}` exactly.
///
/// Zero to the zeroth power counts as 1 so that boundary terms behave
/// like the empty product.
pub fn abel_sum(
    n: usize,
    x: &BigRational,
    y: &BigRational,
    p: i64,
    q: i64,
) -> Result<BigRational, Error> {
    let mut total = BigRational::zero();
    for s in 0..=n {
        let left = rational_pow(&(x + BigRational::from_integer(BigInt::from(s))), s as i64 + p)?;
        let right = rational_pow(
            &(y + BigRational::from_integer(BigInt::from(n - s))),
            (n - s) as i64 + q,
        )?;
        total += BigRational::from_integer(binomial(n, s)) * left * right;
    }
    Ok(total)
}

pub fn rational_pow(base: &BigRational, exp: i64) -> Result<BigRational, Error> {
    if base.is_zero() {
        return match exp {
            e if e < 0 => Err(Error::ZeroToNegativePower { exponent: e }),
            0 => Ok(BigRational::one()),
            _ => Ok(BigRational::zero()),
        };
    }
    let magnitude = exp.unsigned_abs() as u32;
    let raised = BigRational::new(pow_bigint(base.numer(), magnitude), pow_bigint(base.denom(), magnitude));
    Ok(if exp < 0 { raised.recip() } else { raised })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn single_term_and_the_pinned_value() {
        assert_eq!(abel_sum(0, &rat(3, 2), &int(5), 2, 1).unwrap(), rat(45, 4));
        // With p = -1, q = 0 the sum collapses to (x+y+n)^n / x.
        assert_eq!(abel_sum(3, &int(2), &int(5), -1, 0).unwrap(), int(500));
    }

    #[test]
    fn rejects_zero_base_with_negative_exponent() {
        assert!(matches!(
            abel_sum(2, &int(0), &int(1), -1, 0),
            Err(Error::ZeroToNegativePower { .. })
        ));
        assert_eq!(rational_pow(&int(0), 0).unwrap(), int(1));
    }

    #[test]
    fn symmetry_in_both_argument_pairs() {
        let cases = [
            (4, rat(1, 2), rat(5, 3), -1i64, 2i64),
            (5, int(2), rat(7, 2), 0, -1),
            (3, rat(9, 4), int(1), 1, 1),
        ];
        for (n, x, y, p, q) in cases {
            assert_eq!(
                abel_sum(n, &x, &y, p, q).unwrap(),
                abel_sum(n, &y, &x, q, p).unwrap()
            );
        }
    }

    #[test]
    fn splitting_recurrence() {
        // A_n(x,y;p,q) = A_{n-1}(x,y+1;p,q+1) + A_{n-1}(x+1,y;p+1,q).
        for (n, x, y, p, q) in [(4, rat(1, 3), rat(2, 5), -1i64, 1i64), (6, int(3), int(2), 0, 0)] {
            let whole = abel_sum(n, &x, &y, p, q).unwrap();
            let split = abel_sum(n - 1, &x, &(y.clone() + int(1)), p, q + 1).unwrap()
                + abel_sum(n - 1, &(x.clone() + int(1)), &y, p + 1, q).unwrap();
            assert_eq!(whole, split);
        }
    }

    #[test]
    fn lowering_recurrence() {
        // A_n(x,y;p,q) = Σ_s C(n,s) s! (x+s) A_{n-s}(x+s,y;p-1,q).
        for (n, x, y, p, q) in [(4, rat(1, 2), rat(3, 2), 0i64, 1i64), (5, int(2), int(1), -1, 0)] {
            let whole = abel_sum(n, &x, &y, p, q).unwrap();
            let mut sum = BigRational::zero();
            for s in 0..=n {
                let factorial: BigInt = (1..=s).map(BigInt::from).product();
                let xs = x.clone() + int(s as i64);
                sum += BigRational::from_integer(binomial(n, s) * factorial)
                    * xs.clone()
                    * abel_sum(n - s, &xs, &y, p - 1, q).unwrap();
            }
            assert_eq!(whole, sum);
        }
    }

    #[test]
    fn closed_forms_at_small_negative_p() {
        for (n, x, y) in [(3usize, rat(1, 2), rat(5, 2)), (5, int(2), int(3)), (4, rat(7, 3), int(1))] {
            let shifted = x.clone() + y.clone() + int(n as i64);

            let a11 = abel_sum(n, &x, &y, -1, -1).unwrap();
            let closed = (x.recip() + y.recip()) * rational_pow(&shifted, n as i64 - 1).unwrap();
            assert_eq!(a11, closed);

            let a10 = abel_sum(n, &x, &y, -1, 0).unwrap();
            assert_eq!(a10, x.recip() * rational_pow(&shifted, n as i64).unwrap());

            let a1p = abel_sum(n, &x, &y, -1, 1).unwrap();
            let mut rhs = BigRational::zero();
            for s in 0..=n {
                let tail: BigInt = (1..=(n - s)).map(BigInt::from).product();
                rhs += BigRational::from_integer(binomial(n, s))
                    * rational_pow(&shifted, s as i64).unwrap()
                    * (y.clone() + int((n - s) as i64))
                    * BigRational::from_integer(tail);
            }
            assert_eq!(a1p, x.recip() * rhs);
        }
    }
}
