//! Exact counting of parking functions, as closed forms, as a
//! recursion, refined by first preference, and refined by hole pattern,
//! plus the brute-force enumerator those formulas are tested against.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use pfcore::{is_parking_function, ParkingFunction};

use crate::abel::rational_pow;
use crate::error::Error;
use crate::poly::pow_bigint;

/// Default ceiling on brute-force enumeration sizes.
pub const DEFAULT_ENUM_CAP: u128 = 10_000_000;

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// `(Σ parts)! / Π parts!`, the number of ways to deal a deck into
/// labeled hands of the given sizes.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut total = 0usize;
    let mut result = BigInt::one();
    for &p in parts {
        total += p;
        result *= binomial(total, p);
    }
    result
}

/// The number of parking functions of `m` cars on `n` spots:
/// `(n-m+1)(n+1)^{m-1}`, read as 1 when there are no cars.
pub fn count_pf(m: usize, n: usize) -> Result<BigInt, Error> {
    if m > n {
        return Err(Error::CarsExceedSpots { cars: m, spots: n });
    }
    if m == 0 {
        return Ok(BigInt::one());
    }
    Ok(BigInt::from(n - m + 1) * pow_bigint(&BigInt::from(n + 1), (m - 1) as u32))
}

/// The same count by recursion on the largest feasible first
/// preference `k`: conditioning on `k` splits the remaining cars into
/// a part below `k` and a classical part above it.
pub fn count_pf_recursive(m: usize, n: usize) -> Result<BigInt, Error> {
    if m > n {
        return Err(Error::CarsExceedSpots { cars: m, spots: n });
    }
    if m == 0 {
        return Ok(BigInt::one());
    }
    let mut total = BigInt::zero();
    for k in (n - m + 1)..=n {
        total += BigInt::from(k)
            * binomial(m - 1, n - k)
            * count_pf(m + k - n - 1, k - 1)?
            * count_pf(n - k, n - k)?;
    }
    Ok(total)
}

/// The number of parking functions with first preference exactly `j`:
/// `(n-m+1) Σ_s C(m-1,s)(n-s)^{m-s-2}(s+1)^{s-1}` over
/// `s ≤ min(n-j, m-1)`.
///
/// Two summand exponents can be -1, so the sum is taken in exact
/// rationals; the result is asserted integral, which makes any
/// arithmetic slip loud instead of silently wrong.
pub fn count_pf_first(m: usize, n: usize, j: usize) -> Result<BigInt, Error> {
    if m > n {
        return Err(Error::CarsExceedSpots { cars: m, spots: n });
    }
    if j < 1 || j > n {
        return Err(Error::PreferenceOutOfRange { preference: j, spots: n });
    }
    if m == 0 {
        return Err(Error::PreferenceOutOfRange { preference: j, spots: 0 });
    }
    let mut sum = BigRational::zero();
    for s in 0..=(n - j).min(m - 1) {
        let term = BigRational::from_integer(binomial(m - 1, s))
            * rational_pow(&BigRational::from_integer(BigInt::from(n - s)), m as i64 - s as i64 - 2)?
            * rational_pow(&BigRational::from_integer(BigInt::from(s + 1)), s as i64 - 1)?;
        sum += term;
    }
    let scaled = sum * BigRational::from_integer(BigInt::from(n - m + 1));
    assert!(scaled.is_integer(), "first-preference count must be integral");
    Ok(scaled.to_integer())
}

/// The number of parking functions whose unattempted spots are exactly
/// the given strictly increasing pattern of `n - m` spots. Cars split
/// into one classical segment per gap, so the count is a multinomial
/// times a product of classical counts.
pub fn count_pf_with_holes(m: usize, n: usize, holes: &[usize]) -> Result<BigInt, Error> {
    if m > n {
        return Err(Error::CarsExceedSpots { cars: m, spots: n });
    }
    if holes.len() != n - m {
        return Err(Error::BadHoles {
            reason: format!("expected {} holes, got {}", n - m, holes.len()),
        });
    }
    let mut prev = 0usize;
    let mut lengths = Vec::with_capacity(n - m + 1);
    for &h in holes {
        if h <= prev || h > n {
            return Err(Error::BadHoles {
                reason: format!("hole {h} is out of order or outside 1..={n}"),
            });
        }
        lengths.push(h - prev - 1);
        prev = h;
    }
    lengths.push(n - prev);

    let mut product = multinomial(&lengths);
    for &len in &lengths {
        product *= count_pf(len, len)?;
    }
    Ok(product)
}

/// Lazily yields every element of `PF(m, n)` exactly once, in
/// lexicographic order of the preference word. The word space
/// `(n+1)^m` is checked against `cap` up front so callers never start
/// an enumeration they cannot finish.
pub fn enumerate_pf(m: usize, n: usize, cap: u128) -> Result<PfIter, Error> {
    if m > n {
        return Err(Error::CarsExceedSpots { cars: m, spots: n });
    }
    let need = (n as u128 + 1)
        .checked_pow(m as u32)
        .ok_or(Error::ResourceLimit { need: u128::MAX, cap })?;
    if need > cap {
        return Err(Error::ResourceLimit { need, cap });
    }
    Ok(PfIter { spots: n, word: vec![1; m], done: false })
}

pub struct PfIter {
    spots: usize,
    word: Vec<usize>,
    done: bool,
}

impl PfIter {
    fn advance(&mut self) {
        for slot in self.word.iter_mut().rev() {
            if *slot < self.spots {
                *slot += 1;
                return;
            }
            *slot = 1;
        }
        self.done = true;
    }
}

impl Iterator for PfIter {
    type Item = ParkingFunction;

    fn next(&mut self) -> Option<ParkingFunction> {
        while !self.done {
            let candidate = is_parking_function(&self.word, self.spots)
                .expect("iterator only produces in-range words");
            let result = candidate
                .then(|| ParkingFunction::new(self.word.clone(), self.spots).unwrap());
            self.advance();
            if result.is_some() {
                return result;
            }
        }
        None
    }
}

/// Calls `visit` on every ordered way to write `total` as a sum of
/// `parts` non-negative integers.
pub(crate) fn for_each_composition(
    total: usize,
    parts: usize,
    mut visit: impl FnMut(&[usize]),
) {
    if parts == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    let mut current = vec![0usize; parts];
    current[0] = total;
    loop {
        visit(&current);
        // Shift one unit rightward from the rightmost donor position,
        // gathering everything beyond it back next to the donor.
        let Some(i) = current[..parts - 1].iter().rposition(|&c| c > 0) else {
            return;
        };
        current[i] -= 1;
        let moved = 1 + current[i + 1..].iter().sum::<usize>();
        for slot in &mut current[i + 1..] {
            *slot = 0;
        }
        current[i + 1] = moved;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(count_pf(3, 5).unwrap(), big(108));
        assert_eq!(count_pf(0, 4).unwrap(), big(1));
        assert_eq!(count_pf(2, 2).unwrap(), big(3));
        assert_eq!(count_pf(4, 4).unwrap(), big(125));
        assert!(matches!(count_pf(3, 2), Err(Error::CarsExceedSpots { .. })));
    }

    #[test]
    fn recursion_agrees_with_the_closed_form() {
        for n in 0..=6 {
            for m in 0..=n {
                assert_eq!(count_pf_recursive(m, n).unwrap(), count_pf(m, n).unwrap());
            }
        }
    }

    #[test]
    fn first_preference_counts() {
        assert_eq!(count_pf_first(2, 3, 1).unwrap(), big(3));
        assert_eq!(count_pf_first(2, 2, 2).unwrap(), big(1));
        for n in 1..=5 {
            assert_eq!(count_pf_first(1, n, n).unwrap(), big(1));
        }
        assert!(matches!(
            count_pf_first(2, 3, 4),
            Err(Error::PreferenceOutOfRange { .. })
        ));

        // Totals over j recover the plain count, and the left plateau is flat.
        for n in 1..=5usize {
            for m in 1..=n {
                let total: BigInt = (1..=n).map(|j| count_pf_first(m, n, j).unwrap()).sum();
                assert_eq!(total, count_pf(m, n).unwrap());
                let plateau = count_pf_first(m, n, 1).unwrap();
                for j in 1..=(n - m + 1) {
                    assert_eq!(count_pf_first(m, n, j).unwrap(), plateau);
                }
                for j in (n - m + 1)..n {
                    assert!(count_pf_first(m, n, j + 1).unwrap() <= count_pf_first(m, n, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn hole_pattern_counts() {
        assert_eq!(count_pf_with_holes(3, 5, &[2, 4]).unwrap(), big(6));
        assert_eq!(count_pf_with_holes(4, 4, &[]).unwrap(), count_pf(4, 4).unwrap());
        assert!(matches!(
            count_pf_with_holes(3, 5, &[4, 2]),
            Err(Error::BadHoles { .. })
        ));
        assert!(matches!(
            count_pf_with_holes(3, 5, &[2]),
            Err(Error::BadHoles { .. })
        ));
    }

    #[test]
    fn enumeration_matches_the_count() {
        assert_eq!(
            enumerate_pf(2, 2, DEFAULT_ENUM_CAP).unwrap().count(),
            3
        );
        assert_eq!(
            enumerate_pf(3, 5, DEFAULT_ENUM_CAP).unwrap().count(),
            108
        );
        assert_eq!(enumerate_pf(0, 3, DEFAULT_ENUM_CAP).unwrap().count(), 1);
        assert!(matches!(
            enumerate_pf(8, 9, 1000),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn compositions_enumerate_ordered_splits() {
        let mut seen = Vec::new();
        for_each_composition(3, 2, |c| seen.push(c.to_vec()));
        seen.sort();
        assert_eq!(seen, vec![vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]);

        let mut count = 0;
        for_each_composition(4, 3, |c| {
            assert_eq!(c.iter().sum::<usize>(), 4);
            count += 1;
        });
        assert_eq!(count, 15);

        let mut empty = 0;
        for_each_composition(0, 0, |_| empty += 1);
        assert_eq!(empty, 1);
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[1, 1, 1]), big(6));
        assert_eq!(multinomial(&[2, 2]), big(6));
        assert_eq!(multinomial(&[]), big(1));
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(3, 7), big(0));
    }
}
