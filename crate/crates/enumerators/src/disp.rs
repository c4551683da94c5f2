//! Displacement enumerators of parking functions and, on the other
//! side of the bijection, inversion enumerators of rooted forests.
//!
//! `disp_enumerator(m, s)` is the generating polynomial
//! `Σ y^{disp(π)}` over `PF(m, m+s-1)`. In the classical case `s = 1`
//! it satisfies the Kreweras-style recurrence obtained by conditioning
//! on the set of cars that park past the first car's spot. For `s ≥ 2`
//! the hole positions cut every parking function into independent
//! classical segments, so the enumerator is a multinomial convolution
//! of classical ones. (A single recurrence covering all `s` at once
//! would be tidier; the obvious candidate over-counts hole
//! interactions, see the crate tests pinning `(m, s) = (3, 2)`.)

use num_bigint::BigInt;
use num_traits::One;

use forests::{all_forests, count_forests};

use crate::counts::{binomial, for_each_composition, multinomial};
use crate::error::Error;
use crate::poly::IntPoly;

/// `Σ y^{disp(π)}` over all parking functions of `m` cars on
/// `m + s - 1` spots (`s ≥ 1` is the number of trees on the forest
/// side, equivalently holes plus one).
pub fn disp_enumerator(m: usize, s: usize) -> Result<IntPoly, Error> {
    if s == 0 {
        return Err(Error::BadHoles { reason: "segment count must be at least 1".into() });
    }
    let classical = classical_table(m);
    if s == 1 {
        return Ok(classical[m].clone());
    }
    let mut total = IntPoly::zero();
    for_each_composition(m, s, |sizes| {
        let mut product = IntPoly::constant(multinomial(sizes));
        for &part in sizes {
            product = &product * &classical[part];
        }
        total += &product;
    });
    Ok(total)
}

/// Classical displacement enumerators for 0..=m cars, by the
/// recurrence that conditions on how many cars land strictly beyond
/// the first car's final spot.
fn classical_table(m: usize) -> Vec<IntPoly> {
    let mut table: Vec<IntPoly> = Vec::with_capacity(m + 1);
    table.push(IntPoly::one());
    for k in 1..=m {
        let mut d = IntPoly::zero();
        for i in 0..k {
            // 1 + y + ... + y^i
            let ladder = IntPoly::from_coeffs(vec![BigInt::one(); i + 1]);
            let term = &(&table[i] * &table[k - 1 - i]) * &ladder;
            d += &term.scaled(&binomial(k - 1, i));
        }
        table.push(d);
    }
    table
}

/// `Σ y^{inv(F)}` over all forests of `m` labeled vertices on `s`
/// roots, by direct enumeration. Agrees with [`disp_enumerator`]
/// coefficient for coefficient.
pub fn inv_enumerator(m: usize, s: usize, cap: u128) -> Result<IntPoly, Error> {
    if s == 0 {
        return Err(Error::BadHoles { reason: "at least one root is required".into() });
    }
    let need = count_forests(m, s);
    if need > cap {
        return Err(Error::ResourceLimit { need, cap });
    }
    let mut total = IntPoly::zero();
    for forest in all_forests(m, s) {
        total.add_term(forest.inversions(), &BigInt::one());
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn small_displacement_enumerators() {
        for s in 1..=4 {
            assert_eq!(disp_enumerator(0, s).unwrap(), IntPoly::one());
            assert_eq!(disp_enumerator(1, s).unwrap(), poly(&[s as i64]));
        }
        assert_eq!(disp_enumerator(2, 1).unwrap(), poly(&[2, 1]));
        assert_eq!(disp_enumerator(3, 1).unwrap(), poly(&[6, 6, 3, 1]));
        assert_eq!(disp_enumerator(3, 2).unwrap(), poly(&[24, 18, 6, 2]));
        assert!(disp_enumerator(3, 0).is_err());
    }

    #[test]
    fn small_inversion_enumerators() {
        assert_eq!(inv_enumerator(2, 1, 1000).unwrap(), poly(&[2, 1]));
        assert_eq!(inv_enumerator(0, 3, 1000).unwrap(), IntPoly::one());
        let by_inversions = inv_enumerator(3, 2, 1000).unwrap();
        assert_eq!(by_inversions.eval_one(), BigInt::from(50));
        assert_eq!(by_inversions, disp_enumerator(3, 2).unwrap());
        assert!(matches!(
            inv_enumerator(8, 3, 10),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
