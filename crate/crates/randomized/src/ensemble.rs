//! The consecutive-equality pattern (1{π₁=π₂}, …, 1{π_{m−1}=π_m}) has
//! exactly the same joint law under a uniform parking function as under
//! a uniform unrestricted word on n+1 letters. On the word side the
//! indicators are independent Bernoulli(1/(n+1)), which gives a closed
//! product formula; the parking side is tallied by enumeration.

use num_bigint::BigInt;
use num_rational::BigRational;

use enumerators::{count_pf, enumerate_pf};

use crate::error::Error;

/// One pattern with its probability under each ensemble.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternRow {
    pub pattern: Vec<bool>,
    pub parking: BigRational,
    pub uniform_words: BigRational,
}

/// All 2^(m−1) patterns with both exact distributions.
pub fn pattern_distributions(m: usize, n: usize, cap: u128) -> Result<Vec<PatternRow>, Error> {
    if m > n {
        return Err(Error::CarsExceedSpots { cars: m, spots: n });
    }
    let slots = m.saturating_sub(1);
    let total = count_pf(m, n)?;

    let mut tallies = vec![BigInt::from(0); 1 << slots];
    for pf in enumerate_pf(m, n, cap)? {
        let p = pf.prefs();
        let mut idx = 0usize;
        for i in 0..slots {
            if p[i] == p[i + 1] {
                idx |= 1 << i;
            }
        }
        tallies[idx] += 1;
    }

    let hit = BigRational::new(BigInt::from(1), BigInt::from(n + 1));
    let miss = BigRational::new(BigInt::from(n), BigInt::from(n + 1));
    Ok((0..1usize << slots)
        .map(|idx| {
            let pattern: Vec<bool> = (0..slots).map(|i| idx & (1 << i) != 0).collect();
            let matches = pattern.iter().filter(|&&b| b).count();
            let mut word_prob = BigRational::from_integer(BigInt::from(1));
            for _ in 0..matches {
                word_prob *= hit.clone();
            }
            for _ in matches..slots {
                word_prob *= miss.clone();
            }
            PatternRow {
                pattern,
                parking: BigRational::new(tallies[idx].clone(), total.clone()),
                uniform_words: word_prob,
            }
        })
        .collect())
}
