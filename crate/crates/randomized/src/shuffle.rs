//! Decomposition of a parking function around its largest feasible
//! first preference. Fixing the tail (π₂, …, π_m), the set of first
//! preferences that complete it to a parking function is a prefix
//! interval [1, k]; the tail itself then splits into a generalized part
//! strictly below k and a classical part strictly above k, interleaved
//! arbitrarily. The decomposition drives the tail-count recursion and
//! the exact law of single coordinates.

use std::fmt;

use pfcore::{is_parking_function, ParkingFunction};

/// `(π₂, …, π_m)` split around the largest feasible first preference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleWitness {
    /// Largest j such that (j, tail) parks; feasible firsts are [1, k].
    pub k: usize,
    /// Tail values below k, in order: a parking function on k−1 spots.
    pub alpha: ParkingFunction,
    /// Tail values above k, shifted down by k: a classical parking
    /// function on the n−k spots beyond k.
    pub beta: ParkingFunction,
    /// Position map over the tail: true where the entry belongs to
    /// alpha, false where it belongs to beta.
    pub interleaving: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShuffleError {
    /// No first preference completes the tail to a parking function.
    NoFeasibleFirst,
}

impl fmt::Display for ShuffleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShuffleError::NoFeasibleFirst => {
                write!(f, "no first preference completes the tail to a parking function")
            }
        }
    }
}

impl std::error::Error for ShuffleError {}

/// The largest feasible first preference for the given tail on n spots,
/// or None when no choice works (including malformed tails). When a
/// value exists it is at least n−m+1 for m = tail length + 1.
pub fn max_first_preference(rest: &[usize], n: usize) -> Option<usize> {
    if rest.len() + 1 > n || rest.iter().any(|&v| v < 1 || v > n) {
        return None;
    }
    let mut word = Vec::with_capacity(rest.len() + 1);
    word.push(0);
    word.extend_from_slice(rest);
    for j in (1..=n).rev() {
        word[0] = j;
        if is_parking_function(&word, n).expect("values checked above") {
            return Some(j);
        }
    }
    None
}

/// Splits the tail around its largest feasible first preference.
pub fn shuffle_decompose(rest: &[usize], n: usize) -> Result<ShuffleWitness, ShuffleError> {
    let k = max_first_preference(rest, n).ok_or(ShuffleError::NoFeasibleFirst)?;
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    let mut interleaving = Vec::with_capacity(rest.len());
    for &v in rest {
        if v < k {
            alpha.push(v);
            interleaving.push(true);
        } else {
            // v = k would let the first preference grow past k, so a
            // maximal k never appears in the tail.
            assert_ne!(v, k, "tail value equal to the maximal feasible first preference");
            beta.push(v - k);
            interleaving.push(false);
        }
    }
    let alpha = ParkingFunction::new(alpha, k - 1)
        .expect("the below-k subsequence of a feasible tail parks on k-1 spots");
    let beta = ParkingFunction::new(beta, n - k)
        .expect("the above-k subsequence of a feasible tail parks classically");
    Ok(ShuffleWitness { k, alpha, beta, interleaving })
}

/// Rebuilds the tail from a witness: alpha values verbatim, beta values
/// shifted back up by k, in the recorded interleaving order.
pub fn recompose(witness: &ShuffleWitness) -> Vec<usize> {
    let mut a = witness.alpha.prefs().iter();
    let mut b = witness.beta.prefs().iter();
    witness
        .interleaving
        .iter()
        .map(|&from_alpha| {
            if from_alpha {
                *a.next().expect("interleaving counts alpha entries")
            } else {
                *b.next().expect("interleaving counts beta entries") + witness.k
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_on_ten_spots() {
        let rest = [2, 7, 2, 9, 10, 1, 8];
        assert_eq!(max_first_preference(&rest, 10), Some(6));

        let w = shuffle_decompose(&rest, 10).unwrap();
        assert_eq!(w.k, 6);
        assert_eq!(w.alpha.prefs(), &[2, 2, 1]);
        assert_eq!(w.alpha.spots(), 5);
        assert_eq!(w.beta.prefs(), &[1, 3, 4, 2]);
        assert_eq!(w.beta.spots(), 4);
        assert_eq!(w.interleaving, vec![true, false, true, false, false, true, false]);
        assert_eq!(recompose(&w), rest);
    }

    #[test]
    fn single_car_can_prefer_any_spot() {
        assert_eq!(max_first_preference(&[], 3), Some(3));
        let w = shuffle_decompose(&[], 3).unwrap();
        assert_eq!(w.k, 3);
        assert!(w.alpha.is_empty());
        assert!(w.beta.is_empty());
    }

    #[test]
    fn overfull_tail_has_no_feasible_first() {
        assert_eq!(max_first_preference(&[2, 2], 2), None);
        assert_eq!(shuffle_decompose(&[2, 2], 2), Err(ShuffleError::NoFeasibleFirst));
    }

    #[test]
    fn crowded_tail_on_enough_spots_can_still_fail() {
        // Two cars both wanting the last of three spots strand one of
        // them no matter what the first car prefers.
        assert_eq!(max_first_preference(&[3, 3], 3), None);
    }
}
