//! Exactly uniform sampling from `PF(m, n)` by the circle argument:
//! park the cars on a cycle of n+1 spots, where nobody can fail, then
//! rotate a uniformly chosen unattempted spot onto the phantom position
//! n+1. Every parking function arises from the same number of
//! (word, choice) pairs, so the output is uniform without rejection.

use pfcore::ParkingFunction;

use crate::rng::RandomSource;

/// Draws one uniform element of `PF(m, n)`.
///
/// Panics if `m > n`; the sample space is empty there and callers are
/// expected to validate their configuration first.
pub fn sample_pf(m: usize, n: usize, rng: &mut RandomSource) -> ParkingFunction {
    assert!(m <= n, "cannot sample {m} cars into {n} spots");
    let cycle = n + 1;
    let mut word = Vec::with_capacity(m);
    for _ in 0..m {
        word.push(rng.uniform_spot(cycle));
    }
    let zeros = cyclic_unattempted(&word, n);
    let pick = zeros[rng.uniform_below(zeros.len() as u64) as usize];
    let prefs = rotate_away(&word, n, pick);
    ParkingFunction::new(prefs, n).expect("rotating an unattempted spot to n+1 always parks")
}

/// The spots of the (n+1)-cycle that no car would ever probe when the
/// word parks circularly. There are exactly n+1−m of them.
///
/// This is deliberately not built on the linear parking code: the queue
/// recurrence below is a separate derivation, so a bug in one cannot
/// mask a bug in the other.
///
/// Two laps of the carry recurrence suffice. Because m < n+1, the true
/// circular flow leaves some spot completely idle; a first lap started
/// with carry 0 underestimates carries until that idle spot, agrees
/// from there on, and thus ends with the true wrap-around carry. The
/// second lap replays the recurrence with that carry and reads off the
/// spots where nothing arrives.
pub(crate) fn cyclic_unattempted(word: &[usize], n: usize) -> Vec<usize> {
    let cycle = n + 1;
    let mut counts = vec![0usize; cycle + 1];
    for &w in word {
        debug_assert!((1..=cycle).contains(&w));
        counts[w] += 1;
    }

    let mut carry = 0usize;
    for x in 1..=cycle {
        carry = (carry + counts[x]).saturating_sub(1);
    }

    let mut zeros = Vec::with_capacity(cycle - word.len());
    for x in 1..=cycle {
        let load = carry + counts[x];
        if load == 0 {
            zeros.push(x);
        } else {
            carry = load - 1;
        }
    }
    debug_assert_eq!(zeros.len(), cycle - word.len());
    zeros
}

/// Rotates the cycle so that spot `pick` becomes n+1; all preferences
/// then lie in 1..=n and the linear parking process succeeds.
pub(crate) fn rotate_away(word: &[usize], n: usize, pick: usize) -> Vec<usize> {
    let cycle = n + 1;
    let shift = cycle - pick;
    word.iter().map(|&x| (x - 1 + shift) % cycle + 1).collect()
}
