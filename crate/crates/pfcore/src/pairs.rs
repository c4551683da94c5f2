use crate::error::{Error, Incompatibility};
use crate::parking::{is_parking_function, ParkingFunction};

/// How many cars prefer each spot: `specification(pf)[k-1] = #{i : pref_i = k}`.
pub fn specification(pf: &ParkingFunction) -> Vec<usize> {
    let mut counts = vec![0usize; pf.spots()];
    for &p in pf.prefs() {
        counts[p - 1] += 1;
    }
    counts
}

/// The rank of each car when cars are sorted by preference, ties broken by
/// arrival order. Returns a permutation `sigma` of `1..=m` with
/// `sigma[i-1] = #{j : pref_j < pref_i, or pref_j = pref_i and j <= i}`.
///
/// Together with [`specification`] this determines the parking function:
/// see [`from_compatible_pair`].
pub fn order_permutation(pf: &ParkingFunction) -> Vec<usize> {
    let m = pf.cars();
    let prefs = pf.prefs();
    let mut by_pref: Vec<usize> = (0..m).collect();
    by_pref.sort_by_key(|&i| (prefs[i], i));
    let mut sigma = vec![0usize; m];
    for (rank, &i) in by_pref.iter().enumerate() {
        sigma[i] = rank + 1;
    }
    sigma
}

/// The inverse of [`order_permutation`]: `reading_word(pf)[r-1]` is the car
/// holding rank `r`, so the word lists cars by increasing preference with
/// ties in arrival order.
pub fn reading_word(pf: &ParkingFunction) -> Vec<usize> {
    invert(&order_permutation(pf))
}

/// Inverts a permutation of `1..=m` given as 1-based values.
pub fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

/// Rebuilds a parking function from its per-spot counts and order
/// permutation.
///
/// `counts[k-1]` cars receive spot `k`, namely the cars whose order ranks
/// fall in the k-th consecutive block `1 + counts[0] + .. + counts[k-2] ..`.
/// The pair must satisfy two conditions, checked here:
///
/// * ranks within one block occur left to right in `order` (ties park in
///   arrival order), else `BlockOrder{spot}`;
/// * the counts leave no suffix of the street underfilled, else
///   `Unbalanced{spot}` naming the first spot whose prefix falls short.
///
/// Inverse to `(specification, order_permutation)` on valid parking
/// functions.
pub fn from_compatible_pair(counts: &[usize], order: &[usize]) -> Result<ParkingFunction, Error> {
    let n = counts.len();
    let m: usize = counts.iter().sum();
    if m != order.len() {
        return Err(Error::IncompatiblePair(Incompatibility::LengthMismatch {
            counts_total: m,
            order_len: order.len(),
        }));
    }

    // position_of_rank doubles as the permutation check.
    let mut position_of_rank = vec![usize::MAX; m + 1];
    for (i, &v) in order.iter().enumerate() {
        if v < 1 || v > m || position_of_rank[v] != usize::MAX {
            return Err(Error::IncompatiblePair(Incompatibility::NotAPermutation {
                value: v,
            }));
        }
        position_of_rank[v] = i;
    }

    let mut spot_of_rank = vec![0usize; m + 1];
    let mut next_rank = 1usize;
    for (k, &c) in counts.iter().enumerate() {
        for offset in 0..c {
            let rank = next_rank + offset;
            spot_of_rank[rank] = k + 1;
            if offset > 0 && position_of_rank[rank] < position_of_rank[rank - 1] {
                return Err(Error::IncompatiblePair(Incompatibility::BlockOrder {
                    spot: k + 1,
                }));
            }
        }
        next_rank += c;
    }

    let prefs: Vec<usize> = order.iter().map(|&v| spot_of_rank[v]).collect();
    if !is_parking_function(&prefs, n)? {
        let spot = first_underfilled(counts, m, n);
        return Err(Error::IncompatiblePair(Incompatibility::Unbalanced { spot }));
    }
    Ok(ParkingFunction::new(prefs, n).expect("checked above"))
}

fn first_underfilled(counts: &[usize], m: usize, n: usize) -> usize {
    let mut below = 0usize;
    for i in 1..=n {
        below += counts[i - 1];
        if m + i > n && below < m + i - n {
            return i;
        }
    }
    unreachable!("caller established the pair is unbalanced")
}
