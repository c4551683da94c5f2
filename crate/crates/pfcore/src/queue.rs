use crate::parking::ParkingFunction;

/// The queue profile `y_1..y_n` of a parking function.
///
/// Sweep the street left to right, releasing at spot `k` the cars that
/// prefer `k`. One queued car parks per spot while any are waiting, so
///
/// `y_k = r_k` when `y_{k-1} = 0`, and `y_k = y_{k-1} - 1 + r_k` otherwise,
///
/// with `r_k` the number of cars preferring spot `k`. The profile returns
/// to zero exactly at the spots left empty by the parking process.
///
/// ```
/// use pfcore::{queue_profile, ParkingFunction};
///
/// let pf = ParkingFunction::new(vec![6, 1, 4, 1, 8, 3, 6, 11, 8], 12).unwrap();
/// assert_eq!(
///     queue_profile(&pf),
///     vec![2, 1, 1, 1, 0, 2, 1, 2, 1, 0, 1, 0],
/// );
/// ```
pub fn queue_profile(pf: &ParkingFunction) -> Vec<usize> {
    let n = pf.spots();
    let mut releases = vec![0usize; n + 1];
    for &p in pf.prefs() {
        releases[p] += 1;
    }
    let mut profile = Vec::with_capacity(n);
    let mut queued = 0usize;
    for k in 1..=n {
        queued = queued.saturating_sub(1) + releases[k];
        profile.push(queued);
    }
    profile
}

/// Spots that no car ever drives up to, ascending. These are the zeros of
/// the queue profile, and for a parking function they coincide with the
/// spots left empty by the process.
pub fn unattempted_spots(pf: &ParkingFunction) -> Vec<usize> {
    queue_profile(pf)
        .iter()
        .enumerate()
        .filter(|&(_, &y)| y == 0)
        .map(|(i, _)| i + 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parking::park;

    #[test]
    fn zeros_mark_the_empty_spots() {
        let pf = ParkingFunction::new(vec![3, 1, 9, 1, 10, 7, 3, 11, 10], 12).unwrap();
        assert_eq!(unattempted_spots(&pf), vec![5, 6, 8]);
        assert_eq!(
            park(pf.prefs(), 12).unwrap().empty_spots(12),
            vec![5, 6, 8]
        );
    }

    #[test]
    fn full_street_has_no_zeros() {
        let pf = ParkingFunction::new(vec![3, 1, 1, 3], 4).unwrap();
        assert!(unattempted_spots(&pf).is_empty());
    }
}
