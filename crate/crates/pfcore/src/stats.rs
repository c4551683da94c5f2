use crate::parking::ParkingFunction;
use crate::segments::SegmentDecomposition;

/// Number of critical left-to-right maxima, totalled over the segments of
/// the parking function.
///
/// Within one segment (a classical parking function `w` on `l` spots), the
/// value `j` is counted when
///
/// * exactly `j - 1` terms of `w` are smaller than `j` and `l - j` terms
///   are larger, which forces `j` to appear exactly once, and
/// * every term before that occurrence is smaller, making it a
///   left-to-right maximum.
///
/// ```
/// use pfcore::{critical_lr_maxima, ParkingFunction};
///
/// let pf = ParkingFunction::new(vec![4, 1, 1, 5, 3], 5).unwrap();
/// assert_eq!(critical_lr_maxima(&pf), 2); // the 4 and the 5
/// ```
pub fn critical_lr_maxima(pf: &ParkingFunction) -> usize {
    SegmentDecomposition::of(pf)
        .segments
        .iter()
        .map(|seg| critical_in_classical(seg.prefs()))
        .sum()
}

fn critical_in_classical(word: &[usize]) -> usize {
    let l = word.len();
    let mut count = 0;
    for j in 1..=l {
        let smaller = word.iter().filter(|&&v| v < j).count();
        let larger = word.iter().filter(|&&v| v > j).count();
        if smaller != j - 1 || larger != l - j {
            continue;
        }
        let pos = word
            .iter()
            .position(|&v| v == j)
            .expect("j occurs: counts leave exactly one slot for it");
        if word[..pos].iter().all(|&v| v < j) {
            count += 1;
        }
    }
    count
}
