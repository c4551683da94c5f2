use crate::parking::ParkingFunction;
use crate::queue::unattempted_spots;

/// A parking function split at its unattempted spots.
///
/// With empty spots `k_1 < .. < k_{n-m}` and the conventions `k_0 = 0`,
/// `k_{n-m+1} = n + 1`, the cars preferring spots strictly between `k_i`
/// and `k_{i+1}` park strictly between them, independently of all other
/// cars. Shifting those preferences down by `k_i` yields a classical
/// parking function (cars = spots) on the gap. There are always
/// `n - m + 1` segments; gaps of width one contribute empty ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentDecomposition {
    /// The unattempted spots, ascending.
    pub empty_spots: Vec<usize>,
    /// One classical parking function per gap, in street order.
    pub segments: Vec<ParkingFunction>,
    /// `members[g]` lists the 1-based cars of segment `g` in arrival order.
    pub members: Vec<Vec<usize>>,
}

impl SegmentDecomposition {
    /// Splits `pf` at its unattempted spots.
    pub fn of(pf: &ParkingFunction) -> Self {
        let n = pf.spots();
        let empty_spots = unattempted_spots(pf);
        let mut bounds = Vec::with_capacity(empty_spots.len() + 2);
        bounds.push(0);
        bounds.extend_from_slice(&empty_spots);
        bounds.push(n + 1);

        let gaps = bounds.len() - 1;
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); gaps];
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); gaps];
        for (i, &p) in pf.prefs().iter().enumerate() {
            // partition_point returns the number of bounds <= p - 1, i.e.
            // the index of the gap (lo, hi) with lo < p < hi.
            let g = bounds.partition_point(|&b| b < p) - 1;
            words[g].push(p - bounds[g]);
            members[g].push(i + 1);
        }

        let segments = words
            .into_iter()
            .zip(bounds.windows(2))
            .map(|(word, lohi)| {
                let width = lohi[1] - lohi[0] - 1;
                ParkingFunction::new(word, width)
                    .expect("a gap of a parking function parks on its own")
            })
            .collect();

        SegmentDecomposition { empty_spots, segments, members }
    }

    /// Reassembles the original parking function.
    pub fn reassemble(&self, spots: usize) -> ParkingFunction {
        let cars: usize = self.segments.iter().map(|s| s.cars()).sum();
        let mut prefs = vec![0usize; cars];
        let mut low = 0usize;
        for (g, seg) in self.segments.iter().enumerate() {
            for (&car, &p) in self.members[g].iter().zip(seg.prefs()) {
                prefs[car - 1] = low + p;
            }
            low = self.empty_spots.get(g).copied().unwrap_or(spots + 1);
        }
        ParkingFunction::new(prefs, spots).expect("segments reassemble to the original")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_at_the_empty_spots() {
        let pf = ParkingFunction::new(vec![3, 1, 9, 1, 10, 7, 3, 11, 10], 12).unwrap();
        let dec = SegmentDecomposition::of(&pf);
        assert_eq!(dec.empty_spots, vec![5, 6, 8]);
        let words: Vec<&[usize]> = dec.segments.iter().map(|s| s.prefs()).collect();
        assert_eq!(
            words,
            vec![&[3, 1, 1, 3][..], &[][..], &[1][..], &[1, 2, 3, 2][..]]
        );
        assert_eq!(dec.members[0], vec![1, 2, 4, 7]);
        assert_eq!(dec.members[3], vec![3, 5, 8, 9]);
        assert_eq!(dec.reassemble(12), pf);
    }

    #[test]
    fn full_street_is_one_segment() {
        let pf = ParkingFunction::new(vec![1, 2, 3, 2], 4).unwrap();
        let dec = SegmentDecomposition::of(&pf);
        assert!(dec.empty_spots.is_empty());
        assert_eq!(dec.segments.len(), 1);
        assert_eq!(dec.segments[0], pf);
    }

    #[test]
    fn empty_input_is_all_gaps() {
        let pf = ParkingFunction::new(vec![], 3).unwrap();
        let dec = SegmentDecomposition::of(&pf);
        assert_eq!(dec.empty_spots, vec![1, 2, 3]);
        assert_eq!(dec.segments.len(), 4);
        assert!(dec.segments.iter().all(|s| s.is_empty()));
        assert_eq!(dec.reassemble(3), pf);
    }
}
