use crate::error::Error;

/// A preference sequence for `m` cars on a street of `n` spots under which
/// every car parks.
///
/// Car `i` (1-based) drives to its preferred spot `prefs[i-1]` and takes the
/// first free spot at or beyond it. The sequence is validated on
/// construction, so every method on this type is total.
///
/// ```
/// use pfcore::ParkingFunction;
///
/// let pf = ParkingFunction::new(vec![4, 3, 5, 5], 6).unwrap();
/// assert_eq!(pf.outcome().spot_of_car, vec![4, 3, 5, 6]);
/// assert_eq!(pf.displacement(), 1);
/// assert!(ParkingFunction::new(vec![6, 6], 6).is_err());
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParkingFunction {
    spots: usize,
    prefs: Vec<usize>,
}

impl ParkingFunction {
    /// Validates `prefs` as a parking function on `spots` spots.
    ///
    /// Fails with the 1-based index of the first offending car, either
    /// because its preference leaves the street or because it cannot park.
    pub fn new(prefs: Vec<usize>, spots: usize) -> Result<Self, Error> {
        park(&prefs, spots)?;
        Ok(ParkingFunction { spots, prefs })
    }

    /// Street length `n`.
    pub fn spots(&self) -> usize {
        self.spots
    }

    /// Number of cars `m`.
    pub fn cars(&self) -> usize {
        self.prefs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefs.is_empty()
    }

    /// The preference sequence, 1-based spot values.
    pub fn prefs(&self) -> &[usize] {
        &self.prefs
    }

    /// Runs the parking process. Cannot fail: validity was checked on
    /// construction.
    pub fn outcome(&self) -> Outcome {
        park(&self.prefs, self.spots).expect("validated on construction")
    }

    /// Total displacement: how many spots all cars together roll past.
    pub fn displacement(&self) -> usize {
        self.outcome().total_displacement()
    }

    /// Number of cars that park exactly at their preferred spot.
    pub fn lucky_count(&self) -> usize {
        self.outcome().lucky_count()
    }
}

/// Where each car ends up after the parking process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// `spot_of_car[i]` is the 1-based spot taken by car `i+1`.
    pub spot_of_car: Vec<usize>,
    /// `displacement_of_car[i] = spot_of_car[i] - preference of car i+1`.
    pub displacement_of_car: Vec<usize>,
}

impl Outcome {
    pub fn total_displacement(&self) -> usize {
        self.displacement_of_car.iter().sum()
    }

    pub fn lucky_count(&self) -> usize {
        self.displacement_of_car.iter().filter(|&&d| d == 0).count()
    }

    /// Spots of the street (1-based) that no car occupies, ascending.
    pub fn empty_spots(&self, spots: usize) -> Vec<usize> {
        let mut taken = vec![false; spots + 1];
        for &s in &self.spot_of_car {
            taken[s] = true;
        }
        (1..=spots).filter(|&s| !taken[s]).collect()
    }
}

/// Decides whether `prefs` is a parking function on `spots` spots without
/// simulating the process.
///
/// Counting-sort check, O(m + n): with `c_i` preferences at or below spot
/// `i`, every suffix of the street must receive enough cars, i.e.
/// `c_i >= m - n + i` wherever that bound is positive. Errors are reserved
/// for malformed input (a preference outside `1..=n`, or more cars than
/// spots); a well-formed sequence that strands a car yields `Ok(false)`.
pub fn is_parking_function(prefs: &[usize], spots: usize) -> Result<bool, Error> {
    check_range(prefs, spots)?;
    let m = prefs.len();
    let mut count = vec![0usize; spots + 1];
    for &p in prefs {
        count[p] += 1;
    }
    let mut below = 0usize;
    for i in 1..=spots {
        below += count[i];
        if m + i > spots && below < m + i - spots {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Simulates the parking process and reports where every car lands.
///
/// Uses next-free-spot pointers with path compression, so a street of a
/// million spots parks in effectively linear time. Fails with
/// `CarCannotPark` naming the first car that runs off the street.
pub fn park(prefs: &[usize], spots: usize) -> Result<Outcome, Error> {
    check_range(prefs, spots)?;
    // next_free[q] points toward the smallest free spot >= q; spots + 1
    // stands for "past the end".
    let mut next_free: Vec<usize> = (0..=spots + 1).collect();
    let mut spot_of_car = Vec::with_capacity(prefs.len());
    let mut displacement_of_car = Vec::with_capacity(prefs.len());
    for (i, &p) in prefs.iter().enumerate() {
        let s = find_free(&mut next_free, p);
        if s > spots {
            return Err(Error::CarCannotPark { car: i + 1 });
        }
        spot_of_car.push(s);
        displacement_of_car.push(s - p);
        next_free[s] = s + 1;
    }
    Ok(Outcome { spot_of_car, displacement_of_car })
}

fn check_range(prefs: &[usize], spots: usize) -> Result<(), Error> {
    for (i, &p) in prefs.iter().enumerate() {
        if p < 1 || p > spots {
            return Err(Error::PreferenceOutOfRange {
                car: i + 1,
                preference: p,
                spots,
            });
        }
    }
    if prefs.len() > spots {
        return Err(Error::TooManyCars { cars: prefs.len(), spots });
    }
    Ok(())
}

fn find_free(next_free: &mut [usize], q: usize) -> usize {
    let mut root = q;
    while next_free[root] != root {
        root = next_free[root];
    }
    let mut cur = q;
    while next_free[cur] != root {
        let step = next_free[cur];
        next_free[cur] = root;
        cur = step;
    }
    root
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_worked_example_parks() {
        let out = park(&[4, 3, 5, 5], 6).unwrap();
        assert_eq!(out.spot_of_car, vec![4, 3, 5, 6]);
        assert_eq!(out.total_displacement(), 1);
        assert_eq!(out.lucky_count(), 3);
        assert_eq!(out.empty_spots(6), vec![1, 2]);
    }

    #[test]
    fn classical_examples() {
        assert!(is_parking_function(&[3, 1, 1, 3], 4).unwrap());
        assert!(is_parking_function(&[1, 2, 3, 2], 4).unwrap());
        assert!(!is_parking_function(&[2, 3, 3, 4], 4).unwrap());
        // One more car than fits in the tail.
        assert!(!is_parking_function(&[4, 3, 5, 5, 5], 6).unwrap());
    }

    #[test]
    fn empty_street_and_empty_cars() {
        assert!(is_parking_function(&[], 0).unwrap());
        assert!(is_parking_function(&[], 5).unwrap());
        let pf = ParkingFunction::new(vec![], 0).unwrap();
        assert_eq!(pf.displacement(), 0);
        assert_eq!(pf.lucky_count(), 0);
    }

    #[test]
    fn reports_first_failing_car() {
        assert_eq!(
            park(&[6, 6, 1], 6).unwrap_err(),
            Error::CarCannotPark { car: 2 }
        );
        assert_eq!(
            park(&[2, 0], 6).unwrap_err(),
            Error::PreferenceOutOfRange { car: 2, preference: 0, spots: 6 }
        );
        assert_eq!(
            park(&[1, 1, 2], 2).unwrap_err(),
            Error::TooManyCars { cars: 3, spots: 2 }
        );
    }

    #[test]
    fn parking_succeeds_iff_criterion_holds() {
        // Exhaustive cross-check of the two validity routes on a small street.
        let n = 4;
        for m in 0..=n {
            let mut prefs = vec![1usize; m];
            loop {
                let by_count = is_parking_function(&prefs, n).unwrap();
                let by_process = park(&prefs, n).is_ok();
                assert_eq!(by_count, by_process, "disagree on {prefs:?}");
                if !advance(&mut prefs, n) {
                    break;
                }
            }
        }
    }

    fn advance(prefs: &mut [usize], n: usize) -> bool {
        for p in prefs.iter_mut() {
            if *p < n {
                *p += 1;
                return true;
            }
            *p = 1;
        }
        false
    }
}
