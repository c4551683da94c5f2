use crate::forest::{RootedForest, Vertex};

/// Number of forests with `cars` labeled non-root vertices on `roots`
/// trees: `roots * (cars + roots)^(cars - 1)`.
///
/// Panics on u128 overflow; the enumerative tooling targets desk-size
/// parameters anyway.
pub fn count_forests(cars: usize, roots: usize) -> u128 {
    assert!(roots >= 1, "a forest needs at least one root");
    if cars == 0 {
        return 1;
    }
    let base = (cars + roots) as u128;
    let mut power: u128 = 1;
    for _ in 0..cars - 1 {
        power = power.checked_mul(base).expect("forest count exceeds u128");
    }
    power.checked_mul(roots as u128).expect("forest count exceeds u128")
}

/// Iterates over every forest with `cars` labeled non-root vertices and
/// `roots` trees, in odometer order over the parent assignments.
pub fn all_forests(cars: usize, roots: usize) -> ForestIter {
    ForestIter { cars, roots, choices: vec![0; cars], exhausted: false }
}

pub struct ForestIter {
    cars: usize,
    roots: usize,
    /// Per car: `0..roots` encode the roots; `roots..` encode the other
    /// cars in label order, skipping the car itself.
    choices: Vec<usize>,
    exhausted: bool,
}

impl ForestIter {
    fn candidate(&self) -> Result<RootedForest, crate::forest::ForestError> {
        let parent: Vec<Vertex> = self
            .choices
            .iter()
            .enumerate()
            .map(|(i, &choice)| {
                if choice < self.roots {
                    Vertex::Root(choice + 1)
                } else {
                    let mut other = choice - self.roots + 1;
                    if other >= i + 1 {
                        other += 1; // skip self
                    }
                    Vertex::Car(other)
                }
            })
            .collect();
        RootedForest::new(self.roots, parent)
    }

    fn advance(&mut self) -> bool {
        let limit = self.roots + self.cars - 1;
        for c in self.choices.iter_mut() {
            *c += 1;
            if *c < limit {
                return true;
            }
            *c = 0;
        }
        false
    }
}

impl Iterator for ForestIter {
    type Item = RootedForest;

    fn next(&mut self) -> Option<RootedForest> {
        if self.exhausted {
            return None;
        }
        loop {
            let candidate = self.candidate();
            if !self.advance() {
                self.exhausted = true;
                return candidate.ok();
            }
            if let Ok(forest) = candidate {
                return Some(forest);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_closed_form() {
        for roots in 1..=3usize {
            for cars in 0..=4usize {
                let expected = count_forests(cars, roots);
                let listed = all_forests(cars, roots).count() as u128;
                assert_eq!(listed, expected, "cars={cars} roots={roots}");
            }
        }
    }

    #[test]
    fn yields_distinct_forests() {
        let mut seen = std::collections::HashSet::new();
        for f in all_forests(3, 2) {
            assert!(seen.insert(f.parents().to_vec()));
        }
        assert_eq!(seen.len(), 50); // 2 * (3 + 2)^2
    }
}
