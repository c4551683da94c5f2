//! Exhaustive checks of the tail decomposition at small sizes: the
//! feasible first preferences really form a prefix interval, the split
//! parts have the advertised shapes, recomposition inverts the split,
//! and displacement separates across the split.

use pfcore::{is_parking_function, ParkingFunction};
use randomized::{max_first_preference, recompose, shuffle_decompose, ShuffleError};

/// Walks every word in [1, n]^len.
fn for_each_word(len: usize, n: usize, mut visit: impl FnMut(&[usize])) {
    let mut word = vec![1usize; len];
    loop {
        visit(&word);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if word[i] < n {
                word[i] += 1;
                break;
            }
            word[i] = 1;
        }
    }
}

#[test]
fn feasible_first_preferences_form_a_prefix_interval() {
    for n in 1..=5usize {
        for tail_len in 0..n.min(4) {
            for_each_word(tail_len, n, |rest| {
                let claimed = max_first_preference(rest, n);
                let mut word = vec![0usize];
                word.extend_from_slice(rest);
                let feasible: Vec<usize> = (1..=n)
                    .filter(|&f| {
                        word[0] = f;
                        is_parking_function(&word, n).unwrap()
                    })
                    .collect();
                match claimed {
                    None => assert!(feasible.is_empty(), "rest {rest:?} on {n}"),
                    Some(k) => {
                        let interval: Vec<usize> = (1..=k).collect();
                        assert_eq!(feasible, interval, "rest {rest:?} on {n}");
                    }
                }
            });
        }
    }
}

#[test]
fn decomposition_shapes_and_roundtrip() {
    for n in 1..=5usize {
        for tail_len in 0..n.min(4) {
            for_each_word(tail_len, n, |rest| {
                let witness = match shuffle_decompose(rest, n) {
                    Ok(w) => w,
                    Err(ShuffleError::NoFeasibleFirst) => {
                        assert_eq!(max_first_preference(rest, n), None);
                        return;
                    }
                };
                let k = witness.k;
                let cars = tail_len + 1;
                assert!(k >= n + 1 - cars, "k below the counting floor");
                assert_eq!(witness.alpha.spots(), k - 1);
                assert_eq!(witness.alpha.cars(), cars + k - n - 1);
                assert_eq!(witness.beta.spots(), n - k);
                assert_eq!(witness.beta.cars(), n - k);
                assert_eq!(witness.interleaving.len(), tail_len);
                assert_eq!(recompose(&witness), rest, "roundtrip on {n} spots");
            });
        }
    }
}

#[test]
fn displacement_separates_across_the_split() {
    for n in 1..=5usize {
        for m in 1..=n {
            for pf in enumerators::enumerate_pf(m, n, 1 << 20).unwrap() {
                let first = pf.prefs()[0];
                let witness = shuffle_decompose(&pf.prefs()[1..], n)
                    .expect("the tail of a parking function has a feasible first");
                assert!(first <= witness.k);

                // The first car joins the below-k part, which then
                // parks on [1, k]; the above-k part carries its own
                // displacement independently.
                let mut head = vec![first];
                head.extend_from_slice(witness.alpha.prefs());
                let head = ParkingFunction::new(head, witness.k)
                    .expect("first preference plus below-k part parks on k spots");

                assert_eq!(
                    pf.displacement(),
                    head.displacement() + witness.beta.displacement(),
                    "split displacement mismatch for {:?} on {n}",
                    pf.prefs()
                );
            }
        }
    }
}
