//! Property tests over randomly drawn preference words.

use proptest::prelude::*;

use pfcore::{
    format_pf, is_parking_function, order_permutation, park, parse_pf, specification,
    ParkingFunction, SegmentDecomposition,
};

/// Arbitrary street sizes with arbitrary words, valid or not.
fn any_word() -> impl Strategy<Value = (Vec<usize>, usize)> {
    (1usize..9).prop_flat_map(|n| {
        (0usize..=n).prop_flat_map(move |m| {
            (prop::collection::vec(1usize..=n, m), Just(n))
        })
    })
}

/// Words filtered down to parking functions. Rejection stays mild at these
/// sizes (at worst around two thirds of words are discarded).
fn any_pf() -> impl Strategy<Value = ParkingFunction> {
    any_word()
        .prop_filter("word must park", |(word, n)| {
            is_parking_function(word, *n).unwrap()
        })
        .prop_map(|(word, n)| ParkingFunction::new(word, n).unwrap())
}

proptest! {
    #[test]
    fn criterion_agrees_with_the_process((word, n) in any_word()) {
        prop_assert_eq!(
            is_parking_function(&word, n).unwrap(),
            park(&word, n).is_ok()
        );
    }

    #[test]
    fn shuffling_preserves_validity((word, n) in any_word(), seed in any::<u64>()) {
        let valid = is_parking_function(&word, n).unwrap();
        let mut shuffled = word.clone();
        // Cheap deterministic Fisher-Yates driven by the seed.
        let mut state = seed | 1;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            shuffled.swap(i, j);
        }
        prop_assert_eq!(valid, is_parking_function(&shuffled, n).unwrap());
    }

    #[test]
    fn outcome_is_a_matching_beyond_preferences(pf in any_pf()) {
        let outcome = pf.outcome();
        let mut seen = vec![false; pf.spots() + 1];
        for (i, &s) in outcome.spot_of_car.iter().enumerate() {
            prop_assert!(s >= pf.prefs()[i]);
            prop_assert!(!seen[s], "spot {} taken twice", s);
            seen[s] = true;
        }
    }

    #[test]
    fn encoding_round_trips(pf in any_pf()) {
        let rebuilt =
            pfcore::from_compatible_pair(&specification(&pf), &order_permutation(&pf));
        prop_assert_eq!(rebuilt.unwrap(), pf);
    }

    #[test]
    fn text_form_round_trips(pf in any_pf()) {
        prop_assert_eq!(parse_pf(&format_pf(&pf)).unwrap(), pf);
    }

    #[test]
    fn segments_reassemble(pf in any_pf()) {
        let dec = SegmentDecomposition::of(&pf);
        prop_assert_eq!(dec.reassemble(pf.spots()), pf.clone());
        let disp: usize = dec.segments.iter().map(|s| s.displacement()).sum();
        prop_assert_eq!(disp, pf.displacement());
    }

    #[test]
    fn displacement_identity(pf in any_pf()) {
        let n = pf.spots();
        let pref_sum: usize = pf.prefs().iter().sum();
        let empty_sum: usize = pf.outcome().empty_spots(n).iter().sum();
        prop_assert_eq!(
            pf.displacement() + pref_sum + empty_sum,
            n * (n + 1) / 2
        );
    }
}
