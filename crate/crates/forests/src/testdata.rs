//! Shared fixtures for the unit tests.

use crate::forest::{RootedForest, Vertex};

/// The nine-car, four-tree forest used across this crate's tests: cars 2
/// and 4 under root 1, with 1 and 7 under car 4; root 2 empty; 6 under
/// root 3; 3 under root 4 with 5 and 9 below it, and 8 under 5.
pub(crate) fn running_example() -> RootedForest {
    RootedForest::new(
        4,
        vec![
            Vertex::Car(4),  // 1
            Vertex::Root(1), // 2
            Vertex::Root(4), // 3
            Vertex::Root(1), // 4
            Vertex::Car(3),  // 5
            Vertex::Root(3), // 6
            Vertex::Car(4),  // 7
            Vertex::Car(5),  // 8
            Vertex::Car(3),  // 9
        ],
    )
    .unwrap()
}
