use std::fmt;

/// Errors arising from validation or construction of parking functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A preference lies outside the street `1..=n`. `car` is 1-based.
    PreferenceOutOfRange { car: usize, preference: usize, spots: usize },
    /// More cars than spots; no assignment can exist.
    TooManyCars { cars: usize, spots: usize },
    /// The parking process fails: this car (1-based) finds every spot from
    /// its preference to the end of the street occupied.
    CarCannotPark { car: usize },
    /// A (counts, order) pair violates one of the compatibility conditions.
    IncompatiblePair(Incompatibility),
}

/// The specific compatibility condition violated by a (counts, order) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Incompatibility {
    /// The counts sum to a different number of cars than the order covers.
    LengthMismatch { counts_total: usize, order_len: usize },
    /// The order sequence is not a permutation of `1..=m`.
    NotAPermutation { value: usize },
    /// The ranks destined for this spot do not appear left to right.
    BlockOrder { spot: usize },
    /// The counts overload the tail of the street at this spot.
    Unbalanced { spot: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PreferenceOutOfRange { car, preference, spots } => write!(
                f,
                "car {car} prefers spot {preference}, outside the street 1..={spots}"
            ),
            Error::TooManyCars { cars, spots } => {
                write!(f, "{cars} cars cannot park on a street of {spots} spots")
            }
            Error::CarCannotPark { car } => {
                write!(f, "car {car} drives past the end of the street")
            }
            Error::IncompatiblePair(why) => write!(f, "incompatible pair: {why}"),
        }
    }
}

impl fmt::Display for Incompatibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Incompatibility::LengthMismatch { counts_total, order_len } => write!(
                f,
                "counts describe {counts_total} cars but the order sequence has {order_len}"
            ),
            Incompatibility::NotAPermutation { value } => {
                write!(f, "order sequence is not a permutation (bad value {value})")
            }
            Incompatibility::BlockOrder { spot } => {
                write!(f, "ranks for spot {spot} are not increasing left to right")
            }
            Incompatibility::Unbalanced { spot } => {
                write!(f, "too few preferences at or below spot {spot}")
            }
        }
    }
}

impl std::error::Error for Error {}
