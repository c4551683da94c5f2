use std::fmt;

/// Failure modes shared by the counting and polynomial routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// More cars than spots can never park.
    CarsExceedSpots { cars: usize, spots: usize },
    /// A requested preference value lies outside `1..=spots`.
    PreferenceOutOfRange { preference: usize, spots: usize },
    /// A hole pattern is the wrong length, out of range, or not increasing.
    BadHoles { reason: String },
    /// The instance is beyond the hard size limit of an exact algorithm.
    TooLarge { size: usize, max: usize },
    /// Brute force would enumerate more objects than the caller allowed.
    ResourceLimit { need: u128, cap: u128 },
    /// A zero base was raised to a negative power in exact arithmetic.
    ZeroToNegativePower { exponent: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CarsExceedSpots { cars, spots } => {
                write!(f, "{cars} cars cannot park on {spots} spots")
            }
            Error::PreferenceOutOfRange { preference, spots } => {
                write!(f, "preference {preference} is outside 1..={spots}")
            }
            Error::BadHoles { reason } => write!(f, "bad hole pattern: {reason}"),
            Error::TooLarge { size, max } => {
                write!(f, "instance size {size} exceeds the supported maximum {max}")
            }
            Error::ResourceLimit { need, cap } => {
                write!(f, "enumeration needs {need} objects, cap is {cap}")
            }
            Error::ZeroToNegativePower { exponent } => {
                write!(f, "zero raised to negative power {exponent}")
            }
        }
    }
}

impl std::error::Error for Error {}
