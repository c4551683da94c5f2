use std::fmt;

/// Failure modes of the sampling and distribution layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// More cars than spots; the sample space is empty.
    CarsExceedSpots { cars: usize, spots: usize },
    /// An exact computation would exceed the configured work bound.
    ResourceLimit { need: u128, cap: u128 },
    /// A segment index past the number of gaps between unattempted spots.
    InvalidSegment { segment: usize, segments: usize },
    /// The requested quantity has no implemented formula (for example a
    /// third moment of the first coordinate in the critical regime).
    Unsupported { detail: String },
    /// An error bubbled up from the exact enumeration layer.
    Exact(enumerators::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CarsExceedSpots { cars, spots } => {
                write!(f, "{cars} cars cannot park in {spots} spots")
            }
            Error::ResourceLimit { need, cap } => {
                write!(f, "computation needs {need} steps, over the cap of {cap}")
            }
            Error::InvalidSegment { segment, segments } => {
                write!(f, "segment index {segment} out of range, only {segments} segments")
            }
            Error::Unsupported { detail } => write!(f, "unsupported request: {detail}"),
            Error::Exact(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Exact(e) => Some(e),
            _ => None,
        }
    }
}

impl From<enumerators::Error> for Error {
    fn from(e: enumerators::Error) -> Self {
        match e {
            enumerators::Error::CarsExceedSpots { cars, spots } => {
                Error::CarsExceedSpots { cars, spots }
            }
            enumerators::Error::ResourceLimit { need, cap } => Error::ResourceLimit { need, cap },
            other => Error::Exact(other),
        }
    }
}
