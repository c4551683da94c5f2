use std::fmt;

use crate::error::Error;
use crate::parking::ParkingFunction;

/// Failure to read a parking function from its text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// The line does not have the shape `m n : p1 .. pm`.
    Syntax(String),
    /// Well-formed text, but the sequence does not park.
    Invalid(Error),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax(msg) => write!(f, "{msg}"),
            ParseError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<Error> for ParseError {
    fn from(e: Error) -> Self {
        ParseError::Invalid(e)
    }
}

/// Renders a parking function as one line: `m n : p1 p2 .. pm`.
pub fn format_pf(pf: &ParkingFunction) -> String {
    let mut out = format!("{} {} :", pf.cars(), pf.spots());
    for &p in pf.prefs() {
        out.push(' ');
        out.push_str(&p.to_string());
    }
    out
}

/// Reads the line format produced by [`format_pf`]. Whitespace is free-form;
/// the preference count must match the declared number of cars.
pub fn parse_pf(line: &str) -> Result<ParkingFunction, ParseError> {
    let (head, tail) = line
        .split_once(':')
        .ok_or_else(|| ParseError::Syntax("expected `m n : p1 .. pm`".into()))?;
    let header: Vec<&str> = head.split_whitespace().collect();
    let [cars, spots] = header.as_slice() else {
        return Err(ParseError::Syntax(format!(
            "header must be `m n`, got `{}`",
            head.trim()
        )));
    };
    let cars: usize = parse_number(cars)?;
    let spots: usize = parse_number(spots)?;
    let prefs = tail
        .split_whitespace()
        .map(parse_number)
        .collect::<Result<Vec<usize>, _>>()?;
    if prefs.len() != cars {
        return Err(ParseError::Syntax(format!(
            "declared {cars} cars but listed {} preferences",
            prefs.len()
        )));
    }
    Ok(ParkingFunction::new(prefs, spots)?)
}

fn parse_number(token: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::Syntax(format!("`{token}` is not a number")))
}
