//! Exact polynomial arithmetic for the enumerator identities.
//!
//! Coefficients are unbounded integers throughout. Identity checks in
//! this crate always compare polynomials coefficient by coefficient,
//! so both types keep a canonical representation: a dense univariate
//! form with no trailing zeros, and a sparse bivariate map with no
//! zero entries.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Univariate polynomial, `coeffs[d]` holding the degree-`d` coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// Builds from an ascending coefficient list, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn monomial(degree: usize, coeff: BigInt) -> Self {
        if coeff.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff;
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest degree with a nonzero coefficient, `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add_term(&mut self, degree: usize, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, BigInt::zero());
        }
        self.coeffs[degree] += coeff;
        self.trim();
    }

    pub fn scaled(&self, factor: &BigInt) -> IntPoly {
        if factor.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Sum of all coefficients, the usual "forget the statistic" count.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Renders with the given variable name, lowest degree first, e.g.
    /// `6 + 6y + 3y^2 + y^3`.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let part = match d {
                0 => c.to_string(),
                _ => {
                    let var_part = if d == 1 { var.to_string() } else { format!("{var}^{d}") };
                    if c.is_one() {
                        var_part
                    } else {
                        format!("{c}{var_part}")
                    }
                }
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("y"))
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

/// Bivariate polynomial in `x` and `y`, stored sparsely by degree pair.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct XyPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl XyPoly {
    pub fn zero() -> Self {
        XyPoly::default()
    }

    pub fn one() -> Self {
        XyPoly::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(xdeg: u32, ydeg: u32, coeff: BigInt) -> Self {
        let mut p = XyPoly::zero();
        p.add_term(xdeg, ydeg, &coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, xdeg: u32, ydeg: u32, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((xdeg, ydeg)).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(xdeg, ydeg));
        }
    }

    pub fn coeff(&self, xdeg: u32, ydeg: u32) -> BigInt {
        self.terms.get(&(xdeg, ydeg)).cloned().unwrap_or_default()
    }

    /// Terms in ascending `(x-degree, y-degree)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(xd, yd), c)| (xd, yd, c))
    }

    pub fn scaled(&self, factor: &BigInt) -> XyPoly {
        if factor.is_zero() {
            return XyPoly::zero();
        }
        XyPoly { terms: self.terms.iter().map(|(&k, c)| (k, c * factor)).collect() }
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(xd, yd), c) in &self.terms {
            acc += c * pow_bigint(x, xd) * pow_bigint(y, yd);
        }
        acc
    }
}

impl AddAssign<&XyPoly> for XyPoly {
    fn add_assign(&mut self, rhs: &XyPoly) {
        for (&(xd, yd), c) in &rhs.terms {
            self.add_term(xd, yd, c);
        }
    }
}

impl Mul for &XyPoly {
    type Output = XyPoly;

    fn mul(self, rhs: &XyPoly) -> XyPoly {
        let mut out = XyPoly::zero();
        for (&(ax, ay), a) in &self.terms {
            for (&(bx, by), b) in &rhs.terms {
                out.add_term(ax + bx, ay + by, &(a * b));
            }
        }
        out
    }
}

impl fmt::Display for XyPoly {
    /// Highest degrees first, e.g. `4x^2 + 2x + 2y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(xd, yd), c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let vars = match (xd, yd) {
                (0, 0) => String::new(),
                _ => {
                    let xpart = match xd {
                        0 => String::new(),
                        1 => "x".to_string(),
                        _ => format!("x^{xd}"),
                    };
                    let ypart = match yd {
                        0 => String::new(),
                        1 => "y".to_string(),
                        _ => format!("y^{yd}"),
                    };
                    format!("{xpart}{ypart}")
                }
            };
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&vars)?;
            } else {
                write!(f, "{c}{vars}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn pow_bigint(base: &BigInt, exp: u32) -> BigInt {
    let mut acc = BigInt::one();
    let mut sq = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn univariate_arithmetic_and_display() {
        let a = p(&[6, 6, 3, 1]);
        assert_eq!(a.display("y"), "6 + 6y + 3y^2 + y^3");
        assert_eq!(a.eval_one(), BigInt::from(16));
        assert_eq!(a.degree(), Some(3));

        let b = &p(&[1, 1]) * &p(&[2, 0, 1]);
        assert_eq!(b, p(&[2, 2, 1, 1]));
        assert_eq!((&b + &p(&[0, -2, -1, -1])), p(&[2]));

        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).display("q"), "0");
        assert_eq!(p(&[0, 1]).display("q"), "q");
    }

    #[test]
    fn bivariate_arithmetic_and_display() {
        let mut t = XyPoly::monomial(2, 0, BigInt::from(4));
        t.add_term(1, 0, &BigInt::from(2));
        t.add_term(0, 1, &BigInt::from(2));
        assert_eq!(t.to_string(), "4x^2 + 2x + 2y");
        assert_eq!(t.eval(&BigInt::one(), &BigInt::one()), BigInt::from(8));

        let sq = &t * &XyPoly::one();
        assert_eq!(sq, t);

        let mut cancel = t.clone();
        cancel.add_term(2, 0, &BigInt::from(-4));
        assert_eq!(cancel.coeff(2, 0), BigInt::zero());
        assert_eq!(cancel.terms().count(), 2);
    }
}
