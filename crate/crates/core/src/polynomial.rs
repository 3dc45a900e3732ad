//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Only what distance polynomials need: construction in normal form, exact
//! evaluation at a rational point, formal derivatives and a canonical text
//! form (`12*t + 12*t^2 + 4*t^3`) that can be parsed back.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// A polynomial `Σ coeffs[i]·t^i` kept in normal form (no trailing zeros).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Builds a polynomial from coefficients indexed from `t^0`, stripping
    /// trailing zeros.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exact value at a rational point, by Horner's rule.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Exact value at an integer point.
    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Value at `t = 1`, i.e. the coefficient sum.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i)),
        )
    }

    pub fn second_derivative(&self) -> Self {
        self.derivative().derivative()
    }

    /// Canonical ascending-power rendering; see [`fmt::Display`].
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, magnitude) = if c.sign() == num_bigint::Sign::Minus {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            first = false;
            match i {
                0 => write!(f, "{magnitude}")?,
                1 => write!(f, "{magnitude}*t")?,
                _ => write!(f, "{magnitude}*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse polynomial term {term:?}")]
pub struct ParsePolynomialError {
    pub term: String,
}

impl FromStr for IntPolynomial {
    type Err = ParsePolynomialError;

    /// Parses the output of [`IntPolynomial::render`]. Terms are
    /// `c`, `c*t` or `c*t^i` joined by ` + ` / ` - `.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let err = |term: &str| ParsePolynomialError {
            term: term.to_string(),
        };
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let (term, tail) = match rest.find([' ']) {
                Some(pos) => (&rest[..pos], Some(&rest[pos..])),
                None => (rest, None),
            };
            let (coeff, power) = match term.split_once("*t") {
                None => (term, 0usize),
                Some((c, "")) => (c, 1),
                Some((c, p)) => {
                    let p = p.strip_prefix('^').ok_or_else(|| err(term))?;
                    (c, p.parse::<usize>().map_err(|_| err(term))?)
                }
            };
            let mut value: BigInt = coeff.parse().map_err(|_| err(term))?;
            if negative {
                value = -value;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += value;
            let Some(tail) = tail else { break };
            if let Some(r) = tail.strip_prefix(" + ") {
                negative = false;
                rest = r;
            } else if let Some(r) = tail.strip_prefix(" - ") {
                negative = true;
                rest = r;
            } else {
                return Err(err(tail));
            }
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

/// `(t + 1)^k - 1` scaled by `scale`, expanded; handy for hypercube checks.
pub fn binomial_shifted(k: u32, scale: &BigInt) -> IntPolynomial {
    let mut row = vec![BigInt::one()];
    for _ in 0..k {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (i, c) in row.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c;
        }
        row = next;
    }
    row[0] -= 1;
    IntPolynomial::from_coeffs(row.into_iter().map(|c| c * scale))
}
