//! Intersection arrays and the closed-form distance invariants they determine.
//!
//! An array `{b_0, ..., b_{D-1}; c_1, ..., c_D}` fixes the sphere sizes
//! `k_i = |G_i(v)|` through `k_{i-1} b_{i-1} = k_i c_i`, hence the order
//! `n = Σ k_i` and the number of vertex pairs at each distance, `n k_i / 2`.
//! Everything here is computed with exact rationals and only then checked for
//! integrality, since `Π b_j` need not be divisible by every prefix of `Π c_j`
//! even when the final quotient is an integer.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polynomial::IntPolynomial;

/// Which of the two sequences an index refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    B,
    C,
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sequence::B => "b",
            Sequence::C => "c",
        })
    }
}

/// A structural defect that rules an array out as the array of any graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    LengthMismatch { b: usize, c: usize },
    /// `index` is the subscript as written (`b_0..`, `c_1..`).
    NonPositive { seq: Sequence, index: usize, value: i64 },
    FirstCNotOne { found: i64 },
    NonIntegralSphere { index: usize },
    /// `n k_i` is odd, so `d(G, i)` would not be an integer.
    OddPairCount { index: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => f.write_str("diameter must be at least 1 (empty array)"),
            Violation::LengthMismatch { b, c } => {
                write!(f, "b and c must have equal length (got {b} and {c})")
            }
            Violation::NonPositive { seq, index, value } => {
                write!(f, "{seq}_{index} must be positive (got {value})")
            }
            Violation::FirstCNotOne { found } => write!(f, "c_1 must equal 1 (got {found})"),
            Violation::NonIntegralSphere { index } => {
                write!(f, "sphere size k_{index} is not an integer")
            }
            Violation::OddPairCount { index } => {
                write!(f, "n*k_{index} is odd, so the pair count at distance {index} is not an integer")
            }
        }
    }
}

/// Non-fatal observations; the closed forms do not depend on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    /// `b_{index} > b_{index-1}`.
    BIncreases { index: usize },
    /// `c_{index} < c_{index-1}`.
    CDecreases { index: usize },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::BIncreases { index } => {
                write!(f, "b_{index} > b_{}: b is not non-increasing", index - 1)
            }
            Warning::CDecreases { index } => {
                write!(f, "c_{index} < c_{}: c is not non-decreasing", index - 1)
            }
        }
    }
}

/// Why a strongly regular parameter set cannot describe a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SrgViolation {
    NegativeLambda { lambda: i64 },
    MuBelowOne { mu: i64 },
    /// Need `0 < k < n - 1`.
    DegreeOutOfRange { n: i64, k: i64 },
    /// `(n - k - 1) μ != k (k - λ - 1)`.
    RelationViolated { lhs: i64, rhs: i64 },
}

impl fmt::Display for SrgViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SrgViolation::NegativeLambda { lambda } => write!(f, "lambda must be >= 0 (got {lambda})"),
            SrgViolation::MuBelowOne { mu } => write!(f, "mu must be >= 1 (got {mu})"),
            SrgViolation::DegreeOutOfRange { n, k } => {
                write!(f, "degree must satisfy 0 < k < n-1 (got n={n}, k={k})")
            }
            SrgViolation::RelationViolated { lhs, rhs } => write!(
                f,
                "relation (n-k-1)*mu = k*(k-lambda-1) violated: {lhs} != {rhs}"
            ),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntersectionError {
    #[error("invalid intersection array: {}", join(.0))]
    HardInvalid(Vec<Violation>),
    #[error("sphere size k_{0} is not a positive integer")]
    NonIntegralSphere(usize),
    #[error("coefficient of t^{0} is not an integer")]
    NonIntegralCoefficient(usize),
    #[error("infeasible strongly regular parameters: {0}")]
    Srg(SrgViolation),
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// The sequences `b_0..b_{D-1}` and `c_1..c_D`.
///
/// Values obtained through [`IntersectionArray::validate`] satisfy every
/// structural constraint. [`IntersectionArray::from_raw_parts`] only checks
/// shape, for exploring arrays that may not belong to a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

/// A validated array plus the monotonicity warnings it raised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validated {
    pub array: IntersectionArray,
    pub warnings: Vec<Warning>,
}

impl IntersectionArray {
    /// Checks every hard constraint and reports all violations at once.
    pub fn validate(b: &[i64], c: &[i64]) -> Result<Validated, IntersectionError> {
        let mut violations = Vec::new();
        if b.is_empty() && c.is_empty() {
            violations.push(Violation::Empty);
        }
        if b.len() != c.len() {
            violations.push(Violation::LengthMismatch {
                b: b.len(),
                c: c.len(),
            });
        }
        let non_positive = b
            .iter()
            .enumerate()
            .filter(|(_, &v)| v <= 0)
            .map(|(i, &value)| Violation::NonPositive {
                seq: Sequence::B,
                index: i,
                value,
            })
            .chain(c.iter().enumerate().filter(|(_, &v)| v <= 0).map(|(i, &value)| {
                Violation::NonPositive {
                    seq: Sequence::C,
                    index: i + 1,
                    value,
                }
            }));
        violations.extend(non_positive);
        if let Some(&c1) = c.first() {
            if c1 != 1 {
                violations.push(Violation::FirstCNotOne { found: c1 });
            }
        }

        let shape_ok = !violations.iter().any(|v| {
            matches!(
                v,
                Violation::Empty | Violation::LengthMismatch { .. } | Violation::NonPositive { .. }
            )
        });
        if shape_ok {
            let array = IntersectionArray {
                b: b.iter().map(|&v| v as u64).collect(),
                c: c.iter().map(|&v| v as u64).collect(),
            };
            match array.sphere_sizes() {
                Err(IntersectionError::NonIntegralSphere(i)) => {
                    violations.push(Violation::NonIntegralSphere { index: i })
                }
                Err(other) => unreachable!("sphere_sizes only fails on integrality: {other}"),
                Ok(spheres) => {
                    for (i, k) in spheres.k.iter().enumerate().skip(1) {
                        if (&spheres.n * k).is_odd() {
                            violations.push(Violation::OddPairCount { index: i });
                        }
                    }
                }
            }
            if violations.is_empty() {
                let warnings = array.warnings();
                return Ok(Validated { array, warnings });
            }
        }
        Err(IntersectionError::HardInvalid(violations))
    }

    /// Builds an array checking only shape: equal non-zero lengths and
    /// positive entries. Feasibility is left to the formulas, which report
    /// non-integral intermediate results as errors.
    pub fn from_raw_parts(b: Vec<u64>, c: Vec<u64>) -> Result<Self, IntersectionError> {
        let mut violations = Vec::new();
        if b.is_empty() && c.is_empty() {
            violations.push(Violation::Empty);
        }
        if b.len() != c.len() {
            violations.push(Violation::LengthMismatch {
                b: b.len(),
                c: c.len(),
            });
        }
        for (seq, offset, values) in [(Sequence::B, 0, &b), (Sequence::C, 1, &c)] {
            for (i, _) in values.iter().enumerate().filter(|(_, &v)| v == 0) {
                violations.push(Violation::NonPositive {
                    seq,
                    index: i + offset,
                    value: 0,
                });
            }
        }
        if violations.is_empty() {
            Ok(Self { b, c })
        } else {
            Err(IntersectionError::HardInvalid(violations))
        }
    }

    /// `{k, k-1, ..., 1; 1, 2, ..., k}`, the array of the `k`-cube.
    pub fn hypercube(k: u64) -> Self {
        Self {
            b: (1..=k).rev().collect(),
            c: (1..=k).collect(),
        }
    }

    pub fn b(&self) -> &[u64] {
        &self.b
    }

    pub fn c(&self) -> &[u64] {
        &self.c
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// Valency `b_0`.
    pub fn degree(&self) -> u64 {
        self.b[0]
    }

    fn warnings(&self) -> Vec<Warning> {
        let b = self
            .b
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] > w[0])
            .map(|(i, _)| Warning::BIncreases { index: i + 1 });
        let c = self
            .c
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] < w[0])
            .map(|(i, _)| Warning::CDecreases { index: i + 2 });
        b.chain(c).collect()
    }

    /// Sphere sizes `k_0 = 1`, `k_1 = b_0`,
    /// `k_i = Π_{j<i} b_j / Π_{2<=j<=i} c_j`, and the order `n = Σ k_i`.
    pub fn sphere_sizes(&self) -> Result<SphereSizes, IntersectionError> {
        let mut numer = BigInt::one();
        let mut denom = BigInt::one();
        let mut k = vec![BigInt::one()];
        for i in 1..=self.diameter() {
            numer *= self.b[i - 1];
            if i >= 2 {
                denom *= self.c[i - 1];
            }
            let ki = BigRational::new(numer.clone(), denom.clone());
            if !ki.is_integer() || !ki.is_positive() {
                return Err(IntersectionError::NonIntegralSphere(i));
            }
            k.push(ki.to_integer());
        }
        let n = k.iter().sum();
        Ok(SphereSizes { k, n })
    }

    /// Order of any graph with this array.
    pub fn order(&self) -> Result<BigInt, IntersectionError> {
        Ok(self.sphere_sizes()?.n)
    }

    /// The ratios `Π_{j=1}^{i-1} b_j / Π_{j=2}^{i} c_j` for `i = 2..=D`,
    /// together with the prefactor `n b_0 / 2`.
    fn ratio_terms(&self) -> Result<(BigRational, Vec<BigRational>), IntersectionError> {
        let n = self.order()?;
        let prefactor = BigRational::new(n * self.b[0], BigInt::from(2));
        let mut ratios = Vec::with_capacity(self.diameter().saturating_sub(1));
        let mut ratio = BigRational::one();
        for i in 2..=self.diameter() {
            ratio *= BigRational::new(self.b[i - 1].into(), self.c[i - 1].into());
            ratios.push(ratio.clone());
        }
        Ok((prefactor, ratios))
    }

    /// `H(G,t) = (n b_0 / 2)(t + Σ_{i=2}^{D} ratio_i t^i)`.
    pub fn hosoya_closed_form(&self) -> Result<IntPolynomial, IntersectionError> {
        let (prefactor, ratios) = self.ratio_terms()?;
        let mut coeffs = vec![BigInt::zero()];
        let terms = std::iter::once(prefactor.clone()).chain(ratios.iter().map(|r| &prefactor * r));
        for (power, term) in (1..).zip(terms) {
            if !term.is_integer() {
                return Err(IntersectionError::NonIntegralCoefficient(power));
            }
            coeffs.push(term.to_integer());
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }

    /// `W(G) = (n b_0 / 2)(1 + Σ_{i=2}^{D} i ratio_i)`.
    pub fn wiener_closed_form(&self) -> Result<BigInt, IntersectionError> {
        // The pair counts themselves must be integral for the array to be real.
        self.hosoya_closed_form()?;
        let (prefactor, ratios) = self.ratio_terms()?;
        let weighted: BigRational = (2u64..)
            .zip(&ratios)
            .map(|(i, r)| r * BigRational::from_integer(i.into()))
            .sum();
        let w = prefactor * (BigRational::one() + weighted);
        debug_assert!(w.is_integer());
        Ok(w.to_integer())
    }

    /// `WW(G) = H'(1) + H''(1)/2`, from `WW = ½ Σ_{pairs} (d + d²)`.
    pub fn hyper_wiener_closed_form(&self) -> Result<BigInt, IntersectionError> {
        let h = self.hosoya_closed_form()?;
        let first = h.derivative().value_at_one();
        let (second_half, rem) = h.second_derivative().value_at_one().div_rem(&BigInt::from(2));
        debug_assert!(rem.is_zero(), "i(i-1) is always even");
        Ok(first + second_half)
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{}; {}}}", list(&self.b), list(&self.c))
    }
}

/// Serialised as `{"b": ["3", ...], "c": ["1", ...]}`.
#[derive(Serialize, Deserialize)]
struct ArrayStrings {
    b: Vec<String>,
    c: Vec<String>,
}

impl Serialize for IntersectionArray {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings = |v: &[u64]| v.iter().map(u64::to_string).collect();
        ArrayStrings {
            b: strings(&self.b),
            c: strings(&self.c),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntersectionArray {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = ArrayStrings::deserialize(deserializer)?;
        let parse = |v: Vec<String>| {
            v.iter()
                .map(|s| s.parse::<u64>().map_err(D::Error::custom))
                .collect::<Result<Vec<_>, _>>()
        };
        IntersectionArray::from_raw_parts(parse(raw.b)?, parse(raw.c)?).map_err(D::Error::custom)
    }
}

/// `k_0..k_D` and `n = Σ k_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereSizes {
    pub k: Vec<BigInt>,
    pub n: BigInt,
}

/// Strongly regular parameters `(n, k, λ, μ)`, unchecked until passed through
/// [`SrgParams::feasibility`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub n: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
}

impl SrgParams {
    pub fn new(n: i64, k: i64, lambda: i64, mu: i64) -> Self {
        Self { n, k, lambda, mu }
    }

    fn check_ranges(&self) -> Result<(), SrgViolation> {
        if self.lambda < 0 {
            return Err(SrgViolation::NegativeLambda {
                lambda: self.lambda,
            });
        }
        if self.mu < 1 {
            return Err(SrgViolation::MuBelowOne { mu: self.mu });
        }
        if self.k <= 0 || self.k >= self.n - 1 {
            return Err(SrgViolation::DegreeOutOfRange {
                n: self.n,
                k: self.k,
            });
        }
        Ok(())
    }

    fn relation(&self) -> Result<(), SrgViolation> {
        let lhs = (self.n - self.k - 1) * self.mu;
        let rhs = self.k * (self.k - self.lambda - 1);
        if lhs == rhs {
            Ok(())
        } else {
            Err(SrgViolation::RelationViolated { lhs, rhs })
        }
    }

    /// First failing condition among `λ >= 0`, `μ >= 1`, `0 < k < n-1` and
    /// `(n-k-1) μ = k (k-λ-1)`.
    pub fn feasibility(&self) -> Result<(), SrgViolation> {
        self.check_ranges()?;
        self.relation()
    }

    /// `{k, k-λ-1; 1, μ}`.
    pub fn to_array(&self) -> Result<IntersectionArray, IntersectionError> {
        let b1 = self.k - self.lambda - 1;
        if b1 <= 0 {
            return Err(IntersectionError::HardInvalid(vec![Violation::NonPositive {
                seq: Sequence::B,
                index: 1,
                value: b1,
            }]));
        }
        Ok(IntersectionArray::validate(&[self.k, b1], &[1, self.mu])?.array)
    }

    /// `(n k / 2)(t + ((k-λ-1)/μ) t²)`. Uses `n` as given and does not assume
    /// the parameter relation, so it can be compared with
    /// [`SrgParams::hosoya_simplified`].
    pub fn hosoya(&self) -> Result<IntPolynomial, IntersectionError> {
        self.check_ranges().map_err(IntersectionError::Srg)?;
        let prefactor = BigRational::new(BigInt::from(self.n) * self.k, BigInt::from(2));
        let ratio = BigRational::new(
            BigInt::from(self.k - self.lambda - 1),
            BigInt::from(self.mu),
        );
        let linear = prefactor.clone();
        let quadratic = prefactor * ratio;
        for (power, term) in [(1, &linear), (2, &quadratic)] {
            if !term.is_integer() {
                return Err(IntersectionError::NonIntegralCoefficient(power));
            }
        }
        Ok(IntPolynomial::from_coeffs([
            BigInt::zero(),
            linear.to_integer(),
            quadratic.to_integer(),
        ]))
    }

    /// `(n/2)(k t + (n-k-1) t²)`, valid once the parameter relation holds.
    pub fn hosoya_simplified(&self) -> Result<IntPolynomial, IntersectionError> {
        self.feasibility().map_err(IntersectionError::Srg)?;
        let n = BigInt::from(self.n);
        let linear = &n * self.k;
        let quadratic = &n * (self.n - self.k - 1);
        for (power, term) in [(1, &linear), (2, &quadratic)] {
            if term.is_odd() {
                return Err(IntersectionError::NonIntegralCoefficient(power));
            }
        }
        Ok(IntPolynomial::from_coeffs([
            BigInt::zero(),
            linear / 2,
            quadratic / 2,
        ]))
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SRG({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}
