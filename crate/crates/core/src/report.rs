//! The three front-end operations (`array`, `srg`, `verify`) and the report
//! they produce, with text, JSON and CSV renderings.
//!
//! In JSON every integer that can grow with the graph is a decimal string.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{FamilyError, FamilySpec};
use crate::graphs::{
    check_distance_regular, distance_distribution, hyper_wiener_oracle, parse_edge_list, DrgError,
    Graph, GraphError, Rejection,
};
use crate::intersection::{IntersectionArray, IntersectionError, SrgParams, SrgViolation};
use crate::polynomial::IntPolynomial;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Array(#[from] IntersectionError),
    #[error("infeasible strongly regular parameters: {0}")]
    Srg(SrgViolation),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("declared order {declared} does not match order {derived} derived from the array")]
    OrderMismatch { declared: BigInt, derived: BigInt },
}

/// Where the numbers in a report came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Array {
        #[serde(with = "decimal_opt", default)]
        declared_n: Option<BigInt>,
    },
    Srg {
        #[serde(with = "decimal")]
        n: BigInt,
        #[serde(with = "decimal")]
        k: BigInt,
        #[serde(with = "decimal")]
        lambda: BigInt,
        #[serde(with = "decimal")]
        mu: BigInt,
    },
    Family {
        spec: FamilySpec,
    },
    File {
        path: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verification {
    ClosedFormOnly,
    OracleOnly,
    VerifiedMatch,
    Mismatch,
}

impl Verification {
    pub fn as_str(self) -> &'static str {
        match self {
            Verification::ClosedFormOnly => "closed_form_only",
            Verification::OracleOnly => "oracle_only",
            Verification::VerifiedMatch => "verified_match",
            Verification::Mismatch => "mismatch",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Hosoya,
    Wiener,
    HyperWiener,
}

/// First disagreement between closed form and oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub quantity: Quantity,
    /// Power of `t`, for Hosoya mismatches.
    pub coefficient: Option<usize>,
    pub closed_form: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Rejection(Rejection),
    Mismatch(Mismatch),
}

/// Both strongly regular closed forms, rendered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgForms {
    /// `(n k / 2)(t + ((k-λ-1)/μ) t²)` before clearing denominators.
    pub ratio_form: String,
    /// `(n/2)(k t + (n-k-1) t²)`.
    pub simplified: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub source: Source,
    #[serde(with = "decimal")]
    pub n: BigInt,
    pub diameter: usize,
    pub intersection_array: Option<IntersectionArray>,
    #[serde(with = "coefficients")]
    pub hosoya: IntPolynomial,
    #[serde(with = "decimal")]
    pub wiener: BigInt,
    #[serde(with = "decimal")]
    pub hyper_wiener: BigInt,
    pub verification: Verification,
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub srg_forms: Option<SrgForms>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// Hosoya polynomial with its two derived indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub hosoya: IntPolynomial,
    pub wiener: BigInt,
    pub hyper_wiener: BigInt,
}

impl Invariants {
    pub fn closed_form(array: &IntersectionArray) -> Result<Self, IntersectionError> {
        Ok(Self {
            hosoya: array.hosoya_closed_form()?,
            wiener: array.wiener_closed_form()?,
            hyper_wiener: array.hyper_wiener_closed_form()?,
        })
    }

    pub fn oracle(g: &Graph) -> Result<Self, GraphError> {
        let dist = distance_distribution(g)?;
        Ok(Self {
            hosoya: dist.hosoya(),
            wiener: dist.wiener(),
            hyper_wiener: hyper_wiener_oracle(g)?,
        })
    }
}

/// `None` when every coefficient and both indices agree.
pub fn compare(closed: &Invariants, oracle: &Invariants) -> Option<Mismatch> {
    let len = closed.hosoya.coeffs().len().max(oracle.hosoya.coeffs().len());
    if let Some(i) = (0..len).find(|&i| closed.hosoya.coeff(i) != oracle.hosoya.coeff(i)) {
        return Some(Mismatch {
            quantity: Quantity::Hosoya,
            coefficient: Some(i),
            closed_form: closed.hosoya.coeff(i).to_string(),
            oracle: oracle.hosoya.coeff(i).to_string(),
        });
    }
    let scalar = |quantity, a: &BigInt, b: &BigInt| {
        (a != b).then(|| Mismatch {
            quantity,
            coefficient: None,
            closed_form: a.to_string(),
            oracle: b.to_string(),
        })
    };
    scalar(Quantity::Wiener, &closed.wiener, &oracle.wiener)
        .or_else(|| scalar(Quantity::HyperWiener, &closed.hyper_wiener, &oracle.hyper_wiener))
}

/// Closed-form invariants of an intersection array. `declared_n`, when
/// given, must equal the order the array forces.
pub fn array_report(
    b: &[i64],
    c: &[i64],
    declared_n: Option<BigInt>,
) -> Result<Report, CommandError> {
    let validated = IntersectionArray::validate(b, c)?;
    let array = validated.array;
    let n = array.order()?;
    if let Some(declared) = &declared_n {
        if *declared != n {
            return Err(CommandError::OrderMismatch {
                declared: declared.clone(),
                derived: n,
            });
        }
    }
    let inv = Invariants::closed_form(&array)?;
    Ok(Report {
        source: Source::Array { declared_n },
        n,
        diameter: array.diameter(),
        hosoya: inv.hosoya,
        wiener: inv.wiener,
        hyper_wiener: inv.hyper_wiener,
        verification: Verification::ClosedFormOnly,
        witness: None,
        srg_forms: None,
        warnings: validated.warnings.iter().map(ToString::to_string).collect(),
        intersection_array: Some(array),
    })
}

/// Strongly regular parameters: feasibility, then both closed forms and the
/// general array formula, which must agree.
pub fn srg_report(p: SrgParams) -> Result<Report, CommandError> {
    p.feasibility().map_err(CommandError::Srg)?;
    let ratio_form = p.hosoya()?;
    let simplified = p.hosoya_simplified()?;
    let array = p.to_array()?;
    let inv = Invariants::closed_form(&array)?;
    let forms = SrgForms {
        ratio_form: format!(
            "({}*{}/2)*(t + ({}/{})*t^2)",
            p.n,
            p.k,
            p.k - p.lambda - 1,
            p.mu
        ),
        simplified: format!("({}/2)*({}*t + {}*t^2)", p.n, p.k, p.n - p.k - 1),
    };
    let mut verification = Verification::ClosedFormOnly;
    let mut witness = None;
    for other in [&ratio_form, &simplified] {
        let alt = Invariants {
            hosoya: other.clone(),
            ..inv.clone()
        };
        if let Some(m) = compare(&inv, &alt) {
            verification = Verification::Mismatch;
            witness.get_or_insert(Witness::Mismatch(m));
        }
    }
    Ok(Report {
        source: Source::Srg {
            n: p.n.into(),
            k: p.k.into(),
            lambda: p.lambda.into(),
            mu: p.mu.into(),
        },
        n: p.n.into(),
        diameter: 2,
        intersection_array: Some(array),
        hosoya: inv.hosoya,
        wiener: inv.wiener,
        hyper_wiener: inv.hyper_wiener,
        verification,
        witness,
        srg_forms: Some(forms),
        warnings: Vec::new(),
    })
}

/// Brute-force invariants of `g`, compared against the closed form of the
/// array extracted from `g` when it is distance-regular.
pub fn verify_graph(source: Source, g: &Graph) -> Result<Report, CommandError> {
    let oracle = Invariants::oracle(g)?;
    let diameter = oracle.hosoya.degree().unwrap_or(0);
    let (array, verification, witness) = match check_distance_regular(g) {
        Ok(array) => match Invariants::closed_form(&array) {
            Ok(closed) => match compare(&closed, &oracle) {
                None => (Some(array), Verification::VerifiedMatch, None),
                Some(m) => (Some(array), Verification::Mismatch, Some(Witness::Mismatch(m))),
            },
            Err(e) => {
                let m = Mismatch {
                    quantity: Quantity::Hosoya,
                    coefficient: None,
                    closed_form: e.to_string(),
                    oracle: oracle.hosoya.render(),
                };
                (Some(array), Verification::Mismatch, Some(Witness::Mismatch(m)))
            }
        },
        Err(DrgError::Rejected(r)) => (None, Verification::OracleOnly, Some(Witness::Rejection(r))),
        Err(DrgError::Graph(e)) => return Err(e.into()),
    };
    Ok(Report {
        source,
        n: g.order().into(),
        diameter,
        intersection_array: array,
        hosoya: oracle.hosoya,
        wiener: oracle.wiener,
        hyper_wiener: oracle.hyper_wiener,
        verification,
        witness,
        srg_forms: None,
        warnings: Vec::new(),
    })
}

pub fn verify_family(spec: &FamilySpec, max_vertices: usize) -> Result<Report, CommandError> {
    let g = spec.build(max_vertices)?;
    verify_graph(Source::Family { spec: spec.clone() }, &g)
}

pub fn verify_file(
    path: &Path,
    declared_n: Option<usize>,
    max_vertices: usize,
) -> Result<Report, CommandError> {
    let text = std::fs::read_to_string(path).map_err(|source| CommandError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let g = parse_edge_list(&text, declared_n)?;
    if g.order() > max_vertices {
        return Err(GraphError::TooLarge(g.order()).into());
    }
    verify_graph(
        Source::File {
            path: path.display().to_string(),
        },
        &g,
    )
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// One row per distance: `distance,pairs`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("distance,pairs\n");
        for (k, c) in self.hosoya.coeffs().iter().enumerate().skip(1) {
            writeln!(out, "{k},{c}").unwrap();
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let source = match &self.source {
            Source::Array { declared_n: None } => "intersection array".to_string(),
            Source::Array { declared_n: Some(n) } => format!("intersection array (declared n = {n})"),
            Source::Srg { n, k, lambda, mu } => format!("SRG({n},{k},{lambda},{mu})"),
            Source::Family { spec } => format!("family {spec}"),
            Source::File { path } => format!("edge list {path}"),
        };
        writeln!(out, "source:             {source}").unwrap();
        writeln!(out, "n:                  {}", self.n).unwrap();
        writeln!(out, "diameter:           {}", self.diameter).unwrap();
        if let Some(a) = &self.intersection_array {
            writeln!(out, "intersection array: {a}").unwrap();
        }
        writeln!(out, "hosoya:             {}", self.hosoya).unwrap();
        if let Some(forms) = &self.srg_forms {
            writeln!(out, "  ratio form:       {}", forms.ratio_form).unwrap();
            writeln!(out, "  simplified form:  {}", forms.simplified).unwrap();
        }
        writeln!(out, "wiener:             {}", self.wiener).unwrap();
        writeln!(out, "hyper-wiener:       {}", self.hyper_wiener).unwrap();
        writeln!(out, "verification:       {}", self.verification.as_str()).unwrap();
        match &self.witness {
            Some(Witness::Rejection(r)) => writeln!(out, "rejected:           {r}").unwrap(),
            Some(Witness::Mismatch(m)) => writeln!(
                out,
                "MISMATCH:           {:?}{} closed form {} vs oracle {}",
                m.quantity,
                m.coefficient.map(|i| format!(" t^{i}")).unwrap_or_default(),
                m.closed_form,
                m.oracle
            )
            .unwrap(),
            None => {}
        }
        for w in &self.warnings {
            writeln!(out, "warning:            {w}").unwrap();
        }
        out
    }
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

mod decimal_opt {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(ToString::to_string).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

mod coefficients {
    use crate::polynomial::IntPolynomial;
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(p.coeffs().iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IntPolynomial, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}
