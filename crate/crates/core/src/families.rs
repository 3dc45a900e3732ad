//! Generators for classical distance-regular families.
//!
//! Vertex labels are canonical (binary labels, base-`q` strings, subsets in
//! lexicographic order) so the same parameters always give the same
//! adjacency.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::Graph;

/// Default ceiling on generated vertex counts.
pub const DEFAULT_MAX_VERTICES: usize = 50_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("bad parameters for {family}: {reason}")]
    BadParams { family: Family, reason: String },
    #[error("{spec} would have {vertices} vertices, above the limit of {cap}")]
    SizeLimit {
        spec: String,
        vertices: u128,
        cap: usize,
    },
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("cannot parse family parameters {0:?}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Complete,
    Cycle,
    CompleteBipartite,
    Hypercube,
    Petersen,
    Kneser2,
    Hamming,
    Johnson,
    Odd,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Complete,
        Family::Cycle,
        Family::CompleteBipartite,
        Family::Hypercube,
        Family::Petersen,
        Family::Kneser2,
        Family::Hamming,
        Family::Johnson,
        Family::Odd,
    ];

    /// Name used in `name:params` strings.
    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::CompleteBipartite => "bipartite",
            Family::Hypercube => "hypercube",
            Family::Petersen => "petersen",
            Family::Kneser2 => "kneser2",
            Family::Hamming => "hamming",
            Family::Johnson => "johnson",
            Family::Odd => "odd",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Petersen => 0,
            Family::Hamming | Family::Johnson => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// A family name with parameters whose ranges have been checked.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    params: Vec<u64>,
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i as u128 + 1),
            None => return u128::MAX,
        }
    }
    acc
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<u64>) -> Result<Self, FamilyError> {
        let bad = |reason: &str| FamilyError::BadParams {
            family,
            reason: reason.to_string(),
        };
        if params.len() != family.arity() {
            return Err(bad(&format!(
                "expected {} parameter(s), got {}",
                family.arity(),
                params.len()
            )));
        }
        let problem = match (family, params.as_slice()) {
            (Family::Complete, &[n]) if n < 2 => Some("need n >= 2"),
            (Family::Cycle, &[n]) if n < 3 => Some("need n >= 3"),
            (Family::CompleteBipartite, &[m]) if m < 2 => Some("need m >= 2"),
            (Family::Hypercube, &[k]) if k < 1 => Some("need k >= 1"),
            (Family::Kneser2, &[n]) if n < 5 => Some("need n >= 5 (K(n,2) is disconnected below)"),
            (Family::Hamming, &[d, q]) if d < 1 || q < 2 => Some("need d >= 1 and q >= 2"),
            (Family::Johnson, &[n, k]) if n <= k || k < 1 => Some("need n > k >= 1"),
            (Family::Odd, &[k]) if k < 2 => Some("need k >= 2"),
            _ => None,
        };
        if let Some(reason) = problem {
            return Err(bad(reason));
        }
        Ok(Self { family, params })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[u64] {
        &self.params
    }

    /// Vertex count of the graph this spec generates, saturating on overflow.
    pub fn vertex_count(&self) -> u128 {
        let p = &self.params;
        match self.family {
            Family::Complete | Family::Cycle => p[0] as u128,
            Family::CompleteBipartite => 2 * p[0] as u128,
            Family::Hypercube if p[0] < 128 => 1u128 << p[0],
            Family::Hypercube => u128::MAX,
            Family::Petersen => 10,
            Family::Kneser2 => binomial(p[0], 2),
            Family::Hamming => u32::try_from(p[0])
                .ok()
                .and_then(|d| (p[1] as u128).checked_pow(d))
                .unwrap_or(u128::MAX),
            Family::Johnson => binomial(p[0], p[1]),
            Family::Odd => binomial(p[0].saturating_mul(2) - 1, p[0] - 1),
        }
    }

    /// Generates the graph, refusing anything above `max_vertices`.
    pub fn build(&self, max_vertices: usize) -> Result<Graph, FamilyError> {
        let vertices = self.vertex_count();
        if vertices > max_vertices as u128 {
            return Err(FamilyError::SizeLimit {
                spec: self.to_string(),
                vertices,
                cap: max_vertices,
            });
        }
        let p = &self.params;
        let graph = match self.family {
            Family::Complete => gen_complete(p[0] as u32),
            Family::Cycle => gen_cycle(p[0] as u32),
            Family::CompleteBipartite => gen_complete_bipartite(p[0] as u32),
            Family::Hypercube => gen_hypercube(p[0] as u32),
            Family::Petersen => gen_kneser(5, 2),
            Family::Kneser2 => gen_kneser(p[0] as u32, 2),
            Family::Hamming => gen_hamming(p[0] as u32, p[1] as u32),
            Family::Johnson => gen_johnson(p[0] as u32, p[1] as u32),
            Family::Odd => gen_kneser(2 * p[0] as u32 - 1, p[0] as u32 - 1),
        };
        Ok(graph)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        if !self.params.is_empty() {
            write!(f, ":{}", self.params.iter().join(","))?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// `name` or `name:p1[,p2]`, e.g. `hypercube:6`, `hamming:2,3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, args) = match s.split_once(':') {
            Some((name, args)) => (name, Some(args)),
            None => (s, None),
        };
        let family: Family = name.parse()?;
        let params = match args {
            None => Vec::new(),
            Some(args) => args
                .split(',')
                .map(|a| a.trim().parse::<u64>())
                .collect::<Result<_, _>>()
                .map_err(|_| FamilyError::Parse(s.to_string()))?,
        };
        FamilySpec::new(family, params)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn build(spec: FamilySpec) -> Result<Graph, FamilyError> {
    spec.build(DEFAULT_MAX_VERTICES)
}

/// `K_n`.
pub fn complete(n: u64) -> Result<Graph, FamilyError> {
    build(FamilySpec::new(Family::Complete, vec![n])?)
}

/// `C_n` with edges `{i, i+1 mod n}`.
pub fn cycle(n: u64) -> Result<Graph, FamilyError> {
    build(FamilySpec::new(Family::Cycle, vec![n])?)
}

/// `K_{m,m}` with parts `0..m` and `m..2m`.
pub fn complete_bipartite(m: u64) -> Result<Graph, FamilyError> {
    build(FamilySpec::new(Family::CompleteBipartite, vec![m])?)
}

/// `Q_k`: binary labels adjacent when they differ in one bit.
pub fn hypercube(k: u64) -> Result<Graph, FamilyError> {
    build(FamilySpec::new(Family::Hypercube, vec![k])?)
}

pub fn petersen() -> Result<Graph, FamilyError> {
    build(FamilySpec::new(Family::Petersen, vec![])?)
}

/// Kneser graph `K(n,2)`: 2-subsets adjacent when disjoint.
pub fn kneser2(n: u64) -> Result<Graph, FamilyError> {
    build(FamilySpec::new(Family::Kneser2, vec![n])?)
}

/// `H(d,q)`: length-`d` words over `q` symbols adjacent at Hamming distance 1.
pub fn hamming(d: u64, q: u64) -> Result<Graph, FamilyError> {
    build(FamilySpec::new(Family::Hamming, vec![d, q])?)
}

/// `J(n,k)`: `k`-subsets adjacent when they share `k-1` elements.
pub fn johnson(n: u64, k: u64) -> Result<Graph, FamilyError> {
    build(FamilySpec::new(Family::Johnson, vec![n, k])?)
}

/// Odd graph `O_k = K(2k-1, k-1)`.
pub fn odd(k: u64) -> Result<Graph, FamilyError> {
    build(FamilySpec::new(Family::Odd, vec![k])?)
}

fn from_edges(n: usize, edges: Vec<(u32, u32)>) -> Graph {
    Graph::from_edges(n, edges).expect("generators emit simple graphs")
}

fn gen_complete(n: u32) -> Graph {
    let edges = (0..n).tuple_combinations().collect();
    from_edges(n as usize, edges)
}

fn gen_cycle(n: u32) -> Graph {
    from_edges(n as usize, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

fn gen_complete_bipartite(m: u32) -> Graph {
    let edges = (0..m).cartesian_product(m..2 * m).collect();
    from_edges(2 * m as usize, edges)
}

fn gen_hypercube(k: u32) -> Graph {
    let n = 1u32 << k;
    let edges = (0..n)
        .flat_map(|v| (0..k).map(move |bit| (v, v ^ (1 << bit))))
        .filter(|&(u, w)| u < w)
        .collect();
    from_edges(n as usize, edges)
}

fn gen_hamming(d: u32, q: u32) -> Graph {
    let n = q.pow(d);
    let mut edges = Vec::new();
    for v in 0..n {
        let mut place = 1;
        for _ in 0..d {
            let digit = (v / place) % q;
            // Only raise the digit, so each edge is emitted once.
            for other in digit + 1..q {
                edges.push((v, v + (other - digit) * place));
            }
            place *= q;
        }
    }
    from_edges(n as usize, edges)
}

/// Lexicographically ordered `k`-subsets of `0..n` and their indices.
fn subsets(n: u32, k: u32) -> (Vec<Vec<u32>>, HashMap<Vec<u32>, u32>) {
    let list: Vec<Vec<u32>> = (0..n).combinations(k as usize).collect();
    let index = list
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i as u32))
        .collect();
    (list, index)
}

fn gen_johnson(n: u32, k: u32) -> Graph {
    let (list, index) = subsets(n, k);
    let mut edges = Vec::new();
    for (i, set) in list.iter().enumerate() {
        let outside: Vec<u32> = (0..n).filter(|x| set.binary_search(x).is_err()).collect();
        for pos in 0..set.len() {
            for &y in &outside {
                let mut other = set.clone();
                other[pos] = y;
                other.sort_unstable();
                let j = index[&other];
                if j as usize > i {
                    edges.push((i as u32, j));
                }
            }
        }
    }
    from_edges(list.len(), edges)
}

fn gen_kneser(n: u32, k: u32) -> Graph {
    let (list, index) = subsets(n, k);
    let mut edges = Vec::new();
    for (i, set) in list.iter().enumerate() {
        let outside: Vec<u32> = (0..n).filter(|x| set.binary_search(x).is_err()).collect();
        for other in outside.into_iter().combinations(k as usize) {
            let j = index[&other];
            if j as usize > i {
                edges.push((i as u32, j));
            }
        }
    }
    from_edges(list.len(), edges)
}
