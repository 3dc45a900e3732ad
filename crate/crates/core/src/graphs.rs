//! Simple undirected graphs and the brute-force distance oracle.
//!
//! Every invariant the closed forms predict is recomputed here from scratch:
//! one BFS per source vertex, run in parallel, with per-source results
//! reduced deterministically.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intersection::IntersectionArray;
use crate::polynomial::IntPolynomial;

/// Compact distance; [`UNREACHED`] marks vertices BFS never visited.
pub type Distance = u32;

/// Marker for "not reached" in [`bfs_distances`] output.
pub const UNREACHED: Distance = Distance::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(u32, u32),
    #[error("edge {{{u}, {v}}} refers to a vertex outside 0..{n}")]
    VertexOutOfRange { u: u32, v: u32, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("graph has {0} vertices, more than supported")]
    TooLarge(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Undirected simple graph on vertices `0..n`, stored as sorted adjacency
/// lists packed into one array.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an undirected edge list. Each edge must appear
    /// once, in either orientation.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        if n >= UNREACHED as usize {
            return Err(GraphError::TooLarge(n));
        }
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            lists[u as usize].push(v);
            lists[v as usize].push(u);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut neighbors = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        for (u, mut list) in lists.into_iter().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u as u32, w[0]);
                return Err(GraphError::DuplicateEdge(a.min(b), a.max(b)));
            }
            neighbors.extend_from_slice(&list);
            offsets.push(neighbors.len());
        }
        Ok(Self { offsets, neighbors })
    }

    pub fn order(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn size(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.neighbors[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.order() as u32).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    fn vertices(&self) -> std::ops::Range<u32> {
        0..self.order() as u32
    }
}

/// Parses the edge-list text format: one `u v` pair per line, blank lines
/// and `#` comments ignored. Without `declared_n` the order is one more than
/// the largest index mentioned.
pub fn parse_edge_list(text: &str, declared_n: Option<usize>) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| GraphError::Parse {
            line: i + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(parse_err(format!(
                "expected two vertex indices, found {} fields",
                fields.len()
            )));
        };
        let index = |s: &str| {
            s.parse::<u32>()
                .map_err(|e| parse_err(format!("bad vertex index {s:?}: {e}")))
        };
        edges.push((index(u)?, index(v)?));
    }
    let inferred = edges
        .iter()
        .map(|&(u, v)| u.max(v) as usize + 1)
        .max()
        .unwrap_or(0);
    Graph::from_edges(declared_n.unwrap_or(inferred), edges)
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_edge_list(s, None)
    }
}

/// BFS distances from `source`; unreachable vertices hold [`UNREACHED`].
pub fn bfs_distances(g: &Graph, source: u32) -> Vec<Distance> {
    let mut dist = vec![UNREACHED; g.order()];
    let mut queue = Vec::with_capacity(g.order());
    bfs_into(g, source, &mut dist, &mut queue);
    dist
}

/// BFS reusing caller buffers; returns the eccentricity reached.
fn bfs_into(g: &Graph, source: u32, dist: &mut [Distance], queue: &mut Vec<u32>) -> Distance {
    dist.fill(UNREACHED);
    queue.clear();
    dist[source as usize] = 0;
    queue.push(source);
    let mut head = 0;
    let mut ecc = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let next = dist[u as usize] + 1;
        for &w in g.neighbors(u) {
            if dist[w as usize] == UNREACHED {
                dist[w as usize] = next;
                ecc = next;
                queue.push(w);
            }
        }
    }
    ecc
}

pub fn is_connected(g: &Graph) -> bool {
    if g.order() == 0 {
        return false;
    }
    bfs_distances(g, 0).iter().all(|&d| d != UNREACHED)
}

fn require_connected(g: &Graph) -> Result<(), GraphError> {
    if g.order() == 0 {
        return Err(GraphError::Empty);
    }
    if is_connected(g) {
        Ok(())
    } else {
        Err(GraphError::Disconnected)
    }
}

/// `counts[k]` is the number of unordered pairs at distance `k`, for
/// `1 <= k <= diameter`. `counts[0]` is unused and kept at zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceDistribution {
    pub n: usize,
    pub diameter: usize,
    pub counts: Vec<u64>,
}

impl DistanceDistribution {
    /// `d(G, k)`; zero outside `1..=diameter`.
    pub fn pairs_at(&self, k: usize) -> u64 {
        if k == 0 {
            return 0;
        }
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn total_pairs(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn hosoya(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.counts.iter().copied())
    }

    pub fn wiener(&self) -> BigInt {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &c)| BigInt::from(k) * c)
            .sum()
    }
}

fn add_histograms(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// All-pairs BFS: ordered-pair histogram halved into unordered pair counts.
pub fn distance_distribution(g: &Graph) -> Result<DistanceDistribution, GraphError> {
    require_connected(g)?;
    let n = g.order();
    let ordered = g
        .vertices()
        .into_par_iter()
        .map_init(
            || (vec![UNREACHED; n], Vec::with_capacity(n)),
            |(dist, queue), s| {
                let ecc = bfs_into(g, s, dist, queue);
                let mut hist = vec![0u64; ecc as usize + 1];
                for &d in dist.iter() {
                    hist[d as usize] += 1;
                }
                hist
            },
        )
        .reduce(Vec::new, add_histograms);
    let counts: Vec<u64> = ordered
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            if k == 0 {
                return 0;
            }
            assert!(c % 2 == 0, "ordered pair count at distance {k} is odd: adjacency is not symmetric");
            c / 2
        })
        .collect();
    Ok(DistanceDistribution {
        n,
        diameter: counts.len() - 1,
        counts,
    })
}

/// `Σ_k d(G,k) t^k` from the BFS distribution.
pub fn hosoya_oracle(g: &Graph) -> Result<IntPolynomial, GraphError> {
    Ok(distance_distribution(g)?.hosoya())
}

/// Sum of distances over unordered pairs, from the BFS distribution.
pub fn wiener_oracle(g: &Graph) -> Result<BigInt, GraphError> {
    Ok(distance_distribution(g)?.wiener())
}

/// `½ Σ_{pairs} (d + d²)`, summed directly over every ordered pair and halved.
pub fn hyper_wiener_oracle(g: &Graph) -> Result<BigInt, GraphError> {
    require_connected(g)?;
    let n = g.order();
    let ordered: u128 = g
        .vertices()
        .into_par_iter()
        .map_init(
            || (vec![UNREACHED; n], Vec::with_capacity(n)),
            |(dist, queue), s| {
                bfs_into(g, s, dist, queue);
                dist.iter()
                    .map(|&d| {
                        let d = d as u128;
                        d + d * d
                    })
                    .sum::<u128>()
            },
        )
        .sum();
    // Each unordered pair is seen twice, and d + d² is always even.
    assert!(ordered % 4 == 0);
    Ok(BigInt::from(ordered / 4))
}

/// Which intersection number a rejection refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parameter {
    /// Neighbours one step closer to the reference vertex.
    C,
    /// Neighbours one step farther from the reference vertex.
    B,
}

/// Concrete evidence that a graph is not distance-regular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Rejection {
    /// `vertex` has a degree different from vertex 0.
    NotRegular {
        vertex: u32,
        degree: usize,
        expected: usize,
    },
    /// The eccentricity of `vertex` differs from that of vertex 0.
    EccentricityMismatch {
        vertex: u32,
        eccentricity: usize,
        expected: usize,
    },
    /// For the pair at distance `level`, `target` has `found` neighbours at
    /// distance `level ∓ 1` from `source` where vertex 0 established
    /// `expected`.
    NotDistanceRegular {
        source: u32,
        target: u32,
        level: usize,
        parameter: Parameter,
        expected: usize,
        found: usize,
    },
    /// A single vertex has no intersection array.
    Trivial,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NotRegular {
                vertex,
                degree,
                expected,
            } => write!(
                f,
                "NotRegular: vertex {vertex} has degree {degree}, vertex 0 has degree {expected}"
            ),
            Rejection::EccentricityMismatch {
                vertex,
                eccentricity,
                expected,
            } => write!(
                f,
                "NotDistanceRegular: vertex {vertex} has eccentricity {eccentricity}, vertex 0 has {expected}"
            ),
            Rejection::NotDistanceRegular {
                source,
                target,
                level,
                parameter,
                expected,
                found,
            } => {
                let name = match parameter {
                    Parameter::C => "c",
                    Parameter::B => "b",
                };
                write!(
                    f,
                    "NotDistanceRegular: pair ({source}, {target}) at distance {level} gives {name}_{level} = {found}, expected {expected}"
                )
            }
            Rejection::Trivial => f.write_str("single vertex: no intersection array"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DrgError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Rejected(Rejection),
}

/// `c[j]`/`b[j]` observed around one source, or the first deviation.
fn level_counts(
    g: &Graph,
    dist: &[Distance],
    source: u32,
    expected: Option<(&[usize], &[usize])>,
) -> Result<(Vec<usize>, Vec<usize>), Rejection> {
    let ecc = *dist.iter().max().unwrap() as usize;
    let mut c: Vec<Option<usize>> = vec![None; ecc + 1];
    let mut b: Vec<Option<usize>> = vec![None; ecc + 1];
    c[0] = Some(0);
    for u in g.vertices() {
        let level = dist[u as usize];
        let (mut closer, mut farther) = (0usize, 0usize);
        for &w in g.neighbors(u) {
            let dw = dist[w as usize];
            if dw + 1 == level {
                closer += 1;
            } else if dw == level + 1 {
                farther += 1;
            }
        }
        let level = level as usize;
        for (parameter, slot, found) in [
            (Parameter::C, &mut c[level], closer),
            (Parameter::B, &mut b[level], farther),
        ] {
            let reference = match expected {
                Some((ec, eb)) => Some(match parameter {
                    Parameter::C => ec[level],
                    Parameter::B => eb[level],
                }),
                None => *slot,
            };
            match reference {
                Some(e) if e != found => {
                    return Err(Rejection::NotDistanceRegular {
                        source,
                        target: u,
                        level,
                        parameter,
                        expected: e,
                        found,
                    })
                }
                _ => *slot = Some(found),
            }
        }
    }
    Ok((
        c.into_iter().map(Option::unwrap_or_default).collect(),
        b.into_iter().map(Option::unwrap_or_default).collect(),
    ))
}

/// Checks distance-regularity directly from the definition and extracts the
/// intersection array.
///
/// Vertex 0 fixes the reference degree, diameter and `c_j`, `b_j`; then every
/// ordered pair `(v, u)` is checked against them. The reported witness is the
/// first deviation in `(v, u)` order, independent of scheduling.
pub fn check_distance_regular(g: &Graph) -> Result<IntersectionArray, DrgError> {
    require_connected(g)?;
    let n = g.order();
    if n == 1 {
        return Err(DrgError::Rejected(Rejection::Trivial));
    }
    let degree = g.degree(0);
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != degree) {
        return Err(DrgError::Rejected(Rejection::NotRegular {
            vertex: v,
            degree: g.degree(v),
            expected: degree,
        }));
    }

    let reference = bfs_distances(g, 0);
    let diameter = *reference.iter().max().unwrap() as usize;
    let (c, b) = level_counts(g, &reference, 0, None).map_err(DrgError::Rejected)?;

    let witness = g
        .vertices()
        .into_par_iter()
        .skip(1)
        .map_init(
            || (vec![UNREACHED; n], Vec::with_capacity(n)),
            |(dist, queue), v| {
                let ecc = bfs_into(g, v, dist, queue) as usize;
                if ecc != diameter {
                    return Some(Rejection::EccentricityMismatch {
                        vertex: v,
                        eccentricity: ecc,
                        expected: diameter,
                    });
                }
                level_counts(g, dist, v, Some((&c, &b))).err()
            },
        )
        .find_first(Option::is_some)
        .flatten();
    if let Some(r) = witness {
        return Err(DrgError::Rejected(r));
    }

    let to_i64 = |v: &[usize]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
    let validated = IntersectionArray::validate(&to_i64(&b[..diameter]), &to_i64(&c[1..]))
        .expect("array read off a distance-regular graph is structurally valid");
    Ok(validated.array)
}

/// `|G_i(v)|` for `i = 0..=ecc(v)`.
pub fn sphere_counts(g: &Graph, v: u32) -> Vec<u64> {
    let dist = bfs_distances(g, v);
    let ecc = dist.iter().filter(|&&d| d != UNREACHED).max().copied().unwrap_or(0);
    let mut counts = vec![0u64; ecc as usize + 1];
    for d in dist.into_iter().filter(|&d| d != UNREACHED) {
        counts[d as usize] += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(u32, u32)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn path(n: u32) -> Graph {
        graph(n as usize, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    fn cycle(n: u32) -> Graph {
        graph(n as usize, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn complete(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        graph(n as usize, &edges)
    }

    // Outer 5-cycle, inner pentagram, spokes.
    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        graph(10, &edges)
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn construction_rejects_non_simple_input() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn adjacency_is_sorted_and_symmetric() {
        let g = graph(4, &[(3, 0), (2, 0), (1, 0), (2, 3)]);
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbors(3), &[0, 2]);
        assert_eq!(g.size(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3), (2, 3)]);
        assert!(g.has_edge(3, 2) && !g.has_edge(1, 2));
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs_distances(&path(3), 0), vec![0, 1, 2]);
        assert_eq!(bfs_distances(&complete(4), 2), vec![1, 1, 0, 1]);
        let d = bfs_distances(&petersen(), 4);
        assert_eq!(d.iter().filter(|&&x| x == 0).count(), 1);
        assert_eq!(d.iter().filter(|&&x| x == 1).count(), 3);
        assert_eq!(d.iter().filter(|&&x| x == 2).count(), 6);
        let split = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(bfs_distances(&split, 0), vec![0, 1, UNREACHED, UNREACHED]);
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&cycle(6)));
        assert!(!is_connected(&graph(4, &[(0, 1), (2, 3)])));
        assert!(!is_connected(&graph(0, &[])));
        assert!(is_connected(&graph(1, &[])));
    }

    #[test]
    fn distributions() {
        let d = distance_distribution(&cycle(5)).unwrap();
        assert_eq!((d.diameter, &d.counts[1..]), (2, &[5u64, 5][..]));
        let d = distance_distribution(&petersen()).unwrap();
        assert_eq!((d.diameter, &d.counts[1..]), (2, &[15u64, 30][..]));
        assert_eq!(
            distance_distribution(&graph(4, &[(0, 1), (2, 3)])),
            Err(GraphError::Disconnected)
        );
        assert_eq!(distance_distribution(&graph(0, &[])), Err(GraphError::Empty));
        let single = distance_distribution(&graph(1, &[])).unwrap();
        assert_eq!((single.diameter, single.total_pairs()), (0, 0));
    }

    #[test]
    fn oracle_polynomials() {
        assert_eq!(hosoya_oracle(&complete(5)).unwrap(), poly(&[0, 10]));
        assert_eq!(hosoya_oracle(&cycle(6)).unwrap(), poly(&[0, 6, 6, 3]));
        assert_eq!(hosoya_oracle(&path(4)).unwrap(), poly(&[0, 3, 2, 1]));
        assert_eq!(wiener_oracle(&petersen()).unwrap(), 75.into());
        assert_eq!(hyper_wiener_oracle(&petersen()).unwrap(), 105.into());
        for n in 2..8 {
            let pairs = BigInt::from(n * (n - 1) / 2);
            assert_eq!(wiener_oracle(&complete(n)).unwrap(), pairs);
            assert_eq!(hyper_wiener_oracle(&complete(n)).unwrap(), pairs);
        }
        // P_4: distances 1,1,1,2,2,3 -> ½(3*2 + 2*6 + 12)
        assert_eq!(hyper_wiener_oracle(&path(4)).unwrap(), 15.into());
    }

    #[test]
    fn extracts_arrays() {
        let a = check_distance_regular(&petersen()).unwrap();
        assert_eq!((a.b(), a.c()), (&[3u64, 2][..], &[1u64, 1][..]));
        let a = check_distance_regular(&cycle(6)).unwrap();
        assert_eq!((a.b(), a.c()), (&[2u64, 1, 1][..], &[1u64, 1, 2][..]));
        let a = check_distance_regular(&complete(2)).unwrap();
        assert_eq!((a.b(), a.c()), (&[1u64][..], &[1u64][..]));
    }

    #[test]
    fn rejects_path_as_irregular() {
        assert_eq!(
            check_distance_regular(&path(4)),
            Err(DrgError::Rejected(Rejection::NotRegular {
                vertex: 1,
                degree: 2,
                expected: 1
            }))
        );
    }

    #[test]
    fn rejects_regular_but_not_distance_regular() {
        // Triangular prism: 3-regular, but pairs at distance 1 differ in how
        // many common neighbours they have (triangle edges vs rungs).
        let prism = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]);
        match check_distance_regular(&prism) {
            Err(DrgError::Rejected(Rejection::NotDistanceRegular { .. })) => {}
            other => panic!("unexpected {other:?}"),
        }
        // Wagner graph: vertex-transitive with diameter 2, but non-adjacent
        // pairs have one or two common neighbours.
        let wagner = graph(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (0, 4), (1, 5), (2, 6), (3, 7)]);
        assert!(matches!(
            check_distance_regular(&wagner),
            Err(DrgError::Rejected(_))
        ));
    }

    #[test]
    fn rejects_disconnected_and_trivial() {
        assert_eq!(
            check_distance_regular(&graph(4, &[(0, 1), (2, 3)])),
            Err(DrgError::Graph(GraphError::Disconnected))
        );
        assert_eq!(
            check_distance_regular(&graph(1, &[])),
            Err(DrgError::Rejected(Rejection::Trivial))
        );
    }

    #[test]
    fn witness_is_deterministic() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]);
        let first = check_distance_regular(&g);
        for _ in 0..10 {
            assert_eq!(check_distance_regular(&g), first);
        }
    }

    #[test]
    fn edge_list_parsing() {
        let text = "# P_4\n0 1\n\n1 2\n  2 3  \n";
        let g = parse_edge_list(text, None).unwrap();
        assert_eq!(g, path(4));
        let g = parse_edge_list(text, Some(6)).unwrap();
        assert_eq!(g.order(), 6);
        assert!(matches!(
            parse_edge_list("0 1\n1\n", None),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 x\n", None),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 5\n", Some(3)),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert_eq!(parse_edge_list("", None).unwrap().order(), 0);
    }

    #[test]
    fn sphere_counts_on_petersen() {
        let g = petersen();
        for v in 0..10 {
            assert_eq!(sphere_counts(&g, v), vec![1, 3, 6]);
        }
    }
}
