//! Graph topology, the regularization incidence system and exact witness checks.
//!
//! Nodes are 0-based inside the library. The file format and the
//! `from_one_based` constructor use 1-based indices.
//!
//! Self-loops follow the adjacency-matrix convention: an undirected loop
//! `{i, i}` contributes its weight **once** to the strength of `i` (it is the
//! diagonal entry of a symmetric matrix), not twice as the usual graph degree
//! convention would have it. A directed loop `(i, i)` counts once towards the
//! out-strength and once towards the in-strength of `i`.

use std::fmt;

use num::{BigInt, One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar used for every weight and degree.
pub type Rational = num::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one node")]
    NoNodes,
    #[error("edge {edge} has endpoint {node} outside 1..={n}")]
    EndpointOutOfRange { edge: usize, node: usize, n: usize },
    #[error("edge {edge} duplicates edge {first} ({tail}, {head})")]
    DuplicateEdge {
        edge: usize,
        first: usize,
        tail: usize,
        head: usize,
    },
    #[error("expected {expected} weights, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

/// An unweighted graph with a fixed edge enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    directed: bool,
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from 0-based edge endpoints.
    pub fn new(
        directed: bool,
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoNodes);
        }
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        let mut seen = std::collections::HashMap::with_capacity(edges.len());
        for (l, &(a, b)) in edges.iter().enumerate() {
            for node in [a, b] {
                if node >= n {
                    return Err(GraphError::EndpointOutOfRange {
                        edge: l + 1,
                        node: node + 1,
                        n,
                    });
                }
            }
            let key = if directed { (a, b) } else { (a.min(b), a.max(b)) };
            if let Some(&first) = seen.get(&key) {
                return Err(GraphError::DuplicateEdge {
                    edge: l + 1,
                    first: first + 1,
                    tail: a + 1,
                    head: b + 1,
                });
            }
            seen.insert(key, l);
        }
        Ok(Self { directed, n, edges })
    }

    /// Builds a graph from 1-based edge endpoints.
    pub fn from_one_based(
        directed: bool,
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut shifted = Vec::new();
        for (l, (a, b)) in edges.into_iter().enumerate() {
            if a == 0 || b == 0 {
                return Err(GraphError::EndpointOutOfRange {
                    edge: l + 1,
                    node: 0,
                    n,
                });
            }
            shifted.push((a - 1, b - 1));
        }
        Self::new(directed, n, shifted)
    }

    pub fn directed(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        Self::from_one_based(true, n, edges)
    }

    pub fn undirected(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        Self::from_one_based(false, n, edges)
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// 0-based `(tail, head)` of every edge in enumeration order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, l: usize) -> (usize, usize) {
        self.edges[l]
    }

    /// Number of rows of the incidence system: `n` undirected, `2n` directed.
    pub fn incidence_rows(&self) -> usize {
        if self.directed {
            2 * self.n
        } else {
            self.n
        }
    }

    /// Graph with every edge reversed (transposed adjacency matrix).
    pub fn reversed(&self) -> Graph {
        Graph {
            directed: self.directed,
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    /// Directed graph of the symmetric adjacency matrix: `{i, j}` becomes
    /// `(i, j)` and `(j, i)`, a loop stays a single loop.
    pub fn to_directed(&self) -> Graph {
        if self.directed {
            return self.clone();
        }
        let mut edges = Vec::with_capacity(2 * self.edges.len());
        for &(a, b) in &self.edges {
            edges.push((a, b));
            if a != b {
                edges.push((b, a));
            }
        }
        Graph {
            directed: true,
            n: self.n,
            edges,
        }
    }

    /// Dense 0/1 adjacency matrix (symmetric for undirected graphs).
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut a = vec![vec![false; self.n]; self.n];
        for &(i, j) in &self.edges {
            a[i][j] = true;
            if !self.directed {
                a[j][i] = true;
            }
        }
        a
    }

    /// Out-degree and in-degree per node (undirected: both equal the
    /// matrix-convention degree, loops counted once).
    pub fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut out = vec![0; self.n];
        let mut inc = vec![0; self.n];
        for &(a, b) in &self.edges {
            if self.directed {
                out[a] += 1;
                inc[b] += 1;
            } else {
                out[a] += 1;
                if a != b {
                    out[b] += 1;
                }
            }
        }
        if !self.directed {
            inc.clone_from(&out);
        }
        (out, inc)
    }

    /// Neighbor lists ignoring direction, sorted and deduplicated.
    pub fn undirected_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            if a != b {
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.directed { "->" } else { "--" };
        write!(
            f,
            "{} graph, {} nodes: ",
            if self.directed { "directed" } else { "undirected" },
            self.n
        )?;
        for (l, &(a, b)) in self.edges.iter().enumerate() {
            if l > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{}{}", a + 1, sep, b + 1)?;
        }
        Ok(())
    }
}

/// The 0/1 matrix `B` of the system `B w = r e`, stored per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceSystem {
    rows: usize,
    columns: Vec<Vec<usize>>,
}

impl IncidenceSystem {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    /// Row indices holding a 1 in column `l`, ascending.
    pub fn column(&self, l: usize) -> &[usize] {
        &self.columns[l]
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.cols()]; self.rows];
        for (l, col) in self.columns.iter().enumerate() {
            for &i in col {
                m[i][l] = 1;
            }
        }
        m
    }

    /// `B · x` for any vector of length `cols`.
    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>, GraphError> {
        if x.len() != self.cols() {
            return Err(GraphError::LengthMismatch {
                expected: self.cols(),
                got: x.len(),
            });
        }
        let mut y = vec![Rational::zero(); self.rows];
        for (col, v) in self.columns.iter().zip(x) {
            if v.is_zero() {
                continue;
            }
            for &i in col {
                y[i] += v;
            }
        }
        Ok(y)
    }
}

pub fn build_incidence(g: &Graph) -> IncidenceSystem {
    let n = g.node_count();
    let columns = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            if g.is_directed() {
                vec![a, n + b]
            } else if a == b {
                vec![a]
            } else {
                vec![a.min(b), a.max(b)]
            }
        })
        .collect();
    IncidenceSystem {
        rows: g.incidence_rows(),
        columns,
    }
}

/// Edge weights aligned with the edge enumeration plus the degree `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    pub weights: Vec<Rational>,
    pub degree: Rational,
}

impl WeightAssignment {
    pub fn new(weights: Vec<Rational>, degree: Rational) -> Self {
        Self { weights, degree }
    }

    pub fn from_integers(weights: impl IntoIterator<Item = i64>, degree: i64) -> Self {
        Self {
            weights: weights.into_iter().map(int).collect(),
            degree: int(degree),
        }
    }

    /// All-ones weights with the given degree.
    pub fn uniform(m: usize, value: Rational, degree: Rational) -> Self {
        Self {
            weights: vec![value; m],
            degree,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.degree.is_integer() && self.weights.iter().all(|w| w.is_integer())
    }

    pub fn all_positive(&self) -> bool {
        self.weights.iter().all(|w| w.is_positive())
    }

    pub fn all_nonnegative(&self) -> bool {
        self.weights.iter().all(|w| !w.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(|w| w.is_zero())
    }

    /// Multiplies weights and degree by `c`.
    pub fn scaled(&self, c: &Rational) -> Self {
        Self {
            weights: self.weights.iter().map(|w| w * c).collect(),
            degree: &self.degree * c,
        }
    }

    /// Rescales to the smallest integer representative: clears denominators,
    /// then divides by the gcd of all numerators (degree included). The sign
    /// is left unchanged. The all-zero assignment is returned as is.
    pub fn normalized(&self) -> Self {
        let mut lcm = BigInt::one();
        for v in self.weights.iter().chain(std::iter::once(&self.degree)) {
            lcm = num::integer::lcm(lcm, v.denom().clone());
        }
        let mut gcd = BigInt::zero();
        for v in self.weights.iter().chain(std::iter::once(&self.degree)) {
            let scaled = v.numer() * (&lcm / v.denom());
            gcd = num::integer::gcd(gcd, scaled);
        }
        if gcd.is_zero() {
            return self.clone();
        }
        self.scaled(&Rational::new(lcm, gcd))
    }
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `B · w`: out-strengths then in-strengths for directed graphs, plain
/// strengths for undirected graphs.
pub fn strengths(g: &Graph, weights: &[Rational]) -> Result<Vec<Rational>, GraphError> {
    build_incidence(g).apply(weights)
}

/// `B w = r e` holds exactly (no sign or nonzero requirement).
pub fn satisfies_system(g: &Graph, w: &WeightAssignment) -> Result<bool, GraphError> {
    let s = strengths(g, &w.weights)?;
    Ok(s.iter().all(|v| *v == w.degree))
}

/// True iff `w` is a regularization witness: `B w = r e` exactly, `r > 0`
/// and `w ≠ 0`.
pub fn verify_assignment(g: &Graph, w: &WeightAssignment) -> Result<bool, GraphError> {
    if w.weights.len() != g.edge_count() {
        return Err(GraphError::LengthMismatch {
            expected: g.edge_count(),
            got: w.weights.len(),
        });
    }
    if !w.degree.is_positive() || w.is_zero() {
        return Ok(false);
    }
    satisfies_system(g, w)
}
