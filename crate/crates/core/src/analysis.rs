//! Brute-force oracles for desk-scale instances.
//!
//! Everything here is deliberately independent of the structural routes in
//! [`crate::classify`]: the hierarchy oracle enumerates permutation matrices
//! and solves the incidence system by Gauss–Jordan elimination, and the
//! chainability oracle walks rook moves over the matrix entries.

use std::collections::VecDeque;

use num::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::classify::{Category, HierarchyVerdict};
use crate::graph::{build_incidence, int, Graph, Rational, WeightAssignment};

/// Default node cap for [`vulnerability`].
pub const VULNERABILITY_MAX_N: usize = 20;
pub const ORACLE_MAX_DIRECTED: usize = 8;
pub const ORACLE_MAX_UNDIRECTED: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("{n} nodes exceeds the enumeration cap of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("vulnerability is defined for undirected graphs only")]
    Directed,
    #[error("every node carries a loop; there is no nonempty independent set")]
    NoIndependentSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VulnerabilityReport {
    /// `max |S| - |N(S)|` over nonempty independent sets `S`.
    pub value: i64,
    /// Lexicographically smallest maximizing set (0-based, ascending).
    pub witness: Vec<usize>,
    pub neighborhood: Vec<usize>,
}

/// Exact vulnerability by enumerating independent sets. A node with a
/// loop is adjacent to itself and never belongs to an independent set.
pub fn vulnerability(g: &Graph, max_n: usize) -> Result<VulnerabilityReport, AnalysisError> {
    if g.is_directed() {
        return Err(AnalysisError::Directed);
    }
    let n = g.node_count();
    if n > max_n || n > 63 {
        return Err(AnalysisError::TooLarge { n, max: max_n.min(63) });
    }
    let mut adj = vec![0u64; n];
    for &(a, b) in g.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }

    struct Search<'a> {
        adj: &'a [u64],
        best: Option<(i64, u64, u64)>,
    }
    impl Search<'_> {
        fn visit(&mut self, start: usize, set: u64, nbhd: u64) {
            for v in start..self.adj.len() {
                let bit = 1u64 << v;
                if self.adj[v] & bit != 0 || nbhd & bit != 0 {
                    continue;
                }
                let set = set | bit;
                let nbhd = nbhd | self.adj[v];
                let value = set.count_ones() as i64 - nbhd.count_ones() as i64;
                if self.best.is_none_or(|(b, _, _)| value > b) {
                    self.best = Some((value, set, nbhd));
                }
                self.visit(v + 1, set, nbhd);
            }
        }
    }

    let mut search = Search { adj: &adj, best: None };
    search.visit(0, 0, 0);
    let (value, set, nbhd) = search.best.ok_or(AnalysisError::NoIndependentSet)?;
    let bits = |mask: u64| (0..n).filter(|&v| mask >> v & 1 == 1).collect();
    Ok(VulnerabilityReport {
        value,
        witness: bits(set),
        neighborhood: bits(nbhd),
    })
}

/// Chainability by rook moves: no zero rows or columns, and every nonzero
/// entry reachable from every other by moves along rows and columns.
pub fn rook_chainable(matrix: &[Vec<bool>]) -> bool {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let entries: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (0..cols).filter(move |&j| matrix[i][j]).map(move |j| (i, j)))
        .collect();
    if entries.is_empty() {
        return false;
    }
    if (0..rows).any(|i| !matrix[i].iter().any(|&x| x)) || (0..cols).any(|j| !(0..rows).any(|i| matrix[i][j])) {
        return false;
    }
    let mut seen = vec![false; entries.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(k) = queue.pop_front() {
        let (i, j) = entries[k];
        for (t, &(a, b)) in entries.iter().enumerate() {
            if !seen[t] && (a == i || b == j) {
                seen[t] = true;
                reached += 1;
                queue.push_back(t);
            }
        }
    }
    reached == entries.len()
}

/// Every permutation `σ` with `(i, σ(i))` inside the pattern, in
/// lexicographic order.
pub fn pattern_permutations(pattern: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn extend(pattern: &[Vec<bool>], row: usize, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = pattern.len();
        if row == n {
            out.push(cur.clone());
            return;
        }
        for j in 0..n {
            if !used[j] && pattern[row][j] {
                used[j] = true;
                cur.push(j);
                extend(pattern, row + 1, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(pattern, 0, &mut vec![false; pattern.len()], &mut Vec::new(), &mut out);
    out
}

/// Gauss–Jordan on the augmented system `[a | b]`. Returns a solution with
/// free variables set to zero, or `None` when `b` is outside the column
/// space of `a` (`rank(a) < rank([a | b])`).
pub fn solve_consistent(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].recip();
        aug[r].iter_mut().for_each(|x| *x *= &inv);
        for i in 0..rows {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for k in c..=cols {
                    let d = &f * &aug[r][k];
                    aug[i][k] -= d;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if aug[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[i][cols].clone();
    }
    Some(x)
}

/// Weights induced by a permutation inside the pattern: 1 per used edge
/// (`r = 1`) for directed graphs; `p_ij + p_ji` per edge and `2 p_ii` per
/// loop (`r = 2`) for undirected graphs.
fn permutation_weights(g: &Graph, perm: &[usize]) -> WeightAssignment {
    let weights = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let k = if g.is_directed() {
                (perm[a] == b) as i64
            } else if a == b {
                2 * (perm[a] == a) as i64
            } else {
                (perm[a] == b) as i64 + (perm[b] == a) as i64
            };
            int(k)
        })
        .collect();
    WeightAssignment::new(weights, int(if g.is_directed() { 1 } else { 2 }))
}

/// Hierarchy class by brute force: support and total support from all
/// permutation matrices inside the adjacency pattern, arbitrary
/// regularizability from consistency of `B w = e`, regularity from degrees.
pub fn oracle_classify(g: &Graph) -> Result<HierarchyVerdict, AnalysisError> {
    let n = g.node_count();
    let max = if g.is_directed() { ORACLE_MAX_DIRECTED } else { ORACLE_MAX_UNDIRECTED };
    if n > max {
        return Err(AnalysisError::TooLarge { n, max });
    }
    let done = |category, witness| {
        Ok(HierarchyVerdict {
            category,
            witness: Some(witness),
            certificate: None,
            solve_report: None,
        })
    };

    let b = build_incidence(g);
    let dense: Vec<Vec<Rational>> = b
        .to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(|x| int(x as i64)).collect())
        .collect();
    let ones = WeightAssignment::uniform(g.edge_count(), Rational::one(), Rational::zero());
    let unit_strengths = b.apply(&ones.weights).expect("lengths agree");
    if unit_strengths[0].is_positive() && unit_strengths.iter().all(|s| *s == unit_strengths[0]) {
        let degree = unit_strengths[0].clone();
        return done(Category::Regular, WeightAssignment { degree, ..ones });
    }

    let perms = pattern_permutations(&g.adjacency());
    if !perms.is_empty() {
        let mut total = WeightAssignment::uniform(g.edge_count(), Rational::zero(), Rational::zero());
        for p in &perms {
            let w = permutation_weights(g, p);
            for (acc, x) in total.weights.iter_mut().zip(&w.weights) {
                *acc += x;
            }
            total.degree += w.degree;
        }
        if g.edge_count() > 0 && total.all_positive() {
            return done(Category::PositivelyRegularizable, total);
        }
        return done(Category::NonnegativelyRegularizable, permutation_weights(g, &perms[0]));
    }

    let rhs = vec![Rational::one(); b.rows()];
    if let Some(x) = solve_consistent(&dense, &rhs) {
        return done(Category::ArbitrarilyRegularizable, WeightAssignment::new(x, Rational::one()));
    }
    Ok(HierarchyVerdict {
        category: Category::NotRegularizable,
        witness: None,
        certificate: None,
        solve_report: None,
    })
}
