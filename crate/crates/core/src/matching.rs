//! Maximum matchings on `G*` and the support / total support tests.
//!
//! A perfect matching of `G*` is a permutation matrix inside the adjacency
//! pattern, i.e. a spanning cycle forest of the source graph.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Graph, Rational, WeightAssignment};
use crate::transform::{star_transform, StarGraph};

const FREE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("matching covers {covered} of {total} white nodes; a perfect matching is required")]
    NotPerfect { covered: usize, total: usize },
}

/// A set of star edges, no two sharing an endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// Star edge indices, ascending.
    pub edges: Vec<usize>,
    n: usize,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Covers all `2n` star nodes.
    pub fn is_perfect(&self) -> bool {
        self.edges.len() == self.n
    }

    fn from_mates(white_mate: &[usize], n: usize) -> Self {
        let mut edges: Vec<usize> = white_mate.iter().copied().filter(|&e| e != FREE).collect();
        edges.sort_unstable();
        Self { edges, n }
    }
}

/// Matched star edge per white and per black node.
#[derive(Debug, Clone)]
struct Mates {
    white: Vec<usize>,
    black: Vec<usize>,
}

impl Mates {
    fn new(n: usize) -> Self {
        Self {
            white: vec![FREE; n],
            black: vec![FREE; n],
        }
    }

    fn set(&mut self, sg: &StarGraph, e: usize) {
        let se = sg.edge(e);
        self.white[se.white] = e;
        self.black[se.black] = e;
    }
}

/// Hopcroft–Karp on `G*`. Neighbor lists are sorted ascending and free
/// white nodes are processed in index order, so the result is
/// deterministic.
pub fn max_matching(sg: &StarGraph) -> Matching {
    let n = sg.source_nodes();
    let mut mates = Mates::new(n);
    let mut dist = vec![usize::MAX; n];
    let mut iter = vec![0usize; n];
    let mut queue = VecDeque::new();
    let mut stack: Vec<usize> = Vec::new();
    loop {
        // BFS layering from free whites.
        queue.clear();
        for u in 0..n {
            if mates.white[u] == FREE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut reachable_free = false;
        while let Some(u) = queue.pop_front() {
            for &(v, _) in sg.white_neighbors(u) {
                let e = mates.black[v];
                if e == FREE {
                    reachable_free = true;
                } else {
                    let w = sg.edge(e).white;
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        if !reachable_free {
            break;
        }
        // Layered DFS, iterative so long paths do not exhaust the call stack.
        iter.iter_mut().for_each(|i| *i = 0);
        for root in 0..n {
            if mates.white[root] != FREE {
                continue;
            }
            stack.clear();
            stack.push(root);
            while let Some(&u) = stack.last() {
                let adj = sg.white_neighbors(u);
                if iter[u] >= adj.len() {
                    dist[u] = usize::MAX;
                    stack.pop();
                    if let Some(&p) = stack.last() {
                        iter[p] += 1;
                    }
                    continue;
                }
                let (v, _) = adj[iter[u]];
                let e = mates.black[v];
                if e == FREE {
                    for &w in &stack {
                        let (_, edge) = sg.white_neighbors(w)[iter[w]];
                        mates.set(sg, edge);
                    }
                    stack.clear();
                    break;
                }
                let w = sg.edge(e).white;
                if dist[w] != usize::MAX && dist[w] == dist[u] + 1 {
                    stack.push(w);
                } else {
                    iter[u] += 1;
                }
            }
        }
    }
    Matching::from_mates(&mates.white, n)
}

/// A perfect matching containing star edge `forced`, obtained from the
/// perfect matching `base` by swapping in `forced` and repairing with a
/// single augmenting-path search. `None` when no perfect matching contains
/// `forced`.
pub fn perfect_matching_with(sg: &StarGraph, base: &Matching, forced: usize) -> Option<Matching> {
    assert!(base.is_perfect(), "warm start must be a perfect matching");
    if base.edges.binary_search(&forced).is_ok() {
        return Some(base.clone());
    }
    let n = sg.source_nodes();
    let mut mates = Mates::new(n);
    for &e in &base.edges {
        mates.set(sg, e);
    }
    let f = sg.edge(forced);
    let displaced_white = sg.edge(mates.black[f.black]).white;
    let displaced_black = sg.edge(mates.white[f.white]).black;
    mates.white[displaced_white] = FREE;
    mates.black[displaced_black] = FREE;
    mates.set(sg, forced);

    // Alternating DFS from the freed white to the freed black, never
    // touching the endpoints of the forced edge.
    let mut visited = vec![false; n];
    visited[f.white] = true;
    visited[displaced_white] = true;
    let mut stack: Vec<(usize, usize)> = vec![(displaced_white, 0)];
    let mut path: Vec<usize> = Vec::new();
    while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
        let adj = sg.white_neighbors(u);
        if *pos >= adj.len() {
            stack.pop();
            path.pop();
            continue;
        }
        let (v, e) = adj[*pos];
        *pos += 1;
        if v == f.black {
            continue;
        }
        if v == displaced_black {
            path.push(e);
            for &edge in &path {
                mates.set(sg, edge);
            }
            return Some(Matching::from_mates(&mates.white, n));
        }
        let w = sg.edge(mates.black[v]).white;
        if !visited[w] {
            visited[w] = true;
            path.push(e);
            stack.push((w, 0));
        }
    }
    None
}

/// The adjacency matrix contains a permutation matrix.
pub fn has_support(g: &Graph) -> bool {
    max_matching(&star_transform(g)).is_perfect()
}

/// Every entry of the (nonzero) adjacency matrix lies on a permutation
/// matrix inside the pattern.
pub fn has_total_support(g: &Graph) -> bool {
    total_support_matchings(&star_transform(g)).is_some()
}

/// One perfect matching per star edge, each containing that edge, or `None`
/// when the pattern lacks total support.
pub fn total_support_matchings(sg: &StarGraph) -> Option<Vec<Matching>> {
    if sg.edge_count() == 0 {
        return None;
    }
    let base = max_matching(sg);
    if !base.is_perfect() {
        return None;
    }
    (0..sg.edge_count())
        .map(|e| perfect_matching_with(sg, &base, e))
        .collect()
}

/// Source edges of a spanning cycle forest with their multiplicities: 1 for
/// directed graphs; for undirected graphs the entry of `Q = P + Pᵀ`, i.e. 2
/// for an edge matched in both directions or for a loop, 1 for a cycle edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleForest {
    /// `(source edge, multiplicity)`, ascending by edge.
    pub edges: Vec<(usize, u32)>,
    directed: bool,
}

impl CycleForest {
    pub fn edge_indices(&self) -> Vec<usize> {
        self.edges.iter().map(|&(e, _)| e).collect()
    }

    /// The forest as a 0/1 (directed, `r = 1`) or 0/1/2 (undirected,
    /// `r = 2`) weight assignment over `m` edges.
    pub fn to_weights(&self, m: usize) -> WeightAssignment {
        let mut weights = vec![Rational::from_integer(0.into()); m];
        for &(e, k) in &self.edges {
            weights[e] = Rational::from_integer(k.into());
        }
        let r = if self.directed { 1 } else { 2 };
        WeightAssignment::new(weights, Rational::from_integer(r.into()))
    }
}

pub fn matching_to_cycle_forest(sg: &StarGraph, m: &Matching) -> Result<CycleForest, MatchingError> {
    if !m.is_perfect() {
        return Err(MatchingError::NotPerfect {
            covered: m.len(),
            total: sg.source_nodes(),
        });
    }
    let mut mult = std::collections::BTreeMap::new();
    for &e in &m.edges {
        let se = sg.edge(e);
        let k = if !sg.source_directed() && se.white == se.black { 2 } else { 1 };
        *mult.entry(se.source).or_insert(0u32) += k;
    }
    Ok(CycleForest {
        edges: mult.into_iter().collect(),
        directed: sg.source_directed(),
    })
}
