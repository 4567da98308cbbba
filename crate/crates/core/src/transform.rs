//! The bipartite counterpart `G*` of a graph and the structures read off it:
//! connected components, 2-colorings, alternating-path edge classes,
//! chainability and the block-diagonal canonical form.
//!
//! In `G*` every node `x` of the source graph is split into a white copy
//! (its out side, a matrix row) and a black copy (its in side, a matrix
//! column); the directed edge `(x, y)` becomes `{x_white, y_black}`.
//! Undirected graphs go through their symmetric adjacency matrix: `{i, j}`
//! yields the twin star edges `{i_white, j_black}` and `{j_white, i_black}`,
//! a loop `{i, i}` yields the single star edge `{i_white, i_black}`.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarEdge {
    /// Row (tail) node of the source graph.
    pub white: usize,
    /// Column (head) node of the source graph.
    pub black: usize,
    /// Index of the source edge this star edge comes from.
    pub source: usize,
}

#[derive(Debug, Clone)]
pub struct StarGraph {
    n: usize,
    source_directed: bool,
    edges: Vec<StarEdge>,
    twins: Vec<Option<usize>>,
    white_adj: Vec<Vec<(usize, usize)>>,
    black_adj: Vec<Vec<(usize, usize)>>,
}

impl StarGraph {
    /// Number of nodes of the source graph; `G*` has twice as many.
    pub fn source_nodes(&self) -> usize {
        self.n
    }

    pub fn source_directed(&self) -> bool {
        self.source_directed
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[StarEdge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> StarEdge {
        self.edges[e]
    }

    /// The other star edge produced by the same undirected source edge.
    pub fn twin(&self, e: usize) -> Option<usize> {
        self.twins[e]
    }

    /// `(black, star edge)` pairs of a white node, sorted by black node.
    pub fn white_neighbors(&self, white: usize) -> &[(usize, usize)] {
        &self.white_adj[white]
    }

    /// `(white, star edge)` pairs of a black node, sorted by white node.
    pub fn black_neighbors(&self, black: usize) -> &[(usize, usize)] {
        &self.black_adj[black]
    }

    /// Connected components of `G*`, isolated star nodes included, ordered
    /// by their smallest star node (whites are numbered before blacks).
    pub fn components(&self) -> Vec<StarComponent> {
        let n = self.n;
        let mut label = vec![usize::MAX; 2 * n];
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..2 * n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut comp = StarComponent::default();
            label[start] = id;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let neighbors = if v < n {
                    comp.whites.push(v);
                    &self.white_adj[v]
                } else {
                    comp.blacks.push(v - n);
                    &self.black_adj[v - n]
                };
                for &(u, e) in neighbors {
                    let u = if v < n { u + n } else { u };
                    if v < n {
                        comp.edges.push(e);
                    }
                    if label[u] == usize::MAX {
                        label[u] = id;
                        queue.push_back(u);
                    }
                }
            }
            comp.whites.sort_unstable();
            comp.blacks.sort_unstable();
            comp.edges.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// One connected component of `G*`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StarComponent {
    pub whites: Vec<usize>,
    pub blacks: Vec<usize>,
    /// Star edge indices, ascending.
    pub edges: Vec<usize>,
}

impl StarComponent {
    pub fn is_balanced(&self) -> bool {
        self.whites.len() == self.blacks.len()
    }
}

pub fn star_transform(g: &Graph) -> StarGraph {
    let n = g.node_count();
    let mut edges = Vec::with_capacity(if g.is_directed() { g.edge_count() } else { 2 * g.edge_count() });
    let mut twins = Vec::with_capacity(edges.capacity());
    for (l, &(a, b)) in g.edges().iter().enumerate() {
        edges.push(StarEdge {
            white: a,
            black: b,
            source: l,
        });
        if g.is_directed() || a == b {
            twins.push(None);
        } else {
            let k = edges.len() - 1;
            edges.push(StarEdge {
                white: b,
                black: a,
                source: l,
            });
            twins.push(Some(k + 1));
            twins.push(Some(k));
        }
    }
    let mut white_adj = vec![Vec::new(); n];
    let mut black_adj = vec![Vec::new(); n];
    for (e, se) in edges.iter().enumerate() {
        white_adj[se.white].push((se.black, e));
        black_adj[se.black].push((se.white, e));
    }
    for list in white_adj.iter_mut().chain(black_adj.iter_mut()) {
        list.sort_unstable();
    }
    StarGraph {
        n,
        source_directed: g.is_directed(),
        edges,
        twins,
        white_adj,
        black_adj,
    }
}

/// Connected components ignoring edge direction; isolated nodes are
/// singletons. Components are ordered by smallest node, nodes ascending.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let adj = g.undirected_neighbors();
    let mut seen = vec![false; g.node_count()];
    let mut comps = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..g.node_count() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// 2-coloring outcome for one connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentColoring {
    /// `u` holds the color class of the component's smallest node.
    Bipartite { u: Vec<usize>, w: Vec<usize> },
    /// `odd_cycle` lists the nodes of an odd closed walk; consecutive nodes
    /// are adjacent and the last node is adjacent to the first.
    NonBipartite { nodes: Vec<usize>, odd_cycle: Vec<usize> },
}

impl ComponentColoring {
    pub fn nodes(&self) -> Vec<usize> {
        match self {
            Self::Bipartite { u, w } => {
                let mut all: Vec<usize> = u.iter().chain(w).copied().collect();
                all.sort_unstable();
                all
            }
            Self::NonBipartite { nodes, .. } => nodes.clone(),
        }
    }

    pub fn is_balanced_bipartite(&self) -> bool {
        matches!(self, Self::Bipartite { u, w } if u.len() == w.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitePartition {
    pub components: Vec<ComponentColoring>,
}

impl BipartitePartition {
    pub fn is_bipartite(&self) -> bool {
        self.components
            .iter()
            .all(|c| matches!(c, ComponentColoring::Bipartite { .. }))
    }
}

/// Per-component 2-coloring by BFS from the smallest node, visiting
/// neighbors in ascending order. Edge direction is ignored.
pub fn bipartite_partition(g: &Graph) -> BipartitePartition {
    let adj = g.undirected_neighbors();
    let n = g.node_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        queue.push_back(start);
        let mut order = Vec::new();
        let mut conflict: Option<(usize, usize)> = None;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in &adj[v] {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    queue.push_back(u);
                } else if color[u] == color[v] && conflict.is_none() {
                    conflict = Some((v, u));
                }
            }
        }
        order.sort_unstable();
        let coloring = match conflict {
            None => {
                let (u, w): (Vec<usize>, Vec<usize>) = order.iter().partition(|&&v| color[v] == 0);
                ComponentColoring::Bipartite { u, w }
            }
            Some((a, b)) => ComponentColoring::NonBipartite {
                odd_cycle: odd_cycle(a, b, &parent, &depth),
                nodes: order,
            },
        };
        components.push(coloring);
    }
    BipartitePartition { components }
}

fn odd_cycle(a: usize, b: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    if a == b {
        return vec![a];
    }
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// One class of the alternating-path relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClass {
    /// Star edge indices (equal to source edge indices for directed graphs).
    pub edges: Vec<usize>,
    /// Nodes with positive out-degree inside the class.
    pub whites: Vec<usize>,
    /// Nodes with positive in-degree inside the class.
    pub blacks: Vec<usize>,
}

impl EdgeClass {
    pub fn is_balanced(&self) -> bool {
        self.whites.len() == self.blacks.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassPartition {
    pub classes: Vec<EdgeClass>,
}

/// Classes of the alternating-path relation, read off the edge-bearing
/// components of `G*`, ordered by smallest member edge.
pub fn edge_classes(g: &Graph) -> EdgeClassPartition {
    classes_of(&star_transform(g))
}

pub(crate) fn classes_of(sg: &StarGraph) -> EdgeClassPartition {
    let mut classes: Vec<EdgeClass> = sg
        .components()
        .into_iter()
        .filter(|c| !c.edges.is_empty())
        .map(|c| EdgeClass {
            edges: c.edges,
            whites: c.whites,
            blacks: c.blacks,
        })
        .collect();
    classes.sort_by_key(|c| c.edges[0]);
    EdgeClassPartition { classes }
}

/// A node whose matrix row or column is entirely zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("row {} of the adjacency matrix is zero (node {} has no out-edges)", .0 + 1, .0 + 1)]
    ZeroRow(usize),
    #[error("column {} of the adjacency matrix is zero (node {} has no in-edges)", .0 + 1, .0 + 1)]
    ZeroColumn(usize),
}

/// First zero row or column of the adjacency matrix, rows checked before
/// columns at each node.
pub fn zero_line(g: &Graph) -> Option<TransformError> {
    let (out, inc) = g.degrees();
    (0..g.node_count()).find_map(|v| {
        if out[v] == 0 {
            Some(TransformError::ZeroRow(v))
        } else if inc[v] == 0 {
            Some(TransformError::ZeroColumn(v))
        } else {
            None
        }
    })
}

/// Chainability of the adjacency matrix: no zero rows or columns and `G*`
/// connected.
pub fn is_chainable(g: &Graph) -> bool {
    let result = zero_line(g).is_none() && star_transform(g).components().len() == 1;
    #[cfg(debug_assertions)]
    if g.edge_count() <= 64 {
        debug_assert_eq!(result, crate::analysis::rook_chainable(&g.adjacency()));
    }
    result
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub rows: usize,
    pub cols: usize,
}

impl Block {
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

/// Row and column orderings making the adjacency matrix block diagonal with
/// chainable blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `row_perm[k]` is the original row placed at position `k`.
    pub row_perm: Vec<usize>,
    /// `col_perm[k]` is the original column placed at position `k`.
    pub col_perm: Vec<usize>,
    pub blocks: Vec<Block>,
}

impl CanonicalForm {
    pub fn all_square(&self) -> bool {
        self.blocks.iter().all(Block::is_square)
    }

    /// The adjacency matrix with rows and columns reordered.
    pub fn apply(&self, adjacency: &[Vec<bool>]) -> Vec<Vec<bool>> {
        self.row_perm
            .iter()
            .map(|&i| self.col_perm.iter().map(|&j| adjacency[i][j]).collect())
            .collect()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = |v: &[usize]| v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ");
        writeln!(f, "rows {}", one(&self.row_perm))?;
        writeln!(f, "cols {}", one(&self.col_perm))?;
        for b in &self.blocks {
            writeln!(f, "block {}x{}", b.rows, b.cols)?;
        }
        Ok(())
    }
}

/// Block-diagonal form with one chainable block per component of `G*`,
/// blocks ordered by smallest row, rows and columns in original order
/// within each block.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, TransformError> {
    if let Some(err) = zero_line(g) {
        return Err(err);
    }
    let mut comps = star_transform(g).components();
    comps.sort_by_key(|c| c.whites[0]);
    let mut form = CanonicalForm {
        row_perm: Vec::with_capacity(g.node_count()),
        col_perm: Vec::with_capacity(g.node_count()),
        blocks: Vec::with_capacity(comps.len()),
    };
    for c in comps {
        form.blocks.push(Block {
            rows: c.whites.len(),
            cols: c.blacks.len(),
        });
        form.row_perm.extend(c.whites);
        form.col_perm.extend(c.blacks);
    }
    Ok(form)
}
