//! Placement of a graph in the regularization hierarchy.
//!
//! The checks run from the strongest class down: regular, positively
//! regularizable (total support), nonnegatively regularizable (support),
//! arbitrarily regularizable (balanced components). The first class that
//! holds is reported together with a witness built by [`crate::synth`].

use std::fmt;
use std::str::FromStr;

use num::One;
use serde::Serialize;

use crate::graph::{int, Graph, WeightAssignment};
use crate::matching::{has_support, has_total_support};
use crate::synth::{synth_arbitrary, synth_nonnegative, synth_positive, LinearSolveReport};
use crate::transform::{bipartite_partition, classes_of, star_transform, zero_line, ComponentColoring, TransformError};

/// Hierarchy levels, ordered from weakest to strongest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Category {
    NotRegularizable,
    ArbitrarilyRegularizable,
    NonnegativelyRegularizable,
    PositivelyRegularizable,
    Regular,
}

impl Category {
    pub const ALL: [Category; 5] = [
        Category::NotRegularizable,
        Category::ArbitrarilyRegularizable,
        Category::NonnegativelyRegularizable,
        Category::PositivelyRegularizable,
        Category::Regular,
    ];

    /// Short name used in files and on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            Category::NotRegularizable => "none",
            Category::ArbitrarilyRegularizable => "arbitrary",
            Category::NonnegativelyRegularizable => "nonnegative",
            Category::PositivelyRegularizable => "positive",
            Category::Regular => "regular",
        }
    }

    /// `self` is at least as strong as `other`.
    pub fn implies(self, other: Category) -> bool {
        self >= other
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Category::NotRegularizable => "not regularizable",
            Category::ArbitrarilyRegularizable => "arbitrarily regularizable",
            Category::NonnegativelyRegularizable => "nonnegatively regularizable",
            Category::PositivelyRegularizable => "positively regularizable",
            Category::Regular => "regular",
        };
        f.write_str(s)
    }
}

impl FromStr for Category {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Category::ALL
            .into_iter()
            .find(|c| c.short_name() == s)
            .ok_or_else(|| format!("unknown class `{s}`"))
    }
}

/// Why a graph admits no regularization with `r > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Node without edges: its row and column are zero.
    IsolatedNode { node: usize },
    /// Directed node without in-edges (zero column).
    SourceNode { node: usize },
    /// Directed node without out-edges (zero row).
    SinkNode { node: usize },
    /// Undirected bipartite component whose sides differ in size.
    UnbalancedBipartite { u: Vec<usize>, w: Vec<usize> },
    /// Directed alternating-path class whose white and black node counts
    /// differ.
    UnbalancedClass {
        edges: Vec<usize>,
        whites: Vec<usize>,
        blacks: Vec<usize>,
    },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",");
        match self {
            Certificate::IsolatedNode { node } => write!(f, "node {} is isolated", node + 1),
            Certificate::SourceNode { node } => write!(f, "node {} is a source (no in-edges)", node + 1),
            Certificate::SinkNode { node } => write!(f, "node {} is a sink (no out-edges)", node + 1),
            Certificate::UnbalancedBipartite { u, w } => write!(
                f,
                "bipartite component with unequal sides |U|={} {{{}}} and |W|={} {{{}}}",
                u.len(),
                list(u),
                w.len(),
                list(w)
            ),
            Certificate::UnbalancedClass { edges, whites, blacks } => write!(
                f,
                "edge class of {} edges with {} white nodes {{{}}} and {} black nodes {{{}}}",
                edges.len(),
                whites.len(),
                list(whites),
                blacks.len(),
                list(blacks)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HierarchyVerdict {
    pub category: Category,
    pub witness: Option<WeightAssignment>,
    pub certificate: Option<Certificate>,
    /// Present when the witness came from the exact linear solve.
    pub solve_report: Option<LinearSolveReport>,
}

/// Degree `r` when the unit weighting solves the system with `r > 0`.
pub fn regular_degree(g: &Graph) -> Option<usize> {
    let (out, inc) = g.degrees();
    let r = out[0];
    (r > 0 && out.iter().chain(&inc).all(|&d| d == r)).then_some(r)
}

pub fn is_regular(g: &Graph) -> bool {
    regular_degree(g).is_some()
}

/// Structural test in `O(n + m)`: undirected components must be
/// non-bipartite or balanced bipartite (no isolated nodes); directed graphs
/// must have no sources or sinks and only balanced classes.
pub fn arbitrary_regularizability(g: &Graph) -> Result<(), Certificate> {
    if g.is_directed() {
        let (out, inc) = g.degrees();
        for v in 0..g.node_count() {
            match (out[v], inc[v]) {
                (0, 0) => return Err(Certificate::IsolatedNode { node: v }),
                (_, 0) => return Err(Certificate::SourceNode { node: v }),
                (0, _) => return Err(Certificate::SinkNode { node: v }),
                _ => {}
            }
        }
        for class in classes_of(&star_transform(g)).classes {
            if !class.is_balanced() {
                return Err(Certificate::UnbalancedClass {
                    edges: class.edges,
                    whites: class.whites,
                    blacks: class.blacks,
                });
            }
        }
        Ok(())
    } else {
        for comp in bipartite_partition(g).components {
            if let ComponentColoring::Bipartite { u, w } = comp {
                if w.is_empty() {
                    return Err(Certificate::IsolatedNode { node: u[0] });
                }
                if u.len() != w.len() {
                    return Err(Certificate::UnbalancedBipartite { u, w });
                }
            }
        }
        Ok(())
    }
}

pub fn is_arbitrarily_regularizable(g: &Graph) -> bool {
    arbitrary_regularizability(g).is_ok()
}

/// Certificate derived from a zero row or column of the adjacency matrix.
pub fn zero_line_certificate(g: &Graph) -> Option<Certificate> {
    let (out, inc) = g.degrees();
    zero_line(g).map(|z| {
        let v = match z {
            TransformError::ZeroRow(v) | TransformError::ZeroColumn(v) => v,
        };
        if out[v] == 0 && inc[v] == 0 {
            Certificate::IsolatedNode { node: v }
        } else if out[v] == 0 {
            Certificate::SinkNode { node: v }
        } else {
            Certificate::SourceNode { node: v }
        }
    })
}

/// Most specific hierarchy class with a witness or certificate.
pub fn classify_graph(g: &Graph) -> HierarchyVerdict {
    let verdict = |category, witness, solve_report| HierarchyVerdict {
        category,
        witness: Some(witness),
        certificate: None,
        solve_report,
    };
    if let Some(r) = regular_degree(g) {
        let w = WeightAssignment::uniform(g.edge_count(), num::BigRational::one(), int(r as i64));
        return verdict(Category::Regular, w, None);
    }
    if has_total_support(g) {
        let w = synth_positive(g).expect("total support was just established");
        return verdict(Category::PositivelyRegularizable, w, None);
    }
    if has_support(g) {
        let w = synth_nonnegative(g).expect("support was just established").normalized();
        return verdict(Category::NonnegativelyRegularizable, w, None);
    }
    match arbitrary_regularizability(g) {
        Ok(()) => {
            let (w, report) = synth_arbitrary(g).expect("balance was just established");
            verdict(Category::ArbitrarilyRegularizable, w, Some(report))
        }
        Err(cert) => HierarchyVerdict {
            category: Category::NotRegularizable,
            witness: None,
            certificate: Some(cert),
            solve_report: None,
        },
    }
}

/// Category only, without synthesizing a witness.
pub fn category_of(g: &Graph) -> Category {
    if is_regular(g) {
        Category::Regular
    } else if has_total_support(g) {
        Category::PositivelyRegularizable
    } else if has_support(g) {
        Category::NonnegativelyRegularizable
    } else if is_arbitrarily_regularizable(g) {
        Category::ArbitrarilyRegularizable
    } else {
        Category::NotRegularizable
    }
}

impl HierarchyVerdict {
    /// Witness degree, when present.
    pub fn degree(&self) -> Option<&num::BigRational> {
        self.witness.as_ref().map(|w| &w.degree)
    }

    pub fn is_regularizable(&self) -> bool {
        self.category != Category::NotRegularizable
    }

    /// The witness has the sign pattern its category requires.
    pub fn witness_matches_category(&self) -> bool {
        let Some(w) = &self.witness else {
            return self.category == Category::NotRegularizable;
        };
        match self.category {
            Category::Regular => w.weights.iter().all(|x| x.is_one()),
            Category::PositivelyRegularizable => w.all_positive(),
            Category::NonnegativelyRegularizable => w.all_nonnegative(),
            Category::ArbitrarilyRegularizable => !w.is_zero(),
            Category::NotRegularizable => false,
        }
    }
}
