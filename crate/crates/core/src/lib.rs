//! Regularizability of graphs.
//!
//! A graph is *regularizable* when its edges can be weighted so that every
//! node has the same nonzero strength `r`: with `B` the 0/1 incidence
//! matrix (`n × m` undirected, `2n × m` directed with out-rows above
//! in-rows), the weights `w` solve `B w = r e` with `w ≠ 0` and `r > 0`.
//! Depending on the signs allowed, graphs fall in a strict hierarchy:
//!
//! | class                       | weights          | structural test                      |
//! |-----------------------------|------------------|--------------------------------------|
//! | regular                     | `w = e`          | equal degrees                        |
//! | positively regularizable    | `w > 0`          | total support (every edge on a perfect matching of `G*`) |
//! | nonnegatively regularizable | `w ≥ 0`          | support (a perfect matching of `G*`) |
//! | arbitrarily regularizable   | any sign         | balanced components                  |
//!
//! [`classify::classify_graph`] returns the most specific class together
//! with an exact integer witness, or a certificate explaining why no
//! regularization exists. All arithmetic is exact.
//!
//! ```
//! use graphreg::{classify_graph, verify_assignment, Category, Graph};
//!
//! // Two claws joined by a bridge: bipartite with equal sides.
//! let g = Graph::undirected(6, [(1, 2), (1, 3), (1, 4), (4, 5), (4, 6)]).unwrap();
//! let verdict = classify_graph(&g);
//! assert_eq!(verdict.category, Category::ArbitrarilyRegularizable);
//! assert!(verify_assignment(&g, verdict.witness.as_ref().unwrap()).unwrap());
//! ```

pub mod analysis;
pub mod classify;
pub mod cli;
pub mod fixtures;
pub mod graph;
pub mod io;
mod linalg;
pub mod matching;
pub mod synth;
pub mod transform;

pub use analysis::{oracle_classify, vulnerability, VulnerabilityReport};
pub use classify::{classify_graph, is_arbitrarily_regularizable, is_regular, Category, Certificate, HierarchyVerdict};
pub use graph::{build_incidence, strengths, verify_assignment, Graph, GraphError, IncidenceSystem, Rational, WeightAssignment};
pub use matching::{has_support, has_total_support, max_matching, CycleForest, Matching};
pub use synth::{kernel_witness, synth_arbitrary, synth_nonnegative, synth_positive, LinearSolveReport, SynthError};
pub use transform::{canonical_form, edge_classes, is_chainable, star_transform, CanonicalForm, EdgeClassPartition, StarGraph};
