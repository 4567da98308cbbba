//! Construction of explicit weight witnesses.
//!
//! * positive: the sum of one perfect matching (permutation matrix) per
//!   edge of `G*`, so every edge receives a positive integer weight;
//! * nonnegative: a single spanning cycle forest with 0/1 weights (0/1/2
//!   and `r = 2` for undirected graphs);
//! * arbitrary: an exact solve of `B w = r e` on each component, using a
//!   nonsingular square submatrix `M` picked greedily in edge order;
//! * kernel: a nonzero solution of `B w = 0` for non-regularizable graphs
//!   that contain a cycle.

use num::{BigInt, One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::classify::{arbitrary_regularizability, Certificate};
use crate::graph::{build_incidence, int, satisfies_system, Graph, Rational, WeightAssignment};
use crate::linalg::{abs_det, solve_square, EchelonBasis};
use crate::matching::{matching_to_cycle_forest, max_matching, total_support_matchings};
use crate::transform::{bipartite_partition, star_transform, ComponentColoring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("the graph has no total support: some edge lies on no spanning cycle forest")]
    NoTotalSupport,
    #[error("the graph has no support: there is no spanning cycle forest")]
    NoSupport,
    #[error("the graph is not arbitrarily regularizable: {0}")]
    NotArbitrarilyRegularizable(Certificate),
    #[error("the graph is arbitrarily regularizable; kernel witnesses are only defined for non-regularizable graphs")]
    ArbitrarilyRegularizable,
    #[error("the incidence columns are independent (acyclic): only the trivial solution w = 0, r = 0 exists")]
    AcyclicOnlyTrivial,
}

/// Details of the exact solve behind an arbitrary witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearSolveReport {
    /// Edge indices whose columns form the nonsingular submatrix `M`.
    pub pivot_columns: Vec<usize>,
    /// `|det(M)|` of the block-diagonal `M` (product over components).
    #[serde(serialize_with = "crate::io::serialize_display")]
    pub det_magnitude: BigInt,
    /// Degree of the normalized witness relative to the solve at `r = 1`.
    #[serde(serialize_with = "crate::io::serialize_display")]
    pub scale: Rational,
}

/// Positive integer witness built from perfect matchings of `G*`.
pub fn synth_positive(g: &Graph) -> Result<WeightAssignment, SynthError> {
    let sg = star_transform(g);
    let matchings = total_support_matchings(&sg).ok_or(SynthError::NoTotalSupport)?;
    let m = g.edge_count();
    let mut total = WeightAssignment::new(vec![Rational::zero(); m], Rational::zero());
    for mm in &matchings {
        let forest = matching_to_cycle_forest(&sg, mm).expect("matchings are perfect");
        let w = forest.to_weights(m);
        for (acc, x) in total.weights.iter_mut().zip(w.weights) {
            *acc += x;
        }
        total.degree += w.degree;
    }
    let total = total.normalized();
    debug_assert!(total.all_positive());
    Ok(total)
}

/// Spanning cycle forest witness: weights in {0, 1} with `r = 1` for
/// directed graphs, weights in {0, 1, 2} with `r = 2` for undirected ones.
pub fn synth_nonnegative(g: &Graph) -> Result<WeightAssignment, SynthError> {
    let sg = star_transform(g);
    let mm = max_matching(&sg);
    let forest = matching_to_cycle_forest(&sg, &mm).map_err(|_| SynthError::NoSupport)?;
    Ok(forest.to_weights(g.edge_count()))
}

/// Rows and columns of `B` belonging to one component, with the separating
/// vector (aligned with `rows`) when the component is bipartite.
struct ComponentSystem {
    rows: Vec<usize>,
    cols: Vec<usize>,
    separating: Option<Vec<i8>>,
}

fn component_systems(g: &Graph) -> Vec<ComponentSystem> {
    let n = g.node_count();
    if g.is_directed() {
        star_transform(g)
            .components()
            .into_iter()
            .map(|c| {
                let mut rows = c.whites.clone();
                rows.extend(c.blacks.iter().map(|b| n + b));
                let mut separating = vec![1i8; c.whites.len()];
                separating.extend(std::iter::repeat_n(-1, c.blacks.len()));
                ComponentSystem {
                    rows,
                    cols: c.edges,
                    separating: Some(separating),
                }
            })
            .collect()
    } else {
        let mut comp_of = vec![0usize; n];
        let colorings = bipartite_partition(g).components;
        let mut systems: Vec<ComponentSystem> = colorings
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let rows = c.nodes();
                for &v in &rows {
                    comp_of[v] = k;
                }
                let separating = match c {
                    ComponentColoring::Bipartite { u, .. } => {
                        Some(rows.iter().map(|v| if u.binary_search(v).is_ok() { 1 } else { -1 }).collect())
                    }
                    ComponentColoring::NonBipartite { .. } => None,
                };
                ComponentSystem {
                    rows,
                    cols: Vec::new(),
                    separating,
                }
            })
            .collect();
        for (l, &(a, _)) in g.edges().iter().enumerate() {
            systems[comp_of[a]].cols.push(l);
        }
        systems
    }
}

/// Integer witness from an exact solve of `B w = r e`, component by
/// component, normalized to the smallest positive integer degree.
pub fn synth_arbitrary(g: &Graph) -> Result<(WeightAssignment, LinearSolveReport), SynthError> {
    arbitrary_regularizability(g).map_err(SynthError::NotArbitrarilyRegularizable)?;
    let b = build_incidence(g);
    let mut weights = vec![Rational::zero(); g.edge_count()];
    let mut pivots = Vec::new();
    let mut det = BigInt::one();

    for sys in component_systems(g) {
        let local: std::collections::HashMap<usize, usize> =
            sys.rows.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        if let Some(s) = &sys.separating {
            // sᵀB = 0 on the component: every column meets one row of each side.
            for &l in &sys.cols {
                let total: i32 = b.column(l).iter().map(|r| s[local[r]] as i32).sum();
                assert_eq!(total, 0, "separating vector must annihilate column {l}");
            }
        }
        // Bipartite components have rank one less than their row count; the
        // highest row is dropped and recovered by the separating vector.
        let used = if sys.separating.is_some() {
            sys.rows.len() - 1
        } else {
            sys.rows.len()
        };
        let column_vec = |l: usize| {
            let mut v = vec![Rational::zero(); used];
            for r in b.column(l) {
                let k = local[r];
                if k < used {
                    v[k] = Rational::one();
                }
            }
            v
        };
        let mut basis = EchelonBasis::default();
        let mut chosen = Vec::with_capacity(used);
        for &l in &sys.cols {
            if basis.rank() == used {
                break;
            }
            if basis.insert(column_vec(l)) {
                chosen.push(l);
            }
        }
        assert_eq!(chosen.len(), used, "component incidence must have full row rank");
        if used == 0 {
            continue;
        }
        // m is row-major: m[row][k] = column chosen[k] at local row.
        let cols: Vec<Vec<Rational>> = chosen.iter().map(|&l| column_vec(l)).collect();
        let m: Vec<Vec<Rational>> = (0..used).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let (x, d) = solve_square(m, vec![Rational::one(); used]).expect("selected columns are independent");
        det *= abs_det(&d);
        for (&l, v) in chosen.iter().zip(x) {
            weights[l] = v;
        }
        pivots.extend(chosen);
    }
    pivots.sort_unstable();

    let raw = WeightAssignment::new(weights, Rational::one());
    assert!(
        satisfies_system(g, &raw).expect("lengths agree"),
        "dropped rows must be satisfied by the separating-vector argument"
    );
    let normalized = raw.normalized();
    let report = LinearSolveReport {
        pivot_columns: pivots,
        det_magnitude: det,
        scale: normalized.degree.clone(),
    };
    Ok((normalized, report))
}

/// A nonzero integer solution of `B w = 0` (so `r = 0`): the first column
/// of `B`, in edge order, that depends on earlier ones, minus its
/// expression in those columns. The first nonzero entry is positive and the
/// entries have gcd 1.
pub fn kernel_witness(g: &Graph) -> Result<WeightAssignment, SynthError> {
    if arbitrary_regularizability(g).is_ok() {
        return Err(SynthError::ArbitrarilyRegularizable);
    }
    let b = build_incidence(g);
    let m = g.edge_count();
    let rows = b.rows();
    // (pivot, reduced vector, combination of original columns)
    let mut basis: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
    for l in 0..m {
        let mut v = vec![Rational::zero(); rows];
        for &r in b.column(l) {
            v[r] = Rational::one();
        }
        let mut combo = vec![Rational::zero(); m];
        combo[l] = Rational::one();
        for (p, bv, bc) in &basis {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, y) in v.iter_mut().zip(bv) {
                *x -= &c * y;
            }
            for (x, y) in combo.iter_mut().zip(bc) {
                *x -= &c * y;
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                let inv = v[p].recip();
                v.iter_mut().for_each(|x| *x *= &inv);
                combo.iter_mut().for_each(|x| *x *= &inv);
                basis.push((p, v, combo));
            }
            None => {
                let mut w = WeightAssignment::new(combo, Rational::zero()).normalized();
                if w.weights.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                    w = w.scaled(&int(-1));
                }
                return Ok(w);
            }
        }
    }
    Err(SynthError::AcyclicOnlyTrivial)
}
