//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use graphreg::analysis::rook_chainable;
use graphreg::classify::is_arbitrarily_regularizable;
use graphreg::fixtures::{self, hierarchy_fixtures};
use graphreg::graph::int;
use graphreg::synth::{synth_arbitrary, synth_nonnegative, synth_positive};
use graphreg::{
    canonical_form, classify_graph, has_support, is_chainable, kernel_witness, oracle_classify, strengths,
    verify_assignment, vulnerability, Category, Graph, WeightAssignment,
};
use num::{BigInt, Integer, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < budget, || format!("{what} took {elapsed:?}, budget {budget:?}"))
}

fn c1_hierarchy_fixtures() -> Outcome {
    let t = Instant::now();
    for f in hierarchy_fixtures() {
        let got = classify_graph(&f.graph).category;
        ensure(got == f.expected, || format!("{}: expected {}, got {}", f.name, f.expected, got))?;
    }
    within(t.elapsed(), Duration::from_secs(1), "classification")?;
    Ok(format!("8 fixtures in {:?}", t.elapsed()))
}

fn c2_witness_validity() -> Outcome {
    for f in hierarchy_fixtures() {
        let v = classify_graph(&f.graph);
        if f.expected == Category::NotRegularizable {
            ensure(v.witness.is_none() && v.certificate.is_some(), || {
                format!("{}: expected a certificate and no witness", f.name)
            })?;
            continue;
        }
        let w = v.witness.as_ref().ok_or_else(|| format!("{}: no witness", f.name))?;
        ensure(verify_assignment(&f.graph, w).unwrap(), || format!("{}: witness fails", f.name))?;
        ensure(v.witness_matches_category(), || format!("{}: wrong sign pattern", f.name))?;
    }
    // All ones except -1 on edge (1,3) of the directed top-right graph.
    let g = fixtures::directed_loops_without_forest();
    let idx = g.edges().iter().position(|&e| e == (0, 2)).unwrap();
    let mut weights = vec![1i64; g.edge_count()];
    weights[idx] = -1;
    let w = WeightAssignment::from_integers(weights, 1);
    ensure(verify_assignment(&g, &w).unwrap(), || "stated vector fails".into())?;
    Ok("all regularizable fixtures verified; stated (1,3) = -1 vector verifies with r = 1".into())
}

fn c3_stated_vectors() -> Outcome {
    let chair = fixtures::chair();
    let kernel: Vec<_> = [1, -1, 1, -1, 0].into_iter().map(int).collect();
    let s = strengths(&chair, &kernel).unwrap();
    ensure(s.iter().all(Zero::is_zero), || format!("chair strengths {s:?}"))?;
    let k = kernel_witness(&chair).map_err(|e| e.to_string())?;
    ensure(k.weights == kernel && k.degree.is_zero(), || format!("kernel_witness gave {:?}", k.weights))?;

    let path = Graph::undirected(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
    let w = WeightAssignment::from_integers([1, 0, 1], 1);
    ensure(verify_assignment(&path, &w).unwrap(), || "path vector fails at r = 1".into())?;

    let wheel = fixtures::wheel();
    let weights: Vec<i64> = wheel
        .edges()
        .iter()
        .map(|&(a, b)| if a == 4 || b == 4 { 2 } else { 3 })
        .collect();
    let s = strengths(&wheel, &weights.iter().map(|&x| int(x)).collect::<Vec<_>>()).unwrap();
    ensure(s.iter().all(|x| *x == int(8)), || format!("wheel strengths {s:?}"))?;
    Ok("chair kernel strengths 0, path r = 1, wheel r = 8".into())
}

fn c4_oracle_sweep() -> Outcome {
    let t = Instant::now();
    let mut undirected = 0;
    for n in 1..=5 {
        for g in common::all_simple_graphs(n) {
            let fast = classify_graph(&g).category;
            let slow = oracle_classify(&g).map_err(|e| e.to_string())?.category;
            ensure(fast == slow, || format!("{g}: classify {fast}, oracle {slow}"))?;
            undirected += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=4);
        let p = rng.gen_range(0.2..0.8);
        let g = common::random_directed(&mut rng, n, p);
        let fast = classify_graph(&g).category;
        let slow = oracle_classify(&g).map_err(|e| e.to_string())?.category;
        ensure(fast == slow, || format!("{g}: classify {fast}, oracle {slow}"))?;
    }
    within(t.elapsed(), Duration::from_secs(60), "sweep")?;
    Ok(format!(
        "{undirected} undirected + 10000 directed graphs, 0 disagreements, {:?}",
        t.elapsed()
    ))
}

fn c5_chainability() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut chainable = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.1..0.7);
        let a = common::random_matrix(&mut rng, n, n, p);
        let expected = common::rook_closure_chainable(&a);
        let got = is_chainable(&common::graph_of_matrix(&a));
        ensure(got == expected, || format!("{a:?}: is_chainable {got}, rook closure {expected}"))?;
        ensure(rook_chainable(&a) == expected, || format!("{a:?}: library rook oracle disagrees"))?;
        chainable += expected as usize;
    }
    Ok(format!("1000 matrices ({chainable} chainable), 0 disagreements"))
}

fn check_form(g: &Graph) -> Result<(), String> {
    let Ok(form) = canonical_form(g) else {
        return Ok(());
    };
    let n = g.node_count();
    for perm in [&form.row_perm, &form.col_perm] {
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        ensure(sorted == (0..n).collect::<Vec<_>>(), || format!("{g}: not a permutation {perm:?}"))?;
    }
    let rows: usize = form.blocks.iter().map(|b| b.rows).sum();
    let cols: usize = form.blocks.iter().map(|b| b.cols).sum();
    ensure(rows == n && cols == n, || format!("{g}: block sizes do not cover the matrix"))?;
    let mut row_block = Vec::new();
    let mut col_block = Vec::new();
    for (k, b) in form.blocks.iter().enumerate() {
        row_block.extend(std::iter::repeat_n(k, b.rows));
        col_block.extend(std::iter::repeat_n(k, b.cols));
    }
    let permuted = form.apply(&g.adjacency());
    for i in 0..n {
        for j in 0..n {
            ensure(!permuted[i][j] || row_block[i] == col_block[j], || {
                format!("{g}: nonzero ({i},{j}) outside the diagonal blocks")
            })?;
        }
    }
    // Each block is itself chainable.
    let mut r0 = 0;
    let mut c0 = 0;
    for b in &form.blocks {
        let sub: Vec<Vec<bool>> = (r0..r0 + b.rows).map(|i| permuted[i][c0..c0 + b.cols].to_vec()).collect();
        ensure(common::rook_closure_chainable(&sub), || format!("{g}: block not chainable"))?;
        r0 += b.rows;
        c0 += b.cols;
    }
    ensure(
        form.all_square() == is_arbitrarily_regularizable(g),
        || format!("{g}: all-square disagrees with arbitrary regularizability"),
    )
}

fn c6_canonical_form() -> Outcome {
    for f in hierarchy_fixtures() {
        if f.expected >= Category::ArbitrarilyRegularizable {
            let form = canonical_form(&f.graph).map_err(|e| format!("{}: {e}", f.name))?;
            ensure(form.all_square(), || format!("{}: non-square block", f.name))?;
        }
        check_form(&f.graph)?;
    }
    let form = canonical_form(&fixtures::directed_unbalanced()).map_err(|e| e.to_string())?;
    let shapes: Vec<(usize, usize)> = form.blocks.iter().map(|b| (b.rows, b.cols)).collect();
    ensure(shapes == vec![(3, 2), (1, 2)], || format!("unbalanced fixture blocks {shapes:?}"))?;
    ensure(form.row_perm[..3] == [0, 1, 3] && form.col_perm[..2] == [1, 2], || {
        format!("first class rows {:?} cols {:?}", &form.row_perm[..3], &form.col_perm[..2])
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.15..0.6);
        let g = if rng.gen_bool(0.5) {
            common::random_directed(&mut rng, n, p)
        } else {
            common::random_undirected(&mut rng, n, p, true)
        };
        check_form(&g)?;
    }
    Ok("fixture blocks square, unbalanced fixture 3x2 + 1x2, 1000 random forms valid".into())
}

fn c7_vulnerability() -> Outcome {
    let t = Instant::now();
    for n in 5..=9 {
        let g = fixtures::bordered(n);
        let v = vulnerability(&g, 20).map_err(|e| e.to_string())?.value;
        ensure(v == n as i64 - 4, || format!("n = {n}: vulnerability {v}, expected {}", n - 4))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5000 {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.1..0.8);
        let g = common::random_undirected(&mut rng, n, p, false);
        let v = vulnerability(&g, 20).map_err(|e| e.to_string())?.value;
        ensure((v <= 0) == has_support(&g), || format!("{g}: vulnerability {v}, support {}", has_support(&g)))?;
    }
    within(t.elapsed(), Duration::from_secs(120), "vulnerability checks")?;
    Ok(format!("family n = 5..9 gives n - 4; 5000 samples agree with support, {:?}", t.elapsed()))
}

/// Random sparse digraph. With `planted`, the first `n` edges form a
/// random permutation, so the graph has support and no source or sink.
fn sparse_digraph(rng: &mut ChaCha8Rng, n: usize, m: usize, planted: bool) -> Graph {
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    if planted {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        for (a, b) in perm.into_iter().enumerate() {
            seen.insert((a, b));
            edges.push((a, b));
        }
        edges.shuffle(rng);
    }
    while edges.len() < m {
        let e = (rng.gen_range(0..n), rng.gen_range(0..n));
        if seen.insert(e) {
            edges.push(e);
        }
    }
    Graph::new(true, n, edges).unwrap()
}

fn c8_performance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut report = Vec::new();
    for planted in [false, true] {
        let g = sparse_digraph(&mut rng, 100_000, 300_000, planted);
        let t = Instant::now();
        let arbitrary = is_arbitrarily_regularizable(&g);
        let t_arbitrary = t.elapsed();
        let t = Instant::now();
        let support = has_support(&g);
        let t_support = t.elapsed();
        within(t_arbitrary, Duration::from_secs(2), "arbitrary check")?;
        within(t_support, Duration::from_secs(10), "support check")?;
        ensure(!planted || support, || "planted permutation not found".into())?;
        let kind = if planted { "planted" } else { "uniform" };
        report.push(format!(
            "{kind}: arbitrary = {arbitrary} in {t_arbitrary:?}, support = {support} in {t_support:?}"
        ));
    }
    Ok(report.join("; "))
}

fn gcd_is_one(w: &WeightAssignment) -> bool {
    let g = w
        .weights
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x.numer()));
    w.is_integral() && g == BigInt::from(1)
}

fn c9_integrality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut graphs: Vec<Graph> = hierarchy_fixtures().into_iter().map(|f| f.graph).collect();
    for _ in 0..500 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.15..0.6);
        graphs.push(if rng.gen_bool(0.5) {
            common::random_directed(&mut rng, n, p)
        } else {
            common::random_undirected(&mut rng, n, p, true)
        });
    }
    let mut witnesses = 0;
    let mut solves = 0;
    for g in &graphs {
        let mut ws = Vec::new();
        if let Some(w) = classify_graph(g).witness {
            ws.push(w);
        }
        if let Ok(w) = synth_positive(g) {
            ws.push(w);
        }
        if let Ok(w) = synth_nonnegative(g) {
            ws.push(w.normalized());
        }
        if let Ok((w, report)) = synth_arbitrary(g) {
            ensure(report.det_magnitude.is_positive(), || format!("{g}: |det M| = 0"))?;
            solves += 1;
            ws.push(w);
        }
        for w in ws {
            ensure(verify_assignment(g, &w).unwrap(), || format!("{g}: witness fails"))?;
            ensure(gcd_is_one(&w), || format!("{g}: witness {:?} not primitive", w.weights))?;
            witnesses += 1;
        }
    }
    Ok(format!("{witnesses} witnesses integral with gcd 1; {solves} solves with |det M| > 0"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 hierarchy fixtures", c1_hierarchy_fixtures),
        ("2 witness validity", c2_witness_validity),
        ("3 stated vectors", c3_stated_vectors),
        ("4 oracle equivalence sweep", c4_oracle_sweep),
        ("5 chainability cross-check", c5_chainability),
        ("6 canonical form", c6_canonical_form),
        ("7 vulnerability", c7_vulnerability),
        ("8 performance smoke test", c8_performance),
        ("9 integrality", c9_integrality),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
