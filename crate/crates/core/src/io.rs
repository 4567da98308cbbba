//! Text formats: graph files, witness files, LP models, DOT and JSON.
//!
//! Graph file:
//!
//! ```text
//! # comment lines may appear anywhere
//! undirected          <- or "directed"
//! 3 3                 <- n m
//! 1 2                 <- m lines "tail head", 1-based
//! 2 3
//! 3 1
//! ```
//!
//! Witness file:
//!
//! ```text
//! class arbitrary     <- regular | positive | nonnegative | arbitrary | none | kernel
//! degree 1            <- "p/q" or an integer
//! edges 5
//! 1 1 2 1             <- "index tail head weight", indices 1..m in order
//! ...
//! ```
//!
//! Blank lines are ignored in both formats. Rationals are written as
//! `p/q`, with `/q` omitted when `q = 1`; no output uses floating point.

use std::fmt::{self, Write as _};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::classify::{Category, Certificate, HierarchyVerdict};
use crate::graph::{satisfies_system, Graph, GraphError, Rational, WeightAssignment};
use crate::synth::LinearSolveReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: node {node} outside 1..={n}")]
    Range { line: usize, node: usize, n: usize },
    #[error("line {line}: duplicate edge ({tail}, {head}), first given on line {first_line}")]
    Duplicate {
        line: usize,
        first_line: usize,
        tail: usize,
        head: usize,
    },
    #[error("unexpected end of input: expected {expected}")]
    UnexpectedEof { expected: String },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| syntax(line, format!("expected {what}, found `{tok}`")))
}

fn fields<'a, const K: usize>(line: usize, text: &'a str, what: &str) -> Result<[&'a str; K], ParseError> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    toks.try_into()
        .map_err(|t: Vec<&str>| syntax(line, format!("expected {what} ({K} fields), found {} fields", t.len())))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let eof = |what: &str| ParseError::UnexpectedEof {
        expected: what.to_string(),
    };
    let (hl, header) = lines.next().ok_or_else(|| eof("`directed` or `undirected` header"))?;
    let directed = match header {
        "directed" => true,
        "undirected" => false,
        other => return Err(syntax(hl, format!("expected `directed` or `undirected`, found `{other}`"))),
    };
    let (sl, sizes) = lines.next().ok_or_else(|| eof("`n m` line"))?;
    let [n, m] = fields::<2>(sl, sizes, "`n m`")?;
    let n = parse_usize(sl, n, "node count")?;
    let m = parse_usize(sl, m, "edge count")?;
    if n == 0 {
        return Err(syntax(sl, "node count must be positive"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut first_seen = std::collections::HashMap::with_capacity(m);
    for k in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| eof(&format!("{m} edge lines, found {k}")))?;
        let [a, b] = fields::<2>(line, text, "`tail head`")?;
        let a = parse_usize(line, a, "node index")?;
        let b = parse_usize(line, b, "node index")?;
        for node in [a, b] {
            if node == 0 || node > n {
                return Err(ParseError::Range { line, node, n });
            }
        }
        let key = if directed { (a, b) } else { (a.min(b), a.max(b)) };
        if let Some(&first_line) = first_seen.get(&key) {
            return Err(ParseError::Duplicate {
                line,
                first_line,
                tail: a,
                head: b,
            });
        }
        first_seen.insert(key, line);
        edges.push((a - 1, b - 1));
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, format!("more than the declared {m} edges")));
    }
    Ok(Graph::new(directed, n, edges).expect("validated above"))
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = String::new();
    s.push_str(if g.is_directed() { "directed\n" } else { "undirected\n" });
    let _ = writeln!(s, "{} {}", g.node_count(), g.edge_count());
    for &(a, b) in g.edges() {
        let _ = writeln!(s, "{} {}", a + 1, b + 1);
    }
    s
}

/// Label stored in a witness file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessClass {
    Category(Category),
    /// A kernel element (`r = 0`).
    Kernel,
}

impl fmt::Display for WitnessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessClass::Category(c) => f.write_str(c.short_name()),
            WitnessClass::Kernel => f.write_str("kernel"),
        }
    }
}

impl std::str::FromStr for WitnessClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "kernel" {
            Ok(WitnessClass::Kernel)
        } else {
            s.parse().map(WitnessClass::Category)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessFile {
    pub class: WitnessClass,
    pub assignment: WeightAssignment,
    /// `(tail, head)` per edge, 0-based.
    pub edges: Vec<(usize, usize)>,
}

impl WitnessFile {
    pub fn new(class: WitnessClass, g: &Graph, assignment: WeightAssignment) -> Self {
        Self {
            class,
            assignment,
            edges: g.edges().to_vec(),
        }
    }

    /// Edge endpoints agree with the graph's enumeration.
    pub fn matches_graph(&self, g: &Graph) -> bool {
        self.edges == g.edges()
    }
}

pub fn write_witness(w: &WitnessFile) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "class {}", w.class);
    let _ = writeln!(s, "degree {}", w.assignment.degree);
    let _ = writeln!(s, "edges {}", w.edges.len());
    for (l, (&(a, b), x)) in w.edges.iter().zip(&w.assignment.weights).enumerate() {
        let _ = writeln!(s, "{} {} {} {}", l + 1, a + 1, b + 1, x);
    }
    s
}

fn parse_rational(line: usize, tok: &str) -> Result<Rational, ParseError> {
    tok.parse::<Rational>()
        .map_err(|_| syntax(line, format!("expected a rational `p/q`, found `{tok}`")))
}

pub fn parse_witness(text: &str) -> Result<WitnessFile, ParseError> {
    let mut lines = content_lines(text);
    let eof = |what: &str| ParseError::UnexpectedEof {
        expected: what.to_string(),
    };
    let mut keyed = |key: &str| -> Result<(usize, String), ParseError> {
        let (line, text) = lines.next().ok_or_else(|| eof(&format!("`{key}` line")))?;
        let [k, v] = fields::<2>(line, text, &format!("`{key} <value>`"))?;
        if k != key {
            return Err(syntax(line, format!("expected `{key}`, found `{k}`")));
        }
        Ok((line, v.to_string()))
    };
    let (cl, class) = keyed("class")?;
    let class: WitnessClass = class.parse().map_err(|e: String| syntax(cl, e))?;
    let (dl, degree) = keyed("degree")?;
    let degree = parse_rational(dl, &degree)?;
    let (ml, m) = keyed("edges")?;
    let m = parse_usize(ml, &m, "edge count")?;

    let mut edges = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    for k in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| eof(&format!("{m} weight lines, found {k}")))?;
        let [idx, a, b, w] = fields::<4>(line, text, "`index tail head weight`")?;
        let idx = parse_usize(line, idx, "edge index")?;
        if idx != k + 1 {
            return Err(syntax(line, format!("expected edge index {}, found {idx}", k + 1)));
        }
        let a = parse_usize(line, a, "node index")?;
        let b = parse_usize(line, b, "node index")?;
        if a == 0 || b == 0 {
            return Err(syntax(line, "node indices are 1-based"));
        }
        edges.push((a - 1, b - 1));
        weights.push(parse_rational(line, w)?);
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, format!("more than the declared {m} weight lines")));
    }
    Ok(WitnessFile {
        class,
        assignment: WeightAssignment::new(weights, degree),
        edges,
    })
}

/// LP feasibility model of `B w = r e` for the given class, in CPLEX LP
/// format. `Arbitrary`: w free, r >= 1. `Nonnegative`: w >= 0, r >= 1.
/// `Positive`: w >= 1, r free. Any other category is treated as the
/// closest of these three (`Regular` as `Positive`, `NotRegularizable` as
/// `Arbitrary`).
pub fn export_lp(g: &Graph, class: Category) -> String {
    let b = crate::graph::build_incidence(g);
    let m = g.edge_count();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); b.rows()];
    for l in 0..m {
        for &r in b.column(l) {
            rows[r].push(l);
        }
    }
    let model = match class {
        Category::Regular | Category::PositivelyRegularizable => Category::PositivelyRegularizable,
        Category::NonnegativelyRegularizable => Category::NonnegativelyRegularizable,
        _ => Category::ArbitrarilyRegularizable,
    };

    let mut s = String::new();
    let _ = writeln!(s, "\\ regularization feasibility model: {}", model.short_name());
    let _ = writeln!(s, "\\ {} nodes, {} edges, {}", g.node_count(), m, if g.is_directed() { "directed" } else { "undirected" });
    s.push_str("Minimize\n obj: 0 r\nSubject To\n");
    let n = g.node_count();
    for (i, row) in rows.iter().enumerate() {
        let name = if !g.is_directed() {
            format!("node{}", i + 1)
        } else if i < n {
            format!("out{}", i + 1)
        } else {
            format!("in{}", i - n + 1)
        };
        let _ = write!(s, " {name}:");
        for (k, l) in row.iter().enumerate() {
            let _ = write!(s, " {}w{}", if k == 0 { "" } else { "+ " }, l + 1);
        }
        s.push_str(" - r = 0\n");
    }
    s.push_str("Bounds\n");
    match model {
        Category::PositivelyRegularizable => {
            for l in 0..m {
                let _ = writeln!(s, " w{} >= 1", l + 1);
            }
            s.push_str(" r free\n");
        }
        Category::NonnegativelyRegularizable => {
            for l in 0..m {
                let _ = writeln!(s, " w{} >= 0", l + 1);
            }
            s.push_str(" r >= 1\n");
        }
        _ => {
            for l in 0..m {
                let _ = writeln!(s, " w{} free", l + 1);
            }
            s.push_str(" r >= 1\n");
        }
    }
    s.push_str("End\n");
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DotError {
    #[error("weights do not solve B w = r e for this graph")]
    InvalidWitness,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// DOT rendering; with weights, every edge is labelled with its exact
/// weight. The weights must satisfy `B w = r e` (kernel elements with
/// `r = 0` are accepted).
pub fn export_dot(g: &Graph, w: Option<&WeightAssignment>) -> Result<String, DotError> {
    if let Some(w) = w {
        if !satisfies_system(g, w)? {
            return Err(DotError::InvalidWitness);
        }
    }
    let (kind, arrow) = if g.is_directed() { ("digraph", "->") } else { ("graph", "--") };
    let mut s = String::new();
    let _ = writeln!(s, "{kind} G {{");
    if let Some(w) = w {
        let _ = writeln!(s, "  label=\"r = {}\";", w.degree);
    }
    for v in 1..=g.node_count() {
        let _ = writeln!(s, "  {v};");
    }
    for (l, &(a, b)) in g.edges().iter().enumerate() {
        match w {
            Some(w) => {
                let _ = writeln!(s, "  {} {arrow} {} [label=\"{}\"];", a + 1, b + 1, w.weights[l]);
            }
            None => {
                let _ = writeln!(s, "  {} {arrow} {};", a + 1, b + 1);
            }
        }
    }
    s.push_str("}\n");
    Ok(s)
}

pub(crate) fn serialize_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Serialize)]
pub struct WitnessJson {
    pub degree: String,
    pub weights: Vec<String>,
}

impl From<&WeightAssignment> for WitnessJson {
    fn from(w: &WeightAssignment) -> Self {
        Self {
            degree: w.degree.to_string(),
            weights: w.weights.iter().map(ToString::to_string).collect(),
        }
    }
}

/// JSON mirror of a verdict. Certificate node indices are 1-based.
#[derive(Debug, Serialize)]
pub struct VerdictJson {
    pub category: &'static str,
    pub description: String,
    pub witness: Option<WitnessJson>,
    pub certificate: Option<Certificate>,
    pub certificate_text: Option<String>,
    pub solve_report: Option<LinearSolveReport>,
    pub timings_us: Timings,
}

#[derive(Debug, Default, Clone, Serialize)]
pub struct Timings {
    pub parse: u64,
    pub classify: u64,
}

fn one_based_certificate(c: &Certificate) -> Certificate {
    let shift = |v: &[usize]| v.iter().map(|x| x + 1).collect();
    match c {
        Certificate::IsolatedNode { node } => Certificate::IsolatedNode { node: node + 1 },
        Certificate::SourceNode { node } => Certificate::SourceNode { node: node + 1 },
        Certificate::SinkNode { node } => Certificate::SinkNode { node: node + 1 },
        Certificate::UnbalancedBipartite { u, w } => Certificate::UnbalancedBipartite { u: shift(u), w: shift(w) },
        Certificate::UnbalancedClass { edges, whites, blacks } => Certificate::UnbalancedClass {
            edges: shift(edges),
            whites: shift(whites),
            blacks: shift(blacks),
        },
    }
}

pub fn verdict_json(v: &HierarchyVerdict, timings: Timings) -> VerdictJson {
    VerdictJson {
        category: v.category.short_name(),
        description: v.category.to_string(),
        witness: v.witness.as_ref().map(WitnessJson::from),
        certificate: v.certificate.as_ref().map(one_based_certificate),
        certificate_text: v.certificate.as_ref().map(ToString::to_string),
        solve_report: v.solve_report.as_ref().map(|r| LinearSolveReport {
            pivot_columns: r.pivot_columns.iter().map(|x| x + 1).collect(),
            ..r.clone()
        }),
        timings_us: timings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::synth::kernel_witness;

    #[test]
    fn parses_triangle() {
        let g = parse_graph("undirected\n3 3\n1 2\n2 3\n3 1\n").unwrap();
        assert_eq!(g, Graph::undirected(3, [(1, 2), (2, 3), (3, 1)]).unwrap());
    }

    #[test]
    fn comments_and_blank_lines() {
        let err = parse_graph("# header\ndirected\n\n2 1\n").unwrap_err();
        assert!(matches!(err, ParseError::UnexpectedEof { .. }));
        let g = parse_graph("# a\ndirected\n# b\n2 1\n# c\n1 2\n# d\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn range_error_names_line() {
        assert_eq!(
            parse_graph("directed\n2 1\n1 3\n"),
            Err(ParseError::Range { line: 3, node: 3, n: 2 })
        );
    }

    #[test]
    fn duplicate_error_names_line() {
        assert_eq!(
            parse_graph("undirected\n2 2\n1 2\n2 1\n"),
            Err(ParseError::Duplicate {
                line: 4,
                first_line: 3,
                tail: 2,
                head: 1
            })
        );
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_graph("both\n1 0\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph("directed\n1\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph("directed\n2 1\n1 x\n"), Err(ParseError::Syntax { line: 3, .. })));
        assert!(matches!(parse_graph("directed\n2 1\n1 2\n2 1\n"), Err(ParseError::Syntax { line: 4, .. })));
        assert!(matches!(parse_graph("directed\n0 0\n"), Err(ParseError::Syntax { line: 2, .. })));
    }

    #[test]
    fn witness_round_trip() {
        let g = fixtures::chair();
        let w = kernel_witness(&g).unwrap();
        let file = WitnessFile::new(WitnessClass::Kernel, &g, w);
        let text = write_witness(&file);
        assert!(text.contains("2 2 3 -1\n"));
        assert_eq!(parse_witness(&text).unwrap(), file);
        let half = WeightAssignment::new(vec![Rational::new(1.into(), 2.into())], Rational::new(1.into(), 2.into()));
        let k2 = Graph::undirected(2, [(1, 2)]).unwrap();
        let file = WitnessFile::new(WitnessClass::Category(Category::ArbitrarilyRegularizable), &k2, half);
        let text = write_witness(&file);
        assert!(text.contains("degree 1/2"));
        assert_eq!(parse_witness(&text).unwrap(), file);
    }

    #[test]
    fn lp_models() {
        let tri = Graph::undirected(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        let lp = export_lp(&tri, Category::ArbitrarilyRegularizable);
        assert_eq!(lp.matches(" - r = 0").count(), 3);
        assert!(lp.contains(" r >= 1\n"));
        assert!(lp.contains(" w1 free\n"));
        let lp = export_lp(&tri, Category::PositivelyRegularizable);
        for l in 1..=3 {
            assert!(lp.contains(&format!(" w{l} >= 1\n")));
        }
        assert!(!lp.contains("r >="));
        let path = Graph::undirected(2, [(1, 2)]).unwrap();
        let lp = export_lp(&path, Category::NonnegativelyRegularizable);
        assert_eq!(lp.matches(" - r = 0").count(), 2);
        assert!(lp.contains(" w1 >= 0\n"));
        assert!(lp.contains(" r >= 1\n"));
    }

    #[test]
    fn dot_output() {
        let tri = Graph::undirected(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        let w = WeightAssignment::from_integers([1, 1, 1], 2);
        let dot = export_dot(&tri, Some(&w)).unwrap();
        assert_eq!(dot.matches("[label=\"1\"]").count(), 3);
        let plain = export_dot(&tri, None).unwrap();
        assert!(plain.contains("  1 -- 2;\n"));
        let g = fixtures::chair();
        let k = kernel_witness(&g).unwrap();
        let dot = export_dot(&g, Some(&k)).unwrap();
        let labels: Vec<&str> = dot.lines().filter_map(|l| l.split("label=\"").nth(1)).collect();
        assert_eq!(labels[1..], ["1\"];", "-1\"];", "1\"];", "-1\"];", "0\"];"]);
        let bad = WeightAssignment::from_integers([1, 1, 0], 2);
        assert_eq!(export_dot(&tri, Some(&bad)), Err(DotError::InvalidWitness));
    }
}
