//! Places every built-in hierarchy fixture, or a graph file given on the
//! command line, in the regularization hierarchy.
//!
//! ```text
//! cargo run --example classify
//! cargo run --example classify -- path/to/graph.txt
//! ```

use graphreg::fixtures::hierarchy_fixtures;
use graphreg::io::parse_graph;
use graphreg::{classify_graph, Graph};

fn report(name: &str, g: &Graph) {
    let v = classify_graph(g);
    println!("{name}: {}", v.category);
    println!("  {g}");
    if let Some(w) = &v.witness {
        let weights: Vec<String> = w.weights.iter().map(ToString::to_string).collect();
        println!("  weights [{}], r = {}", weights.join(", "), w.degree);
    }
    if let Some(c) = &v.certificate {
        println!("  certificate: {c}");
    }
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable graph file");
        match parse_graph(&text) {
            Ok(g) => report(&path, &g),
            Err(e) => eprintln!("{path}: {e}"),
        }
        return;
    }
    for f in hierarchy_fixtures() {
        report(f.name, &f.graph);
    }
}
