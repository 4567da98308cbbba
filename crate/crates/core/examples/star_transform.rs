//! The bipartite counterpart `G*` of a directed graph and the
//! alternating-path edge classes read off its components.

use graphreg::fixtures;
use graphreg::{edge_classes, is_chainable, star_transform};

fn main() {
    for (name, g) in [
        ("unbalanced", fixtures::directed_unbalanced()),
        ("loops without forest", fixtures::directed_loops_without_forest()),
    ] {
        println!("{name}: {g}");
        let sg = star_transform(&g);
        for e in sg.edges() {
            println!("  edge {} -> white {} / black {}", e.source + 1, e.white + 1, e.black + 1);
        }
        for (k, c) in edge_classes(&g).classes.iter().enumerate() {
            let edges: Vec<String> = c
                .edges
                .iter()
                .map(|&e| {
                    let (a, b) = g.edge(e);
                    format!("({},{})", a + 1, b + 1)
                })
                .collect();
            println!(
                "  class {}: {} | {} white, {} black{}",
                k + 1,
                edges.join(" "),
                c.whites.len(),
                c.blacks.len(),
                if c.is_balanced() { "" } else { "  (unbalanced)" }
            );
        }
        println!("  chainable: {}", is_chainable(&g));
    }
}
