//! Perfect matchings of `G*` as spanning cycle forests: one forest shows
//! support, a forest through every edge shows total support.

use graphreg::fixtures;
use graphreg::matching::{matching_to_cycle_forest, total_support_matchings};
use graphreg::{has_support, has_total_support, max_matching, star_transform};

fn main() {
    for (name, g) in [
        ("loop, 3-cycle and 2-cycle", fixtures::directed_loop_cycle_and_pair()),
        ("two forests", fixtures::directed_two_forests()),
        ("paw", fixtures::paw()),
    ] {
        let sg = star_transform(&g);
        let m = max_matching(&sg);
        println!("{name}: {g}");
        println!(
            "  maximum matching {} of {}, support {}, total support {}",
            m.len(),
            g.node_count(),
            has_support(&g),
            has_total_support(&g)
        );
        if let Ok(forest) = matching_to_cycle_forest(&sg, &m) {
            let w = forest.to_weights(g.edge_count());
            let ws: Vec<String> = w.weights.iter().map(ToString::to_string).collect();
            println!("  cycle forest weights [{}], r = {}", ws.join(", "), w.degree);
        }
        if let Some(all) = total_support_matchings(&sg) {
            println!("  {} matchings cover all {} star edges", all.len(), sg.edge_count());
        }
    }
}
