//! Witness synthesis for each class, checked exactly.

use graphreg::fixtures;
use graphreg::{synth_arbitrary, synth_nonnegative, synth_positive, verify_assignment, WeightAssignment};

fn show(label: &str, w: &WeightAssignment, ok: bool) {
    let ws: Vec<String> = w.weights.iter().map(ToString::to_string).collect();
    println!("  {label:<12} [{}] r = {}  verified: {ok}", ws.join(", "), w.degree);
}

fn main() {
    for (name, g) in [
        ("wheel", fixtures::wheel()),
        ("paw", fixtures::paw()),
        ("double star", fixtures::double_star()),
        ("directed two forests", fixtures::directed_two_forests()),
        ("directed loops", fixtures::directed_loops_without_forest()),
    ] {
        println!("{name}: {g}");
        match synth_positive(&g) {
            Ok(w) => show("positive", &w, verify_assignment(&g, &w).unwrap()),
            Err(e) => println!("  positive     {e}"),
        }
        match synth_nonnegative(&g) {
            Ok(w) => show("nonnegative", &w, verify_assignment(&g, &w).unwrap()),
            Err(e) => println!("  nonnegative  {e}"),
        }
        match synth_arbitrary(&g) {
            Ok((w, report)) => {
                show("arbitrary", &w, verify_assignment(&g, &w).unwrap());
                println!("               |det M| = {}", report.det_magnitude);
            }
            Err(e) => println!("  arbitrary    {e}"),
        }
    }
}
