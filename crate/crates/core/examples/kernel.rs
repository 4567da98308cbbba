//! Nonzero solutions of `B w = 0` for cyclic graphs that are not
//! arbitrarily regularizable; trees admit only the zero solution.

use graphreg::fixtures;
use graphreg::{kernel_witness, strengths};

fn main() {
    for (name, g) in [("chair", fixtures::chair()), ("claw", fixtures::claw())] {
        println!("{name}: {g}");
        match kernel_witness(&g) {
            Ok(w) => {
                let ws: Vec<String> = w.weights.iter().map(ToString::to_string).collect();
                let s: Vec<String> = strengths(&g, &w.weights).unwrap().iter().map(ToString::to_string).collect();
                println!("  kernel [{}], strengths [{}]", ws.join(", "), s.join(", "));
            }
            Err(e) => println!("  {e}"),
        }
    }
}
