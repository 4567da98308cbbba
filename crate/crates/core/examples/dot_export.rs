//! Graphviz output, plain and labelled with exact weights.

use graphreg::fixtures;
use graphreg::io::export_dot;
use graphreg::{classify_graph, kernel_witness};

fn main() {
    let wheel = fixtures::wheel();
    let w = classify_graph(&wheel).witness.unwrap();
    println!("{}", export_dot(&wheel, Some(&w)).unwrap());

    let chair = fixtures::chair();
    let k = kernel_witness(&chair).unwrap();
    println!("{}", export_dot(&chair, Some(&k)).unwrap());

    println!("{}", export_dot(&fixtures::claw(), None).unwrap());
}
