//! LP feasibility models for the three regularizability classes.

use graphreg::io::export_lp;
use graphreg::{Category, Graph};

fn main() {
    let triangle = Graph::undirected(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
    for class in [
        Category::ArbitrarilyRegularizable,
        Category::NonnegativelyRegularizable,
        Category::PositivelyRegularizable,
    ] {
        println!("{}", export_lp(&triangle, class));
    }
}
