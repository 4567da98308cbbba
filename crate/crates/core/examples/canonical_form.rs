//! Block-diagonal form of the adjacency matrix: square blocks exactly when
//! the graph is arbitrarily regularizable.

use graphreg::fixtures;
use graphreg::{canonical_form, Graph};

fn print_matrix(g: &Graph, rows: &[usize], cols: &[usize]) {
    let a = g.adjacency();
    for &i in rows {
        let line: Vec<&str> = cols.iter().map(|&j| if a[i][j] { "1" } else { "." }).collect();
        println!("    {}", line.join(" "));
    }
}

fn main() {
    for (name, g) in [
        ("unbalanced", fixtures::directed_unbalanced()),
        ("double star", fixtures::double_star()),
        ("two forests", fixtures::directed_two_forests()),
    ] {
        println!("{name}: {g}");
        match canonical_form(&g) {
            Ok(form) => {
                print!("{}", form.to_string().lines().map(|l| format!("  {l}\n")).collect::<String>());
                print_matrix(&g, &form.row_perm, &form.col_perm);
                println!("  all blocks square: {}", form.all_square());
            }
            Err(e) => println!("  {e}"),
        }
    }
}
