//! Small named graphs, one per level of the hierarchy for each kind of graph,
//! plus a few other shapes used throughout the tests and examples.

use crate::classify::Category;
use crate::graph::Graph;

/// Star `K_{1,3}`: bipartite with parts of size 1 and 3.
pub fn claw() -> Graph {
    Graph::undirected(4, [(1, 2), (1, 3), (1, 4)]).unwrap()
}

/// Two claws joined at their centres by the bridge `{1, 4}`.
pub fn double_star() -> Graph {
    Graph::undirected(6, [(1, 2), (1, 3), (1, 4), (4, 5), (4, 6)]).unwrap()
}

/// Triangle `1-3-4` with the pendant node 2 attached to 1.
pub fn paw() -> Graph {
    Graph::undirected(4, [(1, 2), (3, 4), (1, 3), (1, 4)]).unwrap()
}

/// Wheel on a 4-cycle rim `1-2-3-4` with hub 5.
pub fn wheel() -> Graph {
    Graph::undirected(
        5,
        [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (2, 5), (3, 5), (4, 5)],
    )
    .unwrap()
}

/// Adjacency matrix `[0 1 0 0; 0 0 1 0; 1 0 0 1; 0 1 1 0]`.
pub fn directed_unbalanced() -> Graph {
    Graph::directed(4, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 2), (4, 3)]).unwrap()
}

/// Adjacency matrix `[1 1 1; 0 0 1; 0 0 1]`: loops on 1 and 3 only.
pub fn directed_loops_without_forest() -> Graph {
    Graph::directed(3, [(1, 1), (1, 2), (1, 3), (2, 3), (3, 3)]).unwrap()
}

/// Loop on 1, the 3-cycle `2 -> 3 -> 4 -> 2` and the 2-cycle `1 <-> 2`.
pub fn directed_loop_cycle_and_pair() -> Graph {
    Graph::directed(4, [(1, 1), (2, 3), (3, 4), (4, 2), (1, 2), (2, 1)]).unwrap()
}

/// Loop on 1 plus the 3-cycle `2 -> 3 -> 4 -> 2`, overlaid with the two
/// 2-cycles `1 <-> 2` and `3 <-> 4`; the two spanning cycle forests cover
/// every edge.
pub fn directed_two_forests() -> Graph {
    Graph::directed(4, [(1, 1), (2, 3), (3, 4), (4, 2), (1, 2), (2, 1), (4, 3)]).unwrap()
}

/// 4-cycle `1-2-3-4` with the pendant edge `{5, 1}`.
pub fn chair() -> Graph {
    Graph::undirected(5, [(1, 2), (2, 3), (3, 4), (4, 1), (5, 1)]).unwrap()
}

/// Nodes 1 and `n` adjacent to every other node (and to each other); the
/// inner nodes `2..n-1` form an independent set. Requires `n >= 3`.
pub fn bordered(n: usize) -> Graph {
    assert!(n >= 3, "bordered graph needs at least 3 nodes");
    let mut edges = Vec::new();
    for j in 2..=n {
        edges.push((1, j));
    }
    for j in 2..n {
        edges.push((j, n));
    }
    Graph::undirected(n, edges).unwrap()
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub expected: Category,
}

/// Four undirected and four directed graphs, each sitting in exactly one
/// strict level of the hierarchy.
pub fn hierarchy_fixtures() -> Vec<Fixture> {
    use Category::*;
    let f = |name, graph, expected| Fixture { name, graph, expected };
    vec![
        f("claw", claw(), NotRegularizable),
        f("double-star", double_star(), ArbitrarilyRegularizable),
        f("paw", paw(), NonnegativelyRegularizable),
        f("wheel", wheel(), PositivelyRegularizable),
        f("directed-unbalanced", directed_unbalanced(), NotRegularizable),
        f(
            "directed-loops-without-forest",
            directed_loops_without_forest(),
            ArbitrarilyRegularizable,
        ),
        f(
            "directed-loop-cycle-and-pair",
            directed_loop_cycle_and_pair(),
            NonnegativelyRegularizable,
        ),
        f("directed-two-forests", directed_two_forests(), PositivelyRegularizable),
    ]
}
