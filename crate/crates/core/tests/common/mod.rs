//! Generators and independent reference checks shared by the integration tests.

#![allow(dead_code)]

use graphreg::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Random directed graph on `n` nodes; each ordered pair (loops included)
/// is an edge with probability `p`. Edge order is shuffled.
pub fn random_directed<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    edges.shuffle(rng);
    Graph::new(true, n, edges).unwrap()
}

/// Random undirected graph; `loops` controls whether `{i, i}` may appear.
pub fn random_undirected<R: Rng>(rng: &mut R, n: usize, p: f64, loops: bool) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a..n {
            if (a != b || loops) && rng.gen_bool(p) {
                edges.push(if rng.gen_bool(0.5) { (a, b) } else { (b, a) });
            }
        }
    }
    edges.shuffle(rng);
    Graph::new(false, n, edges).unwrap()
}

/// Every labeled loopless undirected graph on `n` nodes, edges in
/// lexicographic pair order.
pub fn all_simple_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(false, n, edges).unwrap()
    })
}

/// Random 0/1 matrix with the given shape.
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, p: f64) -> Vec<Vec<bool>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_bool(p)).collect()).collect()
}

/// Directed graph whose adjacency matrix is the given square pattern.
pub fn graph_of_matrix(a: &[Vec<bool>]) -> Graph {
    let n = a.len();
    let edges = (0..n).flat_map(|i| (0..n).filter(move |&j| a[i][j]).map(move |j| (i, j)));
    Graph::new(true, n, edges).unwrap()
}

/// Chainability by union-find over nonzero cells: two cells merge when
/// they share a row or a column. No zero row or column allowed.
pub fn rook_closure_chainable(a: &[Vec<bool>]) -> bool {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    if (0..rows).any(|i| !a[i].iter().any(|&x| x)) || (0..cols).any(|j| !(0..rows).any(|i| a[i][j])) {
        return false;
    }
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (0..cols).filter(move |&j| a[i][j]).map(move |j| (i, j)))
        .collect();
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for s in 0..cells.len() {
        for t in s + 1..cells.len() {
            if cells[s].0 == cells[t].0 || cells[s].1 == cells[t].1 {
                let (x, y) = (find(&mut parent, s), find(&mut parent, t));
                parent[x] = y;
            }
        }
    }
    let root = find(&mut parent, 0);
    (0..cells.len()).all(|s| find(&mut parent, s) == root)
}

/// Brute-force vulnerability of a loopless undirected graph.
pub fn brute_vulnerability(g: &Graph) -> i64 {
    let n = g.node_count();
    let adj = g.adjacency();
    let mut best = i64::MIN;
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let independent = members.iter().all(|&a| members.iter().all(|&b| !adj[a][b]));
        if !independent {
            continue;
        }
        let neigh = (0..n).filter(|&u| members.iter().any(|&v| adj[v][u])).count();
        best = best.max(members.len() as i64 - neigh as i64);
    }
    best
}

/// Does some permutation fit in the adjacency pattern? Plain recursion.
pub fn brute_support(a: &[Vec<bool>]) -> bool {
    fn go(a: &[Vec<bool>], row: usize, used: &mut Vec<bool>) -> bool {
        if row == a.len() {
            return true;
        }
        for j in 0..a.len() {
            if a[row][j] && !used[j] {
                used[j] = true;
                if go(a, row + 1, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    go(a, 0, &mut vec![false; a.len()])
}

/// Every nonzero lies on some permutation inside the pattern.
pub fn brute_total_support(a: &[Vec<bool>]) -> bool {
    let n = a.len();
    let mut covered = vec![vec![false; n]; n];
    fn go(a: &[Vec<bool>], row: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, cov: &mut [Vec<bool>]) {
        if row == a.len() {
            for (i, &j) in perm.iter().enumerate() {
                cov[i][j] = true;
            }
            return;
        }
        for j in 0..a.len() {
            if a[row][j] && !used[j] {
                used[j] = true;
                perm.push(j);
                go(a, row + 1, perm, used, cov);
                perm.pop();
                used[j] = false;
            }
        }
    }
    go(a, 0, &mut Vec::new(), &mut vec![false; n], &mut covered);
    let any = (0..n).any(|i| (0..n).any(|j| a[i][j]));
    any && (0..n).all(|i| (0..n).all(|j| !a[i][j] || covered[i][j]))
}
