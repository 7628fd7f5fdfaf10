//! Deterministic graph families and seeded random generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so a seed
//! names the same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_prob(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("edge probability {p} is outside [0, 1]")))
    }
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, edges).expect("generator produced a simple graph")
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)).collect())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Ok(build(n, edges))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
}

/// Sides `0..a` and `a..a + b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect())
}

/// `G(n, p)`: each of the `n(n-1)/2` pairs independently, in lexicographic
/// order.
pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    check_prob(edge_prob)?;
    Ok(gnp(n, edge_prob, &mut rng(seed)))
}

fn gnp(n: usize, p: f64, r: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Random recursive tree: vertex `v` attaches to a uniform earlier vertex,
/// then the labels are shuffled.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Precondition("tree needs at least one vertex".into()));
    }
    let mut r = rng(seed);
    Ok(tree_with(n, &mut r))
}

fn tree_with(n: usize, r: &mut ChaCha8Rng) -> Graph {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(r);
    let edges = (1..n).map(|v| (label[r.gen_range(0..v)], label[v])).collect();
    build(n, edges)
}

/// Sides `0..n1` and `n1..n1 + n2`, each cross pair with probability `p`.
pub fn random_bipartite(n1: usize, n2: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    check_prob(edge_prob)?;
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n1 {
        for v in n1..n1 + n2 {
            if r.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Ok(build(n1 + n2, edges))
}

/// Bipartite with sides `0..k` and `k..2k`: a random perfect matching
/// between the sides, then every other cross pair with `extra_prob`.
pub fn random_bipartite_with_pm(n_side: usize, extra_prob: f64, seed: u64) -> Result<Graph> {
    check_prob(extra_prob)?;
    let mut r = rng(seed);
    let mut perm: Vec<usize> = (n_side..2 * n_side).collect();
    perm.shuffle(&mut r);
    let mut edges = Vec::new();
    for (u, &mate) in perm.iter().enumerate() {
        for v in n_side..2 * n_side {
            if mate == v || r.gen_bool(extra_prob) {
                edges.push((u, v));
            }
        }
    }
    Ok(build(2 * n_side, edges))
}

/// A random spanning tree plus every other pair with probability `p`.
pub fn random_connected_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    check_prob(edge_prob)?;
    if n == 0 {
        return Err(Error::Precondition("connected graph needs at least one vertex".into()));
    }
    let mut r = rng(seed);
    let tree = tree_with(n, &mut r);
    let extra = gnp(n, edge_prob, &mut r);
    let edges = extra
        .edges()
        .iter()
        .filter(|e| !tree.has_edge(e.0, e.1))
        .map(|e| (e.0, e.1));
    Ok(tree.with_edges(edges).expect("tree and extra edges are disjoint"))
}

/// Connected bipartite graph on `n` vertices: a random tree (bipartite by
/// nature) plus every pair across its 2-colouring with probability `p`.
pub fn random_connected_bipartite(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    check_prob(edge_prob)?;
    if n == 0 {
        return Err(Error::Precondition("connected graph needs at least one vertex".into()));
    }
    let mut r = rng(seed);
    let tree = tree_with(n, &mut r);
    let (a, b) = tree.bipartition().expect("trees are bipartite");
    let mut extra = Vec::new();
    for u in a.iter() {
        for v in b.iter() {
            if !tree.has_edge(u, v) && r.gen_bool(edge_prob) {
                extra.push((u, v));
            }
        }
    }
    Ok(tree.with_edges(extra).expect("extra pairs are non-edges"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_families() {
        assert_eq!(path(3), Graph::new(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(cycle(4).unwrap().size(), 4);
        assert!(cycle(2).is_err());
        assert_eq!(complete(4).size(), 6);
        let k4e = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(complete(4).size() - k4e.size(), 1);
        assert!(k4e.edges().iter().all(|e| complete(4).has_edge(e.0, e.1)));
        let k23 = complete_bipartite(2, 3);
        assert_eq!((k23.order(), k23.size()), (5, 6));
        assert_eq!(path(0).order(), 0);
    }

    #[test]
    fn trees_are_trees() {
        for n in 1..20 {
            for seed in 0..5 {
                let t = random_tree(n, seed).unwrap();
                assert_eq!(t.size(), n - 1);
                assert!(t.is_connected());
            }
        }
        assert!(random_tree(0, 1).is_err());
    }

    #[test]
    fn seeds_are_deterministic() {
        assert_eq!(random_graph(10, 0.4, 9).unwrap(), random_graph(10, 0.4, 9).unwrap());
        assert_ne!(random_graph(10, 0.4, 9).unwrap(), random_graph(10, 0.4, 10).unwrap());
        assert!(random_graph(3, 1.5, 0).is_err());
    }

    #[test]
    fn classes_hold() {
        for seed in 0..30 {
            let g = random_connected_graph(9, 0.2, seed).unwrap();
            assert!(g.is_connected());
            let b = random_connected_bipartite(11, 0.3, seed).unwrap();
            assert!(b.is_connected() && b.is_bipartite());
            let pm = random_bipartite_with_pm(5, 0.2, seed).unwrap();
            assert!(pm.is_bipartite());
            assert_eq!(crate::maximum_matching(&pm).size(), 5);
            let rb = random_bipartite(3, 4, 0.5, seed).unwrap();
            assert!(rb.edges().iter().all(|e| e.0 < 3 && e.1 >= 3));
        }
    }
}
