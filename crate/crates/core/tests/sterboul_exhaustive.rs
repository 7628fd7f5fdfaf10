use koenig::matching::all_maximum_matchings;
use koenig::structures::{find_flower, find_posy};
use koenig::{maximum_matching, Graph, Limits};

fn brute_alpha(n: usize, adj: &[u64]) -> usize {
    (0u64..1 << n)
        .filter(|s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

#[test]
fn flower_or_posy_exactly_when_not_ke_up_to_six_vertices() {
    sweep(6, 5);
}

#[test]
#[ignore = "slow: all graphs on seven vertices"]
fn flower_or_posy_exactly_when_not_ke_on_seven_vertices() {
    sweep(7, 0);
}

/// Every graph of order at most `max_n`; all maximum matchings are tried up
/// to `every_matching_n` vertices, the canonical one beyond.
fn sweep(max_n: usize, every_matching_n: usize) {
    let l = Limits::default();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::new(n, edges.iter().copied()).unwrap();
            let mut adj = vec![0u64; n];
            for &(u, v) in &edges {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            let canonical = maximum_matching(&g);
            let ke = brute_alpha(n, &adj) + canonical.size() == n;
            let matchings = if n <= every_matching_n {
                all_maximum_matchings(&g, &l).unwrap()
            } else {
                vec![canonical]
            };
            for m in &matchings {
                let found = find_flower(&g, m, &l).unwrap().is_some() || find_posy(&g, m, &l).unwrap().is_some();
                assert_eq!(ke, !found, "n={n} edges={edges:?} m={:?}", m.pairs());
            }
        }
    }
}
