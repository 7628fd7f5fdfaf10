mod common;

use common::{mask_of, Brute};
use koenig::generators::{random_bipartite_with_pm, random_connected_bipartite, random_tree};
use koenig::io::{parse_edge_list, write_edge_list};
use koenig::ke::{classify_alpha_plus, decompose, is_koenig_egervary, AlphaPlusClass, Facts};
use koenig::matching::{all_maximum_matchings, is_perfect};
use koenig::stable::{alpha_after_edge_addition, core_report, enumerate_omega, stability_number};
use koenig::{maximum_matching, Graph, Limits, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let len = pairs.len();
            (Just(n), Just(pairs), proptest::collection::vec(any::<bool>(), len))
        })
        .prop_map(|(n, pairs, keep)| {
            let edges = pairs.into_iter().zip(keep).filter(|&(_, k)| k).map(|(e, _)| e);
            Graph::new(n, edges).unwrap()
        })
}

fn set_mask(s: &VertexSet) -> u64 {
    mask_of(s.iter())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn matching_is_maximum(g in graph(11)) {
        let m = maximum_matching(&g);
        m.validate(&g).unwrap();
        prop_assert_eq!(m.size(), Brute::new(&g).mu());
    }

    #[test]
    fn omega_matches_brute_force(g in graph(10)) {
        let b = Brute::new(&g);
        let l = Limits::default();
        let fam = enumerate_omega(&g, &l).unwrap();
        let ours: Vec<u64> = fam.sets.iter().map(set_mask).collect();
        let mut ours_sorted = ours.clone();
        ours_sorted.sort_unstable();
        prop_assert_eq!(ours_sorted, b.omega());
        prop_assert_eq!(fam.alpha, b.alpha());
        prop_assert_eq!(stability_number(&g, &l).unwrap(), b.alpha());
        let cr = core_report(&fam, g.order()).unwrap();
        prop_assert_eq!(set_mask(&cr.core), b.core());
        prop_assert_eq!(set_mask(&cr.anticore), b.anticore());
        prop_assert_eq!(cr.core_size, cr.core.len());
    }

    #[test]
    fn ke_and_class_match_definitions(g in graph(8)) {
        let b = Brute::new(&g);
        let l = Limits::default();
        prop_assert_eq!(is_koenig_egervary(&g, &l).unwrap(), b.is_ke());
        let facts = Facts::new(&g, &l).unwrap();
        let class = classify_alpha_plus(&facts).unwrap();
        prop_assert_eq!(class.is_alpha_plus(), b.alpha_plus());
        if let Some(w) = class.witness {
            prop_assert!(b.with_edge(w.0, w.1).alpha() < b.alpha());
        }
        if class.class == AlphaPlusClass::Alpha1Plus {
            prop_assert_eq!(b.core().count_ones(), 1);
        }
    }

    #[test]
    fn alpha_after_edge_matches_brute_force(g in graph(9), u in 0usize..9, v in 0usize..9) {
        let n = g.order();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        let got = alpha_after_edge_addition(&g, u, v, &Limits::default()).unwrap();
        prop_assert_eq!(got, Brute::new(&g).with_edge(u, v).alpha());
    }

    #[test]
    fn all_maximum_matchings_match_brute_force(g in graph(8)) {
        let ours = all_maximum_matchings(&g, &Limits::default()).unwrap();
        let mut ours: Vec<Vec<(usize, usize)>> =
            ours.iter().map(|m| m.pairs().iter().map(|e| (e.0, e.1)).collect()).collect();
        for m in &mut ours {
            m.sort_unstable();
        }
        ours.sort();
        let mut theirs = Brute::new(&g).maximum_matchings();
        for m in &mut theirs {
            m.sort_unstable();
        }
        theirs.sort();
        prop_assert_eq!(ours, theirs);
    }

    #[test]
    fn edge_list_round_trip(g in graph(14)) {
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(write_edge_list(&back), text);
    }

    #[test]
    fn neighborhood_and_deletion(g in graph(10), mask in any::<u16>()) {
        let n = g.order();
        let b = Brute::new(&g);
        let x = VertexSet::from_mask(u64::from(mask) & b.full());
        prop_assert_eq!(set_mask(&g.neighborhood(&x).unwrap()), b.neighborhood(set_mask(&x)));
        let h = g.delete_vertices(&x).unwrap();
        prop_assert_eq!(h.order(), n - x.len());
        let kept = g.edges().iter().filter(|e| !x.contains(e.0) && !x.contains(e.1)).count();
        prop_assert_eq!(h.size(), kept);
        prop_assert_eq!(g.is_stable(&x), b.is_stable(set_mask(&x)));
    }

    #[test]
    fn components_partition_the_vertices(g in graph(12)) {
        let comps = g.connected_components();
        let total: usize = comps.iter().map(VertexSet::len).sum();
        prop_assert_eq!(total, g.order());
        for e in g.edges() {
            prop_assert!(comps.iter().any(|c| c.contains(e.0) && c.contains(e.1)));
        }
        prop_assert_eq!(g.is_connected(), comps.len() == 1);
    }

    #[test]
    fn bipartition_is_proper(g in graph(10)) {
        if let Some((a, b)) = g.bipartition() {
            prop_assert!(g.is_stable(&a) && g.is_stable(&b));
            prop_assert_eq!(a.len() + b.len(), g.order());
        } else {
            // No 2-colouring at all.
            let n = g.order();
            let proper = (0u64..1 << n).any(|c| g.edges().iter().all(|e| (c >> e.0 & 1) != (c >> e.1 & 1)));
            prop_assert!(!proper);
        }
    }

    #[test]
    fn ke_decomposition_is_valid(seed in any::<u64>(), n in 2usize..9) {
        let g = random_connected_bipartite(n, 0.4, seed).unwrap();
        let facts = Facts::new(&g, &Limits::default()).unwrap();
        prop_assert!(facts.is_ke());
        let d = decompose(&facts).unwrap();
        prop_assert!(d.is_valid(&g, &facts.family, facts.mu()));
    }
}

#[test]
fn generators_have_their_shape() {
    for seed in 0..50 {
        let t = random_tree(10, seed).unwrap();
        assert_eq!(t.size(), 9);
        assert!(t.is_connected());
        let g = random_bipartite_with_pm(5, 0.3, seed).unwrap();
        assert!(g.is_bipartite());
        assert!(is_perfect(&g, &maximum_matching(&g)).unwrap());
        let c = random_connected_bipartite(9, 0.2, seed).unwrap();
        assert!(c.is_connected() && c.is_bipartite());
    }
}
