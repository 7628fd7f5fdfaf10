mod common;

use common::{mask_of, Brute};
use koenig::constructions::{attach_k2, bullet_kp, join, non_ke_alpha_plus_family, peel, KpAttach};
use koenig::generators::{complete, cycle, path, random_bipartite_with_pm, random_connected_graph};
use koenig::{Error, Graph, Limits};

fn l() -> Limits {
    Limits::default()
}

/// Smallest vertex of every maximum stable set, found by brute force.
fn transversal(b: &Brute) -> Vec<usize> {
    let mut hits: Vec<usize> = b.omega().iter().map(|s| s.trailing_zeros() as usize).collect();
    hits.sort_unstable();
    hits.dedup();
    hits
}

#[test]
fn attach_k2_on_random_graphs() {
    let mut tried = 0;
    for seed in 0..600 {
        let n = 2 + (seed % 7) as usize;
        let g = random_connected_graph(n, 0.35, seed).unwrap();
        let b = Brute::new(&g);
        if !b.is_ke() || b.anticore() != 0 {
            continue;
        }
        tried += 1;
        let hits = transversal(&b);
        let a = attach_k2(&g, &hits, &l()).unwrap();
        assert_eq!((a.x, a.y), (n, n + 1));
        let h = Brute::new(&a.graph);
        assert!(h.is_ke() && h.has_pm(), "seed {seed}");
        assert_eq!(h.core(), 1 << a.x, "seed {seed}");
        assert_eq!(h.anticore(), 1 << a.y, "seed {seed}");
        assert!(h.alpha_plus(), "seed {seed}");

        let p = peel(&a.graph, &l()).unwrap();
        assert_eq!(p.edge, (a.y, a.x));
        assert_eq!(p.graph, g);
    }
    assert!(tried > 50, "only {tried} bases");
}

#[test]
fn attach_k2_refuses_a_set_missing_some_maximum_stable_set() {
    // C4: maximum stable sets {0, 2} and {1, 3}
    let g = cycle(4).unwrap();
    assert!(matches!(attach_k2(&g, &[0, 2], &l()), Err(Error::Precondition(_))));
    assert!(attach_k2(&g, &[0, 1], &l()).is_ok());
    // P3 has a non-empty anticore
    assert!(attach_k2(&path(3), &[0], &l()).is_err());
    // K3 is not König-Egerváry
    assert!(matches!(
        attach_k2(&complete(3), &[0], &l()),
        Err(Error::NotKoenigEgervary)
    ));
}

#[test]
fn peel_needs_a_single_anticore_vertex() {
    assert!(peel(&cycle(4).unwrap(), &l()).is_err());
    assert!(peel(&path(3), &l()).is_err());
    // P4 has an empty anticore
    let p4 = path(4);
    let b = Brute::new(&p4);
    assert_eq!(b.anticore().count_ones(), 0);
    assert!(peel(&p4, &l()).is_err());
    let a = attach_k2(&Graph::new(2, [(0, 1)]).unwrap(), &[0, 1], &l()).unwrap();
    let p = peel(&a.graph, &l()).unwrap();
    assert_eq!(p.graph, Graph::new(2, [(0, 1)]).unwrap());
}

#[test]
fn bullet_on_bipartite_bases() {
    let mut tried = 0;
    for seed in 0..300 {
        let g = random_bipartite_with_pm(1 + (seed % 4) as usize, 0.4, seed).unwrap();
        let b = Brute::new(&g);
        if !b.alpha_plus() {
            continue;
        }
        tried += 1;
        let e = g.edges()[0];
        let n = g.order();
        // edge 0 lies in a perfect matching iff the rest has one
        let rest = Brute::new(&g.delete_vertices(&koenig::VertexSet::new([e.0, e.1])).unwrap());
        for p in 1..=5 {
            let attach = if p <= 2 {
                KpAttach::MatchedEdge(e.0, e.1)
            } else {
                KpAttach::Vertex(0)
            };
            let result = bullet_kp(&g, p, attach, &l());
            if p <= 2 && !rest.has_pm() {
                assert!(result.is_err());
                continue;
            }
            let h = Brute::new(&result.unwrap());
            assert_eq!(h.n, n + p);
            // a lone clique vertex sees both ends of a matched edge, so it
            // never enlarges a maximum stable set
            assert_eq!(h.alpha(), b.alpha() + usize::from(p > 1), "seed {seed} p {p}");
            assert!(h.alpha_plus(), "seed {seed} p {p}");
            assert!(h.core().count_ones() <= 1, "seed {seed} p {p}");
            // the base has a perfect matching, so α + μ = n + p only for p = 2
            assert_eq!(h.is_ke(), p == 2, "seed {seed} p {p}");
        }
    }
    assert!(tried > 30, "only {tried} bases");
}

#[test]
fn bullet_preconditions() {
    let c4 = cycle(4).unwrap();
    assert!(bullet_kp(&complete(3), 3, KpAttach::Vertex(0), &l()).is_err());
    assert!(bullet_kp(&path(3), 3, KpAttach::Vertex(0), &l()).is_err());
    assert!(bullet_kp(&c4, 3, KpAttach::MatchedEdge(0, 1), &l()).is_err());
    assert!(bullet_kp(&c4, 2, KpAttach::Vertex(0), &l()).is_err());
    assert!(matches!(
        bullet_kp(&c4, 1, KpAttach::MatchedEdge(0, 2), &l()),
        Err(Error::MissingEdge(0, 2))
    ));
    assert!(bullet_kp(&c4, 0, KpAttach::Vertex(0), &l()).is_err());
}

#[test]
fn non_ke_family() {
    for n in 5..=10 {
        for variant in [0u8, 1] {
            let g = non_ke_alpha_plus_family(n, variant, &l()).unwrap();
            let b = Brute::new(&g);
            assert_eq!(b.n, n);
            assert!(!b.is_ke(), "n {n} variant {variant}");
            assert!(b.alpha_plus(), "n {n} variant {variant}");
            assert_eq!(b.core().count_ones(), u32::from(variant), "n {n} variant {variant}");
        }
    }
    assert!(non_ke_alpha_plus_family(4, 1, &l()).is_err());
    assert!(non_ke_alpha_plus_family(6, 2, &l()).is_err());
}

#[test]
fn join_adds_cross_edges() {
    let g = join(&path(2), &path(3), &[(0, 0), (1, 2)]).unwrap();
    assert_eq!(g.order(), 5);
    assert_eq!(g.size(), 1 + 2 + 2);
    assert!(g.has_edge(0, 2) && g.has_edge(1, 4));
    assert_eq!(Brute::new(&g).neighborhood(mask_of([2])), mask_of([0, 3]));
}
