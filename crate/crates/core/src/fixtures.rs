//! Small named example graphs, with the values claimed for them. Vertex ids
//! follow the drawing left to right, bottom row before top row unless noted on
//! the fixture.

use crate::graph::{Edge, Graph, VertexSet};
use crate::ke::AlphaPlusClass;
use crate::report::AnalysisReport;

/// Claimed values; `None` means nothing is claimed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expected {
    pub alpha: Option<usize>,
    pub mu: Option<usize>,
    pub is_ke: Option<bool>,
    pub has_pm: Option<bool>,
    pub bipartite: Option<bool>,
    pub core: Option<VertexSet>,
    pub anticore: Option<VertexSet>,
    pub anticore_size: Option<usize>,
    pub neighborhood_of_core: Option<VertexSet>,
    pub class: Option<AlphaPlusClass>,
    pub blossom_free: Option<bool>,
    /// `(u, v, α(G + uv))`.
    pub alpha_after_edge: Option<(usize, usize, usize)>,
    /// The perfect matching that comes with the graph.
    pub perfect_matching: Option<Vec<Edge>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub vertex_labels: Vec<(usize, &'static str)>,
    pub edge_labels: Vec<(Edge, &'static str)>,
    pub expected: Expected,
}

impl Fixture {
    /// Mismatches between the claimed values and a computed report, plus
    /// the claims the report does not carry (the drawn matching and the
    /// edge addition), which are checked directly.
    pub fn mismatches(&self, r: &AnalysisReport, alpha_after: Option<usize>) -> Vec<String> {
        let e = &self.expected;
        let mut out = Vec::new();
        let mut cmp = |what: &str, want: Option<String>, got: String| {
            if let Some(want) = want {
                if want != got {
                    out.push(format!("{}: {what} expected {want}, got {got}", self.name));
                }
            }
        };
        cmp("alpha", e.alpha.map(|v| v.to_string()), r.alpha.to_string());
        cmp("mu", e.mu.map(|v| v.to_string()), r.mu.to_string());
        cmp("is_ke", e.is_ke.map(|v| v.to_string()), r.is_ke.to_string());
        cmp("has_pm", e.has_pm.map(|v| v.to_string()), r.has_pm.to_string());
        cmp("bipartite", e.bipartite.map(|v| v.to_string()), r.bipartite.to_string());
        cmp(
            "core",
            e.core.as_ref().map(|v| v.to_string()),
            r.core_report.core.to_string(),
        );
        cmp(
            "anticore",
            e.anticore.as_ref().map(|v| v.to_string()),
            r.core_report.anticore.to_string(),
        );
        cmp(
            "anticore_size",
            e.anticore_size.map(|v| v.to_string()),
            r.core_report.anticore_size.to_string(),
        );
        cmp(
            "neighborhood_of_core",
            e.neighborhood_of_core.as_ref().map(|v| v.to_string()),
            r.neighborhood_of_core.to_string(),
        );
        cmp(
            "class",
            e.class.map(|c| format!("{c:?}")),
            format!("{:?}", r.stability.class),
        );
        cmp(
            "blossom_free",
            e.blossom_free.map(|v| v.to_string()),
            r.blossom_free.to_string(),
        );
        if let Some((_, _, want)) = e.alpha_after_edge {
            let got = alpha_after.map_or_else(|| "nothing".to_string(), |a| a.to_string());
            cmp("alpha after edge", Some(want.to_string()), got);
        }
        if let Some(pm) = &e.perfect_matching {
            let ok = crate::matching::Matching::from_pairs(&self.graph, pm.iter().map(|e| (e.0, e.1)))
                .is_ok_and(|m| 2 * m.size() == self.graph.order());
            if !ok {
                out.push(format!("{}: drawn matching is not a perfect matching", self.name));
            }
        }
        out
    }
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("fixture graphs are simple")
}

fn set(vs: &[usize]) -> Option<VertexSet> {
    Some(VertexSet::new(vs.iter().copied()))
}

/// `K4 - e`; drawing vertex `i` is id `i - 1` and the missing pair is `{2, 3}`.
pub fn fig1_k4_minus_e() -> Fixture {
    Fixture {
        name: "fig1_k4_minus_e",
        graph: graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        vertex_labels: vec![(0, "1"), (1, "2"), (2, "3"), (3, "4")],
        edge_labels: vec![],
        expected: Expected {
            is_ke: Some(true),
            has_pm: Some(true),
            core: set(&[2, 3]),
            anticore: set(&[0, 1]),
            anticore_size: Some(2),
            class: Some(AlphaPlusClass::NotStable),
            ..Expected::default()
        },
    }
}

/// Seven vertices: a bottom path `0-1-2-3` and top vertices `4, 5, 6`.
pub fn fig1_seven() -> Fixture {
    Fixture {
        name: "fig1_seven",
        graph: graph(7, &[(0, 1), (1, 2), (2, 3), (4, 5), (1, 4), (1, 5), (2, 6)]),
        vertex_labels: vec![],
        edge_labels: vec![],
        expected: Expected {
            alpha: Some(4),
            mu: Some(3),
            is_ke: Some(true),
            has_pm: Some(false),
            ..Expected::default()
        },
    }
}

/// Bottom-left and top-left of the drawing are `0` and `1`, then the two
/// columns `2, 3` and `4, 5` (bottom first), then `6` and `7`. The drawn
/// matching `{d, e, g}` carries a 5-cycle blossom with base `6`.
pub fn fig2_blossom() -> Fixture {
    let edges = [(1, 3), (2, 3), (0, 2), (2, 4), (3, 5), (5, 6), (6, 7), (4, 6)];
    Fixture {
        name: "fig2_blossom",
        graph: graph(8, &edges),
        vertex_labels: vec![],
        edge_labels: edges
            .iter()
            .zip(["a", "b", "c", "d", "e", "f", "g", "h"])
            .map(|(&(u, v), l)| (Edge::new(u, v), l))
            .collect(),
        expected: Expected {
            alpha: Some(5),
            mu: Some(3),
            is_ke: Some(true),
            has_pm: Some(false),
            ..Expected::default()
        },
    }
}

/// Top row `v1..v4` is `0..3`, bottom row `v5..v8` is `4..7`.
pub fn fig3_nonstable() -> Fixture {
    let pm = [(0, 1), (2, 3), (4, 5), (6, 7)];
    Fixture {
        name: "fig3_nonstable",
        graph: graph(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 1),
                (5, 2),
                (6, 3),
                (0, 5),
                (1, 6),
                (2, 7),
                (1, 5),
                (2, 6),
            ],
        ),
        vertex_labels: (0..8).zip(["v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"]).collect(),
        edge_labels: pm
            .iter()
            .zip(["a", "b", "c", "d"])
            .map(|(&(u, v), l)| (Edge::new(u, v), l))
            .collect(),
        expected: Expected {
            alpha: Some(4),
            is_ke: Some(true),
            has_pm: Some(true),
            blossom_free: Some(false),
            class: Some(AlphaPlusClass::NotStable),
            alpha_after_edge: Some((0, 4, 3)),
            perfect_matching: Some(pm.iter().map(|&(u, v)| Edge::new(u, v)).collect()),
            ..Expected::default()
        },
    }
}

/// Bottom row `0..2`, top row `3..5`, then `6` on the triangle and its
/// pendant `7`.
pub fn fig4_g1() -> Fixture {
    Fixture {
        name: "fig4_g1",
        graph: graph(
            8,
            &[
                (6, 7),
                (1, 4),
                (2, 5),
                (2, 6),
                (5, 6),
                (0, 4),
                (3, 1),
                (0, 5),
                (3, 2),
                (1, 5),
                (4, 2),
            ],
        ),
        vertex_labels: vec![],
        edge_labels: vec![],
        expected: Expected {
            is_ke: Some(true),
            bipartite: Some(false),
            class: Some(AlphaPlusClass::Alpha1Plus),
            core: set(&[7]),
            anticore: set(&[6]),
            ..Expected::default()
        },
    }
}

/// Bottom path `0-1-2-3`, top edge `4-5` with `5` on both middle vertices.
pub fn fig4_g2() -> Fixture {
    let pm = [(0, 1), (2, 3), (4, 5)];
    Fixture {
        name: "fig4_g2",
        graph: graph(6, &[(0, 1), (1, 2), (2, 3), (4, 5), (1, 5), (2, 5)]),
        vertex_labels: vec![],
        edge_labels: vec![],
        expected: Expected {
            alpha: Some(3),
            is_ke: Some(true),
            has_pm: Some(true),
            bipartite: Some(false),
            blossom_free: Some(true),
            class: Some(AlphaPlusClass::Alpha0Plus),
            perfect_matching: Some(pm.iter().map(|&(u, v)| Edge::new(u, v)).collect()),
            ..Expected::default()
        },
    }
}

/// Bottom row `0..3`, top row `4..7`; `1` and `2` are the labelled `a`, `b`.
pub fn fig5_non_ke() -> Fixture {
    Fixture {
        name: "fig5_non_ke",
        graph: graph(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (5, 6),
                (6, 7),
                (1, 4),
                (2, 5),
                (2, 6),
                (5, 3),
                (2, 7),
                (3, 7),
            ],
        ),
        vertex_labels: vec![(1, "a"), (2, "b")],
        edge_labels: vec![],
        expected: Expected {
            alpha: Some(4),
            mu: Some(3),
            is_ke: Some(false),
            has_pm: Some(false),
            core: set(&[0, 4]),
            neighborhood_of_core: set(&[1]),
            anticore: set(&[1, 2]),
            ..Expected::default()
        },
    }
}

pub fn p3() -> Fixture {
    Fixture {
        name: "p3",
        graph: graph(3, &[(0, 1), (1, 2)]),
        vertex_labels: vec![],
        edge_labels: vec![],
        expected: Expected {
            is_ke: Some(true),
            has_pm: Some(false),
            anticore_size: Some(1),
            class: Some(AlphaPlusClass::NotStable),
            ..Expected::default()
        },
    }
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        fig1_k4_minus_e(),
        fig1_seven(),
        fig2_blossom(),
        fig3_nonstable(),
        fig4_g1(),
        fig4_g2(),
        fig5_non_ke(),
        p3(),
    ]
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}
