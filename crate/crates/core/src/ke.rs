//! König-Egerváry recognition, α⁺-stability classification and the
//! characterizations that relate them to matchings, cores and anticores.
//!
//! Every "if and only if" is evaluated with both sides computed on separate
//! paths: sides built from the family of maximum stable sets are never used
//! to infer the matching-side answer, and vice versa.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::limits::Limits;
use crate::matching::{ensure_maximum, maximum_matching, Matching};
use crate::stable::{core_report, enumerate_omega, stability_number, CoreReport, StableSetFamily};
use crate::structures::is_blossom_free;

/// Everything the characterizations need about one graph, computed once.
#[derive(Clone, Debug)]
pub struct Facts {
    pub graph: Graph,
    pub limits: Limits,
    /// The canonical maximum matching.
    pub matching: Matching,
    pub family: StableSetFamily,
    pub cores: CoreReport,
}

impl Facts {
    pub fn new(g: &Graph, limits: &Limits) -> Result<Facts> {
        let family = enumerate_omega(g, limits)?;
        let cores = core_report(&family, g.order())?;
        Ok(Facts {
            graph: g.clone(),
            limits: *limits,
            matching: maximum_matching(g),
            family,
            cores,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.order()
    }

    pub fn alpha(&self) -> usize {
        self.family.alpha
    }

    pub fn mu(&self) -> usize {
        self.matching.size()
    }

    pub fn is_ke(&self) -> bool {
        self.alpha() + self.mu() == self.n()
    }

    pub fn has_pm(&self) -> bool {
        2 * self.mu() == self.n()
    }

    fn require_ke(&self) -> Result<()> {
        if self.is_ke() {
            Ok(())
        } else {
            Err(Error::NotKoenigEgervary)
        }
    }

    fn require_no_isolated(&self) -> Result<()> {
        match self.graph.isolated_vertices().first() {
            Some(v) => Err(Error::Precondition(format!("vertex {v} is isolated"))),
            None => Ok(()),
        }
    }

    fn require_order(&self, min: usize) -> Result<()> {
        if self.n() < min {
            Err(Error::Precondition(format!("graph needs at least {min} vertices")))
        } else {
            Ok(())
        }
    }
}

/// `α(G) + μ(G) = |V(G)|`.
pub fn is_koenig_egervary(g: &Graph, limits: &Limits) -> Result<bool> {
    Ok(stability_number(g, limits)? + maximum_matching(g).size() == g.order())
}

/// `G = S * H`: a maximum stable set `S`, the rest `H = G[V - S]`, and a
/// matching of size `|V(H)| = μ(G)` inside the cut `(S, V - S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeDecomposition {
    pub s: VertexSet,
    pub h_vertices: VertexSet,
    pub matching_into_s: Vec<Edge>,
}

impl KeDecomposition {
    pub fn is_valid(&self, g: &Graph, fam: &StableSetFamily, mu: usize) -> bool {
        let Ok(cut) = g.cut_edges(&self.s, &self.h_vertices) else {
            return false;
        };
        let covered: VertexSet = self.matching_into_s.iter().flat_map(|e| [e.0, e.1]).collect();
        fam.contains(&self.s)
            && self.s.union(&self.h_vertices) == VertexSet::full(g.order())
            && self.h_vertices.len() == mu
            && self.s.len() >= mu
            && self.matching_into_s.len() == self.h_vertices.len()
            && covered.len() == 2 * self.matching_into_s.len()
            && self.matching_into_s.iter().all(|&e| cut.contains(e))
    }
}

/// Decomposition of a connected König-Egerváry graph, using the first
/// maximum stable set and the canonical maximum matching as witness.
pub fn decompose(facts: &Facts) -> Result<KeDecomposition> {
    facts.require_ke()?;
    let comps = facts.graph.connected_components().len();
    if comps > 1 {
        return Err(Error::Disconnected(comps));
    }
    decompose_unchecked(facts)
}

fn decompose_unchecked(facts: &Facts) -> Result<KeDecomposition> {
    let s = facts.family.sets[0].clone();
    let h = s.complement(facts.n());
    let d = KeDecomposition {
        matching_into_s: facts.matching.pairs(),
        s,
        h_vertices: h,
    };
    if d.is_valid(&facts.graph, &facts.family, facts.mu()) {
        Ok(d)
    } else {
        Err(Error::Precondition(format!(
            "maximum matching does not lie inside the cut of {}",
            d.s
        )))
    }
}

/// Decomposes each component separately and reports the pieces in the ids
/// of the whole graph, ordered by component.
pub fn decompose_components(facts: &Facts) -> Result<Vec<KeDecomposition>> {
    facts.require_ke()?;
    let mut out = Vec::new();
    for comp in facts.graph.connected_components() {
        let (sub, map) = facts.graph.induced_subgraph(&comp)?;
        let d = decompose_unchecked(&Facts::new(&sub, &facts.limits)?)?;
        out.push(KeDecomposition {
            s: map.backward(&d.s),
            h_vertices: map.backward(&d.h_vertices),
            matching_into_s: d
                .matching_into_s
                .iter()
                .map(|e| Edge::new(map.new_to_old[e.0], map.new_to_old[e.1]))
                .collect(),
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaPlusClass {
    /// Core is empty.
    Alpha0Plus,
    /// Core is a single vertex.
    Alpha1Plus,
    NotStable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityClass {
    pub class: AlphaPlusClass,
    /// For `not_stable`: two core vertices; adding this edge lowers α.
    pub witness: Option<Edge>,
}

impl StabilityClass {
    pub fn is_alpha_plus(&self) -> bool {
        self.class != AlphaPlusClass::NotStable
    }
}

/// Classification by core size, with the drop in α re-verified on the
/// witness edge for unstable graphs.
pub fn classify_alpha_plus(facts: &Facts) -> Result<StabilityClass> {
    let core = &facts.cores.core;
    match core.len() {
        0 => Ok(StabilityClass {
            class: AlphaPlusClass::Alpha0Plus,
            witness: None,
        }),
        1 => Ok(StabilityClass {
            class: AlphaPlusClass::Alpha1Plus,
            witness: None,
        }),
        _ => {
            let (u, v) = (core.as_slice()[0], core.as_slice()[1]);
            let after = stability_number(&facts.graph.with_edge(u, v)?, &facts.limits)?;
            if after >= facts.alpha() {
                return Err(Error::Precondition(format!(
                    "core pair {u}-{v} does not lower the stability number"
                )));
            }
            Ok(StabilityClass {
                class: AlphaPlusClass::NotStable,
                witness: Some(Edge(u, v)),
            })
        }
    }
}

/// The definition itself: the first non-edge whose addition lowers α, or
/// `None` when the graph is α⁺-stable.
pub fn alpha_drop_witness(g: &Graph, limits: &Limits) -> Result<Option<Edge>> {
    let alpha = stability_number(g, limits)?;
    for e in g.complement_non_edges() {
        if stability_number(&g.with_edge(e.0, e.1)?, limits)? < alpha {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

pub fn is_alpha_plus_stable(g: &Graph, limits: &Limits) -> Result<bool> {
    Ok(alpha_drop_witness(g, limits)?.is_none())
}

/// For a König-Egerváry graph: α⁺-stable iff it has a perfect matching and
/// at most one vertex lies in no maximum stable set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeCriterionVerdict {
    pub alpha_plus: bool,
    pub has_pm: bool,
    pub anticore_size: usize,
    pub criterion: bool,
    pub agrees: bool,
}

/// An isolated vertex breaks the criterion (`K1 + C4` is α⁺-stable without
/// a perfect matching), so such graphs are refused.
pub fn check_alpha_plus_ke(facts: &Facts) -> Result<KeCriterionVerdict> {
    facts.require_ke()?;
    facts.require_no_isolated()?;
    let alpha_plus = is_alpha_plus_stable(&facts.graph, &facts.limits)?;
    let has_pm = facts.has_pm();
    let criterion = has_pm && facts.cores.anticore_size <= 1;
    Ok(KeCriterionVerdict {
        alpha_plus,
        has_pm,
        anticore_size: facts.cores.anticore_size,
        criterion,
        agrees: alpha_plus == criterion,
    })
}

/// Three statements about a König-Egerváry graph of order at least two:
///
/// - `i`: α⁺-stable (by the definition);
/// - `ii`: anticore empty, or anticore a single vertex and a perfect matching;
/// - `iii`: a perfect matching, and either the graph is blossom-free or
///   some edge `xy` leaves `G - {x, y}` blossom-free with a perfect matching.
///
/// `iii` as worded is refuted by `K4 - e`, so `iii_pendant` also evaluates
/// it with `xy` restricted to pendant edges; the two agreement flags are
/// reported separately. Graphs with isolated vertices are refused, as for
/// [`check_alpha_plus_ke`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaPlusCharacterization {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iii_pendant: bool,
    /// Edge making `iii` true through its second branch.
    pub iii_edge: Option<Edge>,
    pub iii_pendant_edge: Option<Edge>,
    pub agrees: bool,
    pub agrees_pendant: bool,
}

fn blossom_free_with_pm(g: &Graph, limits: &Limits) -> Result<bool> {
    let m = maximum_matching(g);
    Ok(2 * m.size() == g.order() && is_blossom_free(g, &m, limits)?)
}

pub fn check_alpha_plus_characterization(facts: &Facts) -> Result<AlphaPlusCharacterization> {
    facts.require_ke()?;
    facts.require_order(2)?;
    facts.require_no_isolated()?;
    let g = &facts.graph;
    let i = is_alpha_plus_stable(g, &facts.limits)?;
    let anticore = facts.cores.anticore_size;
    let has_pm = facts.has_pm();
    let ii = anticore == 0 || (anticore == 1 && has_pm);

    let (mut iii_edge, mut iii_pendant_edge) = (None, None);
    let mut g_blossom_free = false;
    if has_pm {
        g_blossom_free = is_blossom_free(g, &facts.matching, &facts.limits)?;
        for &e in g.edges() {
            if iii_edge.is_some() && iii_pendant_edge.is_some() {
                break;
            }
            let pendant = g.degree(e.0) == 1 || g.degree(e.1) == 1;
            if iii_edge.is_some() && !pendant {
                continue;
            }
            let h = g.delete_vertices(&VertexSet::new([e.0, e.1]))?;
            if blossom_free_with_pm(&h, &facts.limits)? {
                iii_edge.get_or_insert(e);
                if pendant {
                    iii_pendant_edge.get_or_insert(e);
                }
            }
        }
    }
    let iii = has_pm && (g_blossom_free || iii_edge.is_some());
    let iii_pendant = has_pm && (g_blossom_free || iii_pendant_edge.is_some());
    Ok(AlphaPlusCharacterization {
        i,
        ii,
        iii,
        iii_pendant,
        iii_edge,
        iii_pendant_edge,
        agrees: i == ii && ii == iii,
        agrees_pendant: i == ii && ii == iii_pendant,
    })
}

/// For a König-Egerváry graph, a perfect matching exists iff core and
/// anticore have the same size. Refuses other graphs, where the equality
/// says nothing.
pub fn pm_via_core(facts: &Facts) -> Result<bool> {
    facts.require_ke()?;
    Ok(facts.cores.core_size == facts.cores.anticore_size)
}

/// `N(core)` next to the anticore; meaningful for any graph.
pub fn core_neighborhood(facts: &Facts) -> Result<(VertexSet, VertexSet)> {
    Ok((
        facts.graph.neighborhood(&facts.cores.core)?,
        facts.cores.anticore.clone(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreNeighborhoodVerdict {
    pub neighborhood_of_core: VertexSet,
    pub anticore: VertexSet,
    /// `N(core) = anticore`.
    pub neighborhood_is_anticore: bool,
    /// `m` pairs every vertex of `N(core)` with a core vertex.
    pub matched_into_core: bool,
}

pub fn check_core_neighborhood(facts: &Facts, m: &Matching) -> Result<CoreNeighborhoodVerdict> {
    facts.require_ke()?;
    ensure_maximum(&facts.graph, m)?;
    let (nb, anticore) = core_neighborhood(facts)?;
    let matched_into_core = nb
        .iter()
        .all(|x| m.mate(x).is_some_and(|y| facts.cores.core.contains(y)));
    Ok(CoreNeighborhoodVerdict {
        neighborhood_is_anticore: nb == anticore,
        neighborhood_of_core: nb,
        anticore,
        matched_into_core,
    })
}

/// Anticore empty iff perfect matching and blossom-free, for a
/// König-Egerváry graph of order at least two. Blossom-freeness is judged
/// against the canonical maximum matching. Refuses graphs with isolated
/// vertices: `K1 + C4` has an empty anticore and no perfect matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnticoreCriterionVerdict {
    pub anticore_empty: bool,
    pub has_pm: bool,
    pub blossom_free: bool,
    pub agrees: bool,
}

pub fn check_anticore_criterion(facts: &Facts) -> Result<AnticoreCriterionVerdict> {
    facts.require_ke()?;
    facts.require_order(2)?;
    facts.require_no_isolated()?;
    let anticore_empty = facts.cores.anticore.is_empty();
    let has_pm = facts.has_pm();
    let blossom_free = is_blossom_free(&facts.graph, &facts.matching, &facts.limits)?;
    Ok(AnticoreCriterionVerdict {
        anticore_empty,
        has_pm,
        blossom_free,
        agrees: anticore_empty == (has_pm && blossom_free),
    })
}

/// `α(G - v) < α(G)`.
pub fn is_alpha_critical(g: &Graph, v: usize, limits: &Limits) -> Result<bool> {
    g.check_vertex(v)?;
    let alpha = stability_number(g, limits)?;
    let without = stability_number(&g.delete_vertices(&VertexSet::new([v]))?, limits)?;
    Ok(without < alpha)
}

/// Three statements about pendant vertices on a graph of order at least two:
///
/// - `i`: the pendant edges form a perfect matching;
/// - `ii`: exactly α pendant vertices, none of them α-critical;
/// - `iii`: König-Egerváry, α⁺-stable, and exactly α pendant vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PendantVerdict {
    pub pendant_vertices: VertexSet,
    pub alpha_critical_pendants: VertexSet,
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub agrees: bool,
}

pub fn pendant_characterization(facts: &Facts) -> Result<PendantVerdict> {
    facts.require_order(2)?;
    let g = &facts.graph;
    let pendants = g.pendant_vertices();
    let pendant_edges: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| pendants.contains(e.0) || pendants.contains(e.1))
        .collect();
    let i = Matching::from_pairs(g, pendant_edges.iter().map(|e| (e.0, e.1))).is_ok_and(|m| 2 * m.size() == g.order());

    let mut critical = Vec::new();
    for v in pendants.iter() {
        if is_alpha_critical(g, v, &facts.limits)? {
            critical.push(v);
        }
    }
    let critical = VertexSet::new(critical);
    let alpha = stability_number(g, &facts.limits)?;
    let ii = pendants.len() == alpha && critical.is_empty();
    let ke = is_koenig_egervary(g, &facts.limits)?;
    let iii = ke && pendants.len() == alpha && is_alpha_plus_stable(g, &facts.limits)?;
    Ok(PendantVerdict {
        pendant_vertices: pendants,
        alpha_critical_pendants: critical,
        i,
        ii,
        iii,
        agrees: i == ii && ii == iii,
    })
}

/// Lower bounds on the core: a König-Egerváry graph with `α > n/2`, and a
/// bipartite graph with unequal sides, both have at least two core vertices.
/// `None` marks a bound whose hypothesis does not hold; neither applies to a
/// graph with an isolated vertex (`K1 + K2` has a one-vertex core).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreBoundsVerdict {
    pub large_alpha: Option<bool>,
    pub unbalanced_bipartite: Option<bool>,
}

pub fn check_core_lower_bounds(facts: &Facts) -> Result<CoreBoundsVerdict> {
    let n = facts.n();
    let core = facts.cores.core_size;
    let isolated = !facts.graph.isolated_vertices().is_empty();
    let large_alpha = (n >= 2 && !isolated && facts.is_ke() && 2 * facts.alpha() > n).then_some(core >= 2);
    let unbalanced_bipartite = facts
        .graph
        .bipartition()
        .filter(|(a, b)| !isolated && a.len() != b.len())
        .map(|_| core >= 2);
    Ok(CoreBoundsVerdict {
        large_alpha,
        unbalanced_bipartite,
    })
}
