//! Exact stability number, the family of all maximum stable sets, cores and
//! anticores, and the matching-based certificate and extension for maximum
//! stable sets of König-Egerváry graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::limits::Limits;
use crate::matching::{ensure_maximum, is_perfect, Matching};

/// All maximum stable sets of a graph, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableSetFamily {
    pub alpha: usize,
    pub sets: Vec<VertexSet>,
}

impl StableSetFamily {
    pub fn contains(&self, s: &VertexSet) -> bool {
        self.sets.binary_search(s).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreReport {
    /// Vertices in every maximum stable set.
    pub core: VertexSet,
    /// Vertices in no maximum stable set.
    pub anticore: VertexSet,
    pub core_size: usize,
    pub anticore_size: usize,
}

fn max_stable_size(adj: &[u64], cand: u64, size: u32, best: &mut u32) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() <= *best {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u64 << v;
    max_stable_size(adj, cand & !bit & !adj[v], size + 1, best);
    // a vertex with no candidate neighbour belongs to every optimum below here
    if adj[v] & cand != 0 {
        max_stable_size(adj, cand & !bit, size, best);
    }
}

fn all_max_stable(adj: &[u64], cand: u64, cur: u64, best: &mut u32, out: &mut Vec<u64>) {
    let size = cur.count_ones();
    if cand == 0 {
        if size > *best {
            *best = size;
            out.clear();
        }
        if size == *best {
            out.push(cur);
        }
        return;
    }
    if size + cand.count_ones() < *best {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u64 << v;
    all_max_stable(adj, cand & !bit & !adj[v], cur | bit, best, out);
    if adj[v] & cand != 0 {
        all_max_stable(adj, cand & !bit, cur, best, out);
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// `α(G)` by branch and bound over vertices in ascending order.
pub fn stability_number(g: &Graph, limits: &Limits) -> Result<usize> {
    limits.check("stability number", g.order(), limits.alpha_cap.min(64))?;
    let adj = g.neighbor_masks();
    let mut best = 0;
    max_stable_size(&adj, full_mask(g.order()), 0, &mut best);
    Ok(best as usize)
}

/// `Ω(G)`: every maximum stable set. The empty graph gives `{∅}`.
pub fn enumerate_omega(g: &Graph, limits: &Limits) -> Result<StableSetFamily> {
    limits.check("maximum stable set enumeration", g.order(), limits.omega_cap.min(64))?;
    let adj = g.neighbor_masks();
    let mut best = 0;
    let mut out = Vec::new();
    all_max_stable(&adj, full_mask(g.order()), 0, &mut best, &mut out);
    let mut sets: Vec<VertexSet> = out.into_iter().map(VertexSet::from_mask).collect();
    sets.sort();
    Ok(StableSetFamily {
        alpha: best as usize,
        sets,
    })
}

/// Core and anticore of a family over the vertex range `0..n`.
pub fn core_report(fam: &StableSetFamily, n: usize) -> Result<CoreReport> {
    let (first, rest) = fam.sets.split_first().ok_or(Error::EmptyFamily)?;
    let mut core = first.clone();
    let mut covered = first.clone();
    for s in rest {
        core = core.intersection(s);
        covered = covered.union(s);
    }
    let anticore = covered.complement(n);
    Ok(CoreReport {
        core_size: core.len(),
        anticore_size: anticore.len(),
        core,
        anticore,
    })
}

/// Outcome of the matching certificate for a stable set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Certification {
    Certified,
    MissesExposedVertex { vertex: usize },
    MissesMatchedEdge { edge: Edge },
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified)
    }
}

/// For a König-Egerváry graph (asserted by the caller) and a maximum
/// matching `m`, a stable `s` is maximum exactly when it contains every
/// exposed vertex and exactly one endpoint of every heavy edge.
pub fn certify_max_stable(g: &Graph, m: &Matching, s: &VertexSet) -> Result<Certification> {
    g.check_set(s)?;
    if let Some(e) = g.edge_inside(s) {
        return Err(Error::NotStable(e.0, e.1));
    }
    ensure_maximum(g, m)?;
    if let Some(v) = m.exposed().iter().find(|&v| !s.contains(v)) {
        return Ok(Certification::MissesExposedVertex { vertex: v });
    }
    // both endpoints in s is impossible for a stable s
    if let Some(e) = m.pairs().into_iter().find(|e| !s.contains(e.0) && !s.contains(e.1)) {
        return Ok(Certification::MissesMatchedEdge { edge: e });
    }
    Ok(Certification::Certified)
}

/// Trace of the alternating saturation that moves a maximum stable set onto
/// a chosen vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extension {
    /// `A_1, A_2, ...`: fresh vertices of `S` reached at each round.
    pub a_layers: Vec<VertexSet>,
    /// `B_i`: the matching partners of `A_i`.
    pub b_layers: Vec<VertexSet>,
    /// `B ∪ (S - A)`.
    pub set: VertexSet,
}

/// Given a perfect matching `m` of a König-Egerváry graph, a maximum stable
/// set `s` and a vertex `b` outside it, builds a maximum stable set through
/// `b`:
///
/// `A_1 = N(b) ∩ S`, `B_i = m(A_i)`, `A_{i+1} = N(B_i) ∩ S - (A_1 ∪ ... ∪ A_i)`
///
/// until no fresh vertex appears, then returns `B ∪ (S - A)`. An edge inside
/// `B` means `m` has a blossom and is reported as [`Error::BlossomClosed`].
pub fn extend_stable_through_matching(
    g: &Graph,
    m: &Matching,
    s: &VertexSet,
    b: usize,
    limits: &Limits,
) -> Result<Extension> {
    g.check_vertex(b)?;
    g.check_set(s)?;
    if !is_perfect(g, m)? {
        return Err(Error::Precondition("matching is not perfect".into()));
    }
    if let Some(e) = g.edge_inside(s) {
        return Err(Error::NotStable(e.0, e.1));
    }
    let alpha = stability_number(g, limits)?;
    if alpha + m.size() != g.order() {
        return Err(Error::NotKoenigEgervary);
    }
    if s.len() != alpha {
        return Err(Error::Precondition(format!(
            "stable set has size {}, not the stability number {alpha}",
            s.len()
        )));
    }
    if s.contains(b) {
        return Err(Error::Precondition(format!("vertex {b} already lies in S")));
    }

    let single = VertexSet::new([b]);
    let mut a_layers = Vec::new();
    let mut b_layers = Vec::new();
    let mut a_all = VertexSet::empty();
    let mut b_all = VertexSet::empty();
    let mut frontier = single;
    loop {
        let fresh = g.neighborhood(&frontier)?.intersection(s).difference(&a_all);
        if fresh.is_empty() {
            break;
        }
        let partners = m.partners(&fresh);
        a_all = a_all.union(&fresh);
        b_all = b_all.union(&partners);
        a_layers.push(fresh);
        b_layers.push(partners.clone());
        frontier = partners;
    }
    let rest = s.difference(&a_all);
    // the saturation stop and the empty cut (B, S - A) are the same event
    assert!(
        g.cut_edges(&b_all, &rest)?.is_empty(),
        "saturation stopped with an edge between B and S - A"
    );
    if let Some(e) = g.edge_inside(&b_all) {
        return Err(Error::BlossomClosed(e.0, e.1));
    }
    let set = b_all.union(&rest);
    match certify_max_stable(g, m, &set)? {
        Certification::Certified => Ok(Extension {
            a_layers,
            b_layers,
            set,
        }),
        other => Err(Error::Precondition(format!(
            "extension failed certification: {other:?}"
        ))),
    }
}

/// `α(G + uv)` for a non-edge `uv`.
pub fn alpha_after_edge_addition(g: &Graph, u: usize, v: usize, limits: &Limits) -> Result<usize> {
    stability_number(&g.with_edge(u, v)?, limits)
}
