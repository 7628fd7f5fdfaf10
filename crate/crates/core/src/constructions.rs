//! Graph operations that build König-Egerváry and α⁺-stable graphs from
//! smaller ones.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Relabeling, VertexSet};
use crate::ke::{is_alpha_plus_stable, is_koenig_egervary};
use crate::limits::Limits;
use crate::matching::maximum_matching;
use crate::stable::{core_report, enumerate_omega};

/// `h1 * h2`: the disjoint union plus the `cross` edges, each given as
/// `(vertex of h1, vertex of h2)`. Vertices of `h2` are shifted by `|V(h1)|`.
pub fn join(h1: &Graph, h2: &Graph, cross: &[(usize, usize)]) -> Result<Graph> {
    let n1 = h1.order();
    if cross.is_empty() && n1 > 0 && h2.order() > 0 {
        return Err(Error::Precondition(
            "join of two nonempty graphs needs a cross edge".into(),
        ));
    }
    for &(x, y) in cross {
        h1.check_vertex(x)?;
        h2.check_vertex(y)?;
    }
    h1.disjoint_union(h2)
        .with_edges(cross.iter().map(|&(x, y)| (x, n1 + y)))
}

/// Result of [`attach_k2`]: the new pendant vertex `x` and its neighbour `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attachment {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
}

/// Adds a pendant edge `xy` where `y` is also joined to `y_edges`, which must
/// meet every maximum stable set of `g`; `g` must be König-Egerváry with an
/// empty anticore and no isolated vertices. The new vertices are `x = n` and `y = n + 1`.
pub fn attach_k2(g: &Graph, y_edges: &[usize], limits: &Limits) -> Result<Attachment> {
    let target = VertexSet::new(y_edges.iter().copied());
    g.check_set(&target)?;
    // an isolated vertex of g would join x in the core of the result
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::Precondition(format!("vertex {v} is isolated")));
    }
    if !is_koenig_egervary(g, limits)? {
        return Err(Error::NotKoenigEgervary);
    }
    let family = enumerate_omega(g, limits)?;
    let cores = core_report(&family, g.order())?;
    if !cores.anticore.is_empty() {
        return Err(Error::Precondition(format!("anticore {} is not empty", cores.anticore)));
    }
    if let Some(s) = family.sets.iter().find(|s| s.is_disjoint(&target)) {
        return Err(Error::Precondition(format!(
            "attachment set misses maximum stable set {s}"
        )));
    }
    let (x, y) = (g.order(), g.order() + 1);
    let graph = g
        .with_isolated(2)
        .with_edges(std::iter::once((x, y)).chain(target.iter().map(|v| (v, y))))?;
    Ok(Attachment { graph, x, y })
}

/// Result of [`peel`]: the removed edge (anticore vertex first) and what is
/// left, with the map back to the ids of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peeled {
    pub edge: (usize, usize),
    pub graph: Graph,
    pub relabeling: Relabeling,
}

/// Removes the unique anticore vertex and its partner under the canonical
/// perfect matching. Needs a König-Egerváry graph with a one-vertex anticore
/// and `α = μ`.
pub fn peel(g: &Graph, limits: &Limits) -> Result<Peeled> {
    let family = enumerate_omega(g, limits)?;
    let m = maximum_matching(g);
    if family.alpha + m.size() != g.order() {
        return Err(Error::NotKoenigEgervary);
    }
    if family.alpha != m.size() {
        return Err(Error::Precondition(format!(
            "stability number {} differs from matching number {}",
            family.alpha,
            m.size()
        )));
    }
    let cores = core_report(&family, g.order())?;
    if cores.anticore_size != 1 {
        return Err(Error::Precondition(format!(
            "anticore has {} vertices, expected exactly one",
            cores.anticore_size
        )));
    }
    let x = cores.anticore.as_slice()[0];
    let y = m.mate(x).expect("perfect matching covers the anticore vertex");
    let keep = VertexSet::new([x, y]).complement(g.order());
    let (graph, relabeling) = g.induced_subgraph(&keep)?;
    Ok(Peeled {
        edge: (x, y),
        graph,
        relabeling,
    })
}

/// How the clique of [`bullet_kp`] is wired to the base graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KpAttach {
    /// One clique vertex joined to both ends of an edge of a perfect
    /// matching of the base graph (`p ≤ 2`).
    MatchedEdge(usize, usize),
    /// One clique vertex joined to one base vertex (`p ≥ 3`).
    Vertex(usize),
}

/// `G • K_p` for an α⁺-stable bipartite `g`. The clique takes ids
/// `n..n + p` and vertex `n` carries the attachment edges.
pub fn bullet_kp(g: &Graph, p: usize, attach: KpAttach, limits: &Limits) -> Result<Graph> {
    if p == 0 {
        return Err(Error::Precondition("clique order must be positive".into()));
    }
    if !g.is_bipartite() {
        return Err(Error::Precondition("base graph is not bipartite".into()));
    }
    if !is_alpha_plus_stable(g, limits)? {
        return Err(Error::Precondition("base graph is not α⁺-stable".into()));
    }
    let n = g.order();
    let w: Vec<(usize, usize)> = match (attach, p) {
        (KpAttach::MatchedEdge(a, b), 1 | 2) => {
            if !g.has_edge(a, b) {
                return Err(Error::MissingEdge(a, b));
            }
            // ab lies in some perfect matching iff G - {a, b} has one
            let rest = g.delete_vertices(&VertexSet::new([a, b]))?;
            if 2 * maximum_matching(&rest).size() != rest.order() {
                return Err(Error::Precondition(format!("edge {a}-{b} is in no perfect matching")));
            }
            vec![(n, a), (n, b)]
        }
        (KpAttach::Vertex(y), p) if p >= 3 => {
            g.check_vertex(y)?;
            vec![(n, y)]
        }
        _ => {
            return Err(Error::Precondition(format!(
                "attachment {attach:?} does not fit clique order {p}"
            )))
        }
    };
    let clique = (n..n + p).flat_map(|u| (u + 1..n + p).map(move |v| (u, v)));
    g.with_isolated(p).with_edges(clique.chain(w))
}

/// An α⁺-stable graph of order `n ≥ 5` that is not König-Egerváry, with a
/// core of `variant` vertices: `K1 • K_{n-1}` (a pendant on a clique) for
/// variant 1, `K2 • K_{n-2}` for variant 0.
pub fn non_ke_alpha_plus_family(n: usize, variant: u8, limits: &Limits) -> Result<Graph> {
    if n < 5 {
        return Err(Error::Precondition(format!("order {n} is below 5")));
    }
    let base = match variant {
        1 => Graph::empty(1),
        0 => Graph::new(2, [(0, 1)])?,
        _ => return Err(Error::Precondition(format!("variant {variant} is not 0 or 1"))),
    };
    let p = n - base.order();
    bullet_kp(&base, p, KpAttach::Vertex(0), limits)
}

/// Whether `a` and `b` are the same graph after applying an injective map
/// from the ids of `a` to the ids of `b`.
pub fn same_up_to(a: &Graph, b: &Graph, map: impl Fn(usize) -> usize) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let edges: Vec<Edge> = a.edges().iter().map(|e| Edge::new(map(e.0), map(e.1))).collect();
    edges.iter().all(|e| b.has_edge(e.0, e.1))
}
