//! Matchings and Edmonds' blossom-shrinking maximum matching.

use std::collections::VecDeque;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::limits::Limits;

/// A set of pairwise non-incident edges of a host graph, stored as a mate
/// table. Matched edges are *heavy*, all other edges *light*.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pairs().serialize(s)
    }
}

impl Matching {
    pub fn empty(n: usize) -> Matching {
        Matching { mate: vec![None; n] }
    }

    /// Builds a matching of `g`, checking that every pair is an edge and no
    /// vertex is used twice.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(g: &Graph, pairs: I) -> Result<Matching> {
        let mut mate = vec![None; g.order()];
        for (u, v) in pairs {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(Error::MissingEdge(u.min(v), u.max(v)));
            }
            for w in [u, v] {
                if mate[w].is_some() {
                    return Err(Error::InvalidMatching(format!("vertex {w} covered twice")));
                }
            }
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        Ok(Matching { mate })
    }

    pub(crate) fn from_mate(mate: Vec<Option<usize>>) -> Matching {
        Matching { mate }
    }

    /// Checks this matching against a host graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.mate.len() != g.order() {
            return Err(Error::InvalidMatching(format!(
                "mate table has {} entries, graph has {} vertices",
                self.mate.len(),
                g.order()
            )));
        }
        for (u, m) in self.mate.iter().enumerate() {
            if let Some(v) = *m {
                if self.mate.get(v).copied().flatten() != Some(u) {
                    return Err(Error::InvalidMatching(format!("asymmetric mate at {u}")));
                }
                if !g.has_edge(u, v) {
                    return Err(Error::MissingEdge(u.min(v), u.max(v)));
                }
            }
        }
        Ok(())
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate.get(v).copied().flatten()
    }

    pub fn is_covered(&self, v: usize) -> bool {
        self.mate(v).is_some()
    }

    pub fn is_heavy(&self, u: usize, v: usize) -> bool {
        self.mate(u) == Some(v)
    }

    pub fn order(&self) -> usize {
        self.mate.len()
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    /// Heavy edges in lexicographic order.
    pub fn pairs(&self) -> Vec<Edge> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| Edge(u, v)))
            .collect()
    }

    /// Vertices covered by no heavy edge (no validation; see
    /// [`exposed_vertices`]).
    pub fn exposed(&self) -> VertexSet {
        (0..self.mate.len()).filter(|&v| self.mate[v].is_none()).collect()
    }

    /// Partners of the given vertices; unmatched vertices are skipped.
    pub fn partners(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.mate(v)).collect()
    }
}

pub fn exposed_vertices(g: &Graph, m: &Matching) -> Result<VertexSet> {
    m.validate(g)?;
    Ok(m.exposed())
}

pub fn is_perfect(g: &Graph, m: &Matching) -> Result<bool> {
    Ok(exposed_vertices(g, m)?.is_empty())
}

pub fn is_near_perfect(g: &Graph, m: &Matching) -> Result<bool> {
    Ok(exposed_vertices(g, m)?.len() == 1)
}

/// Errors unless `m` is a matching of `g` of maximum cardinality.
pub fn ensure_maximum(g: &Graph, m: &Matching) -> Result<()> {
    m.validate(g)?;
    let maximum = maximum_matching(g).size();
    if m.size() != maximum {
        return Err(Error::NotMaximum {
            size: m.size(),
            maximum,
        });
    }
    Ok(())
}

const NONE: usize = usize::MAX;

/// Edmonds' blossom-shrinking search. Roots are tried in ascending id order
/// and neighbours scanned in ascending order, so the result is a fixed
/// function of the graph.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut search = Edmonds::new(g);
    for root in 0..g.order() {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    Matching::from_mate(search.mate.into_iter().map(|m| (m != NONE).then_some(m)).collect())
}

struct Edmonds<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Edmonds<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Edmonds {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: shrink it onto its base
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Every maximum matching of `g`, by exhaustive search. Exponential; gated
/// by `limits.omega_cap`.
pub fn all_maximum_matchings(g: &Graph, limits: &Limits) -> Result<Vec<Matching>> {
    limits.check("maximum-matching enumeration", g.order(), limits.omega_cap)?;
    let target = maximum_matching(g).size();
    let mut mate = vec![None; g.order()];
    let mut out = Vec::new();
    enumerate_matchings(g, 0, 0, target, &mut mate, &mut out);
    Ok(out)
}

fn enumerate_matchings(
    g: &Graph,
    from: usize,
    size: usize,
    target: usize,
    mate: &mut Vec<Option<usize>>,
    out: &mut Vec<Matching>,
) {
    let n = g.order();
    let Some(v) = (from..n).find(|&v| mate[v].is_none()) else {
        if size == target {
            out.push(Matching::from_mate(mate.clone()));
        }
        return;
    };
    // at most (free vertices after v) / 2 more edges fit
    let free = (v..n).filter(|&w| mate[w].is_none()).count();
    if size + free / 2 < target {
        return;
    }
    for &w in g.neighbors(v) {
        if w > v && mate[w].is_none() {
            mate[v] = Some(w);
            mate[w] = Some(v);
            enumerate_matchings(g, v + 1, size + 1, target, mate, out);
            mate[v] = None;
            mate[w] = None;
        }
    }
    enumerate_matchings(g, v + 1, size, target, mate, out);
}

/// Matching number by exhaustive branching, independent of the blossom
/// algorithm. Exponential; gated by `limits.alpha_cap`.
pub fn matching_number_exhaustive(g: &Graph, limits: &Limits) -> Result<usize> {
    limits.check("exhaustive matching number", g.order(), limits.alpha_cap)?;
    let adj = g.neighbor_masks();
    Ok(best_matching(&adj, (1u64 << g.order()) - 1))
}

fn best_matching(adj: &[u64], free: u64) -> usize {
    // lowest free vertex with a free neighbour: either unmatched or matched to one
    let mut rest = free;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut nb = adj[v] & free;
        if nb == 0 {
            continue;
        }
        let without_v = free & !(1u64 << v);
        let mut best = best_matching(adj, without_v);
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            best = best.max(1 + best_matching(adj, without_v & !(1u64 << w)));
        }
        return best;
    }
    0
}
