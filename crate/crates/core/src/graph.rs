//! Immutable simple undirected graphs over dense vertex ids `0..n`.
//!
//! Every derived graph (`G - W`, `G + e`, `G[X]`) is a fresh value; nothing
//! here mutates a graph after construction.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Edge {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint opposite to `v`, if `v` is an endpoint.
    pub fn other(&self, v: usize) -> Option<usize> {
        if self.0 == v {
            Some(self.1)
        } else if self.1 == v {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> VertexSet {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> VertexSet {
        VertexSet(Vec::new())
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> VertexSet {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        let mut out = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            out.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        VertexSet(out)
    }

    /// Bit mask of the members; every member must be below 64.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &v| {
            assert!(v < 64, "vertex {v} does not fit a 64-bit mask");
            acc | (1u64 << v)
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// `0..n` minus this set.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn with(&self, v: usize) -> VertexSet {
        VertexSet::new(self.iter().chain(std::iter::once(v)))
    }

    pub fn without(&self, v: usize) -> VertexSet {
        VertexSet(self.iter().filter(|&u| u != v).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A sorted, duplicate-free set of edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new<I: IntoIterator<Item = Edge>>(edges: I) -> EdgeSet {
        let mut v: Vec<Edge> = edges.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }
}

/// Bookkeeping for `G[X]`: where each old vertex went, and back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Relabeling {
    pub fn is_identity(&self) -> bool {
        self.old_to_new.len() == self.new_to_old.len() && self.new_to_old.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Every surviving vertex kept its id (only the highest ids were removed).
    pub fn preserves_ids(&self) -> bool {
        self.new_to_old.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Maps a set of old ids that all survived into new ids.
    pub fn forward(&self, set: &VertexSet) -> Option<VertexSet> {
        set.iter()
            .map(|v| self.old_to_new.get(v).copied().flatten())
            .collect::<Option<Vec<_>>>()
            .map(VertexSet::new)
    }

    pub fn backward(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.new_to_old[v]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a simple graph, rejecting loops, repeated edges and ids
    /// outside `0..n`.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Graph> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push(Edge::new(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted(n, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> Range<usize> {
        0..self.n
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<()> {
        match x.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// `G + e` for a non-edge `e`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent(u.min(v), u.max(v)));
        }
        let mut edges = self.edges.clone();
        let e = Edge::new(u, v);
        let at = edges.binary_search(&e).unwrap_err();
        edges.insert(at, e);
        Ok(Graph::from_sorted(self.n, edges))
    }

    /// `G[X]`, with vertices of `x` renumbered in ascending order.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, Relabeling)> {
        self.check_set(x)?;
        let mut old_to_new = vec![None; self.n];
        for (i, v) in x.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| match (old_to_new[e.0], old_to_new[e.1]) {
                (Some(a), Some(b)) => Some(Edge::new(a, b)),
                _ => None,
            })
            .collect();
        let relabel = Relabeling {
            old_to_new,
            new_to_old: x.as_slice().to_vec(),
        };
        Ok((Graph::from_sorted(x.len(), edges), relabel))
    }

    /// `G - W = G[V - W]`.
    pub fn delete_vertices(&self, w: &VertexSet) -> Result<Graph> {
        self.check_set(w)?;
        Ok(self.induced_subgraph(&w.complement(self.n))?.0)
    }

    /// Open neighbourhood `N(X)`; may intersect `X`.
    pub fn neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        Ok(x.iter().flat_map(|v| self.adj[v].iter().copied()).collect())
    }

    /// `(A, B)`: the edges with one endpoint in each of two disjoint sets.
    pub fn cut_edges(&self, a: &VertexSet, b: &VertexSet) -> Result<EdgeSet> {
        self.check_set(a)?;
        self.check_set(b)?;
        if let Some(v) = a.iter().find(|&v| b.contains(v)) {
            return Err(Error::OverlappingSets(v));
        }
        Ok(EdgeSet::new(self.edges.iter().copied().filter(|e| {
            (a.contains(e.0) && b.contains(e.1)) || (a.contains(e.1) && b.contains(e.0))
        })))
    }

    /// Edges of the complement graph, lexicographically.
    pub fn complement_non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut nb = self.adj[u].iter().peekable();
            for v in u + 1..self.n {
                while nb.peek().is_some_and(|&&w| w < v) {
                    nb.next();
                }
                if nb.peek() != Some(&&v) {
                    out.push(Edge(u, v));
                }
            }
        }
        out
    }

    /// Components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// A 2-colouring `(A, B)` if the graph is bipartite; the smallest vertex
    /// of every component goes to `A`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| color[v] == Some(false)).collect();
        let b = (0..self.n).filter(|&v| color[v] == Some(true)).collect();
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The first edge with both endpoints in `s`, if any.
    pub fn edge_inside(&self, s: &VertexSet) -> Option<Edge> {
        s.iter()
            .flat_map(|u| self.adj[u].iter().map(move |&v| (u, v)))
            .find(|&(u, v)| u < v && s.contains(v))
            .map(|(u, v)| Edge(u, v))
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        self.edge_inside(s).is_none()
    }

    /// Vertices of degree one.
    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices of degree zero.
    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Closed-neighbourhood-free adjacency masks; only for `n <= 64`.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bit-set oracles support at most 64 vertices");
        self.adj
            .iter()
            .map(|nb| nb.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|e| Edge(e.0 + shift, e.1 + shift)))
            .collect();
        Graph::from_sorted(self.n + other.n, edges)
    }

    /// Adds a batch of new edges, rejecting ones already present.
    pub fn with_edges<I: IntoIterator<Item = (usize, usize)>>(&self, extra: I) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().map(|e| (e.0, e.1)).chain(extra))
    }

    /// Same edges on `n + k` vertices.
    pub fn with_isolated(&self, k: usize) -> Graph {
        Graph::from_sorted(self.n + k, self.edges.clone())
    }
}
