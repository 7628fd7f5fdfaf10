//! Brute-force oracles written without the library's algorithms: plain
//! subset scans over `u64` masks. Only for graphs on at most ~14 vertices.
#![allow(dead_code)]

use koenig::Graph;

pub struct Brute {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl Brute {
    pub fn new(g: &Graph) -> Brute {
        let n = g.order();
        let mut adj = vec![0u64; n];
        for e in g.edges() {
            adj[e.0] |= 1 << e.1;
            adj[e.1] |= 1 << e.0;
        }
        Brute { n, adj }
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Brute {
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Brute { n: self.n, adj }
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn is_stable(&self, s: u64) -> bool {
        (0..self.n).all(|v| s >> v & 1 == 0 || self.adj[v] & s == 0)
    }

    /// Every stable set, ascending: each vertex is taken or skipped, and a
    /// vertex is only taken when no earlier taken vertex is adjacent.
    pub fn stable_sets(&self) -> Vec<u64> {
        fn go(b: &Brute, v: usize, s: u64, out: &mut Vec<u64>) {
            if v == b.n {
                out.push(s);
                return;
            }
            go(b, v + 1, s, out);
            if b.adj[v] & s == 0 {
                go(b, v + 1, s | 1 << v, out);
            }
        }
        let mut out = Vec::new();
        go(self, 0, 0, &mut out);
        out.sort_unstable();
        out
    }

    pub fn alpha(&self) -> usize {
        self.stable_sets()
            .iter()
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Maximum stable sets as masks, ascending.
    pub fn omega(&self) -> Vec<u64> {
        let stable = self.stable_sets();
        let alpha = stable.iter().map(|s| s.count_ones()).max().unwrap_or(0);
        stable.into_iter().filter(|s| s.count_ones() == alpha).collect()
    }

    pub fn core(&self) -> u64 {
        self.omega().into_iter().fold(self.full(), |a, s| a & s)
    }

    pub fn anticore(&self) -> u64 {
        self.omega().into_iter().fold(self.full(), |a, s| a & !s)
    }

    /// Matching number by exhaustive recursion: the lowest free vertex is
    /// either left out or matched to a free neighbour.
    pub fn mu(&self) -> usize {
        fn go(adj: &[u64], free: u64) -> usize {
            if free == 0 {
                return 0;
            }
            let v = free.trailing_zeros() as usize;
            let rest = free & !(1 << v);
            let mut best = go(adj, rest);
            let mut nb = adj[v] & rest;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                best = best.max(1 + go(adj, rest & !(1 << w)));
            }
            best
        }
        go(&self.adj, self.full())
    }

    pub fn is_ke(&self) -> bool {
        self.alpha() + self.mu() == self.n
    }

    pub fn has_pm(&self) -> bool {
        2 * self.mu() == self.n
    }

    /// α⁺-stable straight from the definition.
    pub fn alpha_plus(&self) -> bool {
        let alpha = self.alpha();
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.adj[u] >> v & 1 == 1 || self.with_edge(u, v).alpha() == alpha))
    }

    pub fn neighborhood(&self, s: u64) -> u64 {
        (0..self.n).filter(|&v| s >> v & 1 == 1).fold(0, |a, v| a | self.adj[v])
    }

    /// Every maximum matching, as sorted pair lists.
    pub fn maximum_matchings(&self) -> Vec<Vec<(usize, usize)>> {
        fn go(b: &Brute, free: u64, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
            if free == 0 {
                out.push(cur.clone());
                return;
            }
            let v = free.trailing_zeros() as usize;
            let rest = free & !(1 << v);
            go(b, rest, cur, out);
            let mut nb = b.adj[v] & rest;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                cur.push((v, w));
                go(b, rest & !(1 << w), cur, out);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        go(self, self.full(), &mut Vec::new(), &mut all);
        let mu = all.iter().map(Vec::len).max().unwrap_or(0);
        all.retain(|m| m.len() == mu);
        all
    }

    pub fn has_isolated(&self) -> bool {
        self.adj.contains(&0)
    }
}

pub fn mask_of(vs: impl IntoIterator<Item = usize>) -> u64 {
    vs.into_iter().fold(0, |a, v| a | 1 << v)
}
