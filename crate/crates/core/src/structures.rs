//! Alternating structures relative to a matching: blossoms, flowers
//! (blossom plus stem) and posies (two blossoms joined by an odd
//! alternating path whose end edges are heavy).
//!
//! All searches are exhaustive depth-first walks over simple alternating
//! paths. Heavy steps are forced by the matching, so branching happens only
//! on light edges. Vertices and neighbours are visited in ascending order,
//! which makes every result deterministic.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::matching::{ensure_maximum, Matching};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    Blossom,
    Flower,
    Posy,
}

/// A blossom, flower or posy.
///
/// `cycle` lists the blossom as `x0, x1, ..., x2k` with `x0 == base` and
/// heavy edges `x1x2, x3x4, ..., x(2k-1)x(2k)`; the closing edge `x2k x0` is
/// light. For a flower, `path` is the stem from the exposed vertex to the
/// base (a single vertex when the base itself is exposed, flagged by
/// `empty_stem`). For a posy, `path` runs from `base` to `second_base`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlternatingStructure {
    pub kind: StructureKind,
    pub cycle: Vec<usize>,
    pub base: usize,
    pub path: Vec<usize>,
    pub second_cycle: Option<Vec<usize>>,
    pub second_base: Option<usize>,
    pub empty_stem: bool,
}

impl AlternatingStructure {
    fn blossom(cycle: Vec<usize>) -> Self {
        AlternatingStructure {
            kind: StructureKind::Blossom,
            base: cycle[0],
            cycle,
            path: Vec::new(),
            second_cycle: None,
            second_base: None,
            empty_stem: false,
        }
    }

    /// Checks the defining conditions against `g` and `m`.
    pub fn is_valid(&self, g: &Graph, m: &Matching) -> bool {
        if !is_blossom_cycle(g, m, &self.cycle) || self.cycle[0] != self.base {
            return false;
        }
        match self.kind {
            StructureKind::Blossom => self.path.is_empty() && self.second_cycle.is_none(),
            StructureKind::Flower => {
                let stem = &self.path;
                let (Some(&start), Some(&end)) = (stem.first(), stem.last()) else {
                    return false;
                };
                stem.len() % 2 == 1
                    && !m.is_covered(start)
                    && end == self.base
                    && self.empty_stem == (stem.len() == 1)
                    && is_alternating_path(g, m, stem, false)
                    && stem[..stem.len() - 1].iter().all(|v| !self.cycle.contains(v))
            }
            StructureKind::Posy => {
                let (Some(second), Some(b2)) = (&self.second_cycle, self.second_base) else {
                    return false;
                };
                let p = &self.path;
                is_blossom_cycle(g, m, second)
                    && second[0] == b2
                    && p.len().is_multiple_of(2)
                    && p.first() == Some(&self.base)
                    && p.last() == Some(&b2)
                    && is_alternating_path(g, m, p, true)
            }
        }
    }
}

fn is_simple(seq: &[usize]) -> bool {
    let mut s = seq.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

fn is_blossom_cycle(g: &Graph, m: &Matching, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 3 || len.is_multiple_of(2) || !is_simple(cycle) {
        return false;
    }
    (0..len).all(|i| {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        // edge x_i x_{i+1} is heavy exactly when i is odd; the closing edge is light
        g.has_edge(a, b) && m.is_heavy(a, b) == (i % 2 == 1 && i + 1 < len)
    })
}

fn is_alternating_path(g: &Graph, m: &Matching, path: &[usize], first_heavy: bool) -> bool {
    is_simple(path)
        && path
            .windows(2)
            .enumerate()
            .all(|(i, w)| g.has_edge(w[0], w[1]) && m.is_heavy(w[0], w[1]) == ((i % 2 == 0) == first_heavy))
}

struct Search<'a> {
    g: &'a Graph,
    m: &'a Matching,
    steps: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, m: &'a Matching, limits: &Limits) -> Result<Self> {
        limits.check("alternating-structure search", g.order(), limits.structure_cap)?;
        m.validate(g)?;
        Ok(Search {
            g,
            m,
            steps: 0,
            budget: limits.search_budget,
        })
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(Error::BudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }

    /// One light-then-heavy step out of `last`: every `(w, mate(w))` with
    /// `last w` light and both vertices fresh.
    fn steps_from(&self, last: usize, blocked: &[bool]) -> Vec<(usize, usize)> {
        self.g
            .neighbors(last)
            .iter()
            .filter(|&&w| !blocked[w] && !self.m.is_heavy(last, w))
            .filter_map(|&w| self.m.mate(w).map(|z| (w, z)))
            .filter(|&(_, z)| !blocked[z])
            .collect()
    }

    /// Depth-first growth of `x0, x1, ..., x2j` from the base. Calls `found`
    /// on each closed blossom; stops as soon as `found` returns true.
    fn grow_blossom(
        &mut self,
        path: &mut Vec<usize>,
        blocked: &mut [bool],
        found: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Result<bool> {
        self.tick()?;
        let base = path[0];
        let last = *path.last().unwrap();
        for (w, z) in self.steps_from(last, blocked) {
            path.extend([w, z]);
            blocked[w] = true;
            blocked[z] = true;
            let stop = (self.g.has_edge(z, base) && found(path)) || self.grow_blossom(path, blocked, found)?;
            blocked[w] = false;
            blocked[z] = false;
            path.truncate(path.len() - 2);
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// First blossom (in search order) with the given base, avoiding
    /// vertices marked in `avoid`.
    fn blossom_at(&mut self, base: usize, avoid: &[bool]) -> Result<Option<Vec<usize>>> {
        let mut blocked = avoid.to_vec();
        blocked[base] = true;
        let mut path = vec![base];
        let mut hit = None;
        self.grow_blossom(&mut path, &mut blocked, &mut |c| {
            hit = Some(c.to_vec());
            true
        })?;
        Ok(hit)
    }
}

/// Every blossom relative to `m`, each reported once (traversed so that
/// `x1 < x2k`), ordered by base and then by cycle.
pub fn find_blossoms(g: &Graph, m: &Matching, limits: &Limits) -> Result<Vec<AlternatingStructure>> {
    let mut search = Search::new(g, m, limits)?;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let none = vec![false; g.order()];
    for base in g.vertices() {
        let mut blocked = none.clone();
        blocked[base] = true;
        let mut path = vec![base];
        search.grow_blossom(&mut path, &mut blocked, &mut |c| {
            if c[1] < c[c.len() - 1] {
                cycles.push(c.to_vec());
            }
            false
        })?;
    }
    cycles.sort();
    Ok(cycles.into_iter().map(AlternatingStructure::blossom).collect())
}

/// Whether some blossom relative to `m` exists. Stops at the first one.
pub fn has_blossom(g: &Graph, m: &Matching, limits: &Limits) -> Result<bool> {
    let mut search = Search::new(g, m, limits)?;
    let none = vec![false; g.order()];
    for base in g.vertices() {
        if search.blossom_at(base, &none)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn is_blossom_free(g: &Graph, m: &Matching, limits: &Limits) -> Result<bool> {
    Ok(!has_blossom(g, m, limits)?)
}

/// A flower relative to the maximum matching `m`: a blossom whose base is
/// joined to an exposed vertex by an even alternating stem that meets the
/// blossom only at the base. A stem of length zero (exposed base) counts and
/// is flagged with `empty_stem`.
pub fn find_flower(g: &Graph, m: &Matching, limits: &Limits) -> Result<Option<AlternatingStructure>> {
    ensure_maximum(g, m)?;
    let mut search = Search::new(g, m, limits)?;
    let n = g.order();
    for u in m.exposed().iter() {
        let mut on_stem = vec![false; n];
        on_stem[u] = true;
        let mut stem = vec![u];
        if let Some(f) = grow_stem(&mut search, &mut stem, &mut on_stem)? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn grow_stem(
    search: &mut Search<'_>,
    stem: &mut Vec<usize>,
    on_stem: &mut [bool],
) -> Result<Option<AlternatingStructure>> {
    search.tick()?;
    let base = *stem.last().unwrap();
    on_stem[base] = false;
    let cycle = search.blossom_at(base, on_stem)?;
    on_stem[base] = true;
    if let Some(cycle) = cycle {
        return Ok(Some(AlternatingStructure {
            kind: StructureKind::Flower,
            base,
            cycle,
            path: stem.clone(),
            second_cycle: None,
            second_base: None,
            empty_stem: stem.len() == 1,
        }));
    }
    for (w, z) in search.steps_from(base, on_stem) {
        stem.extend([w, z]);
        on_stem[w] = true;
        on_stem[z] = true;
        let hit = grow_stem(search, stem, on_stem)?;
        on_stem[w] = false;
        on_stem[z] = false;
        stem.truncate(stem.len() - 2);
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

/// A posy relative to the maximum matching `m`: blossoms with bases `b1`,
/// `b2` and a simple alternating `b1`-`b2` path of odd length whose first
/// and last edges are heavy. The two blossoms may share vertices with each
/// other and with the path.
pub fn find_posy(g: &Graph, m: &Matching, limits: &Limits) -> Result<Option<AlternatingStructure>> {
    ensure_maximum(g, m)?;
    let mut search = Search::new(g, m, limits)?;
    let n = g.order();
    let none = vec![false; n];
    let mut blossom_of: Vec<Option<Vec<usize>>> = vec![None; n];
    for v in g.vertices() {
        if m.is_covered(v) {
            blossom_of[v] = search.blossom_at(v, &none)?;
        }
    }
    for b1 in g.vertices() {
        let Some(first) = blossom_of[b1].clone() else { continue };
        let p1 = m.mate(b1).expect("bases considered here are covered");
        let mut path = vec![b1, p1];
        let mut on = vec![false; n];
        on[b1] = true;
        on[p1] = true;
        if let Some(p) = grow_posy_path(&mut search, &blossom_of, &mut path, &mut on)? {
            let b2 = *p.last().unwrap();
            return Ok(Some(AlternatingStructure {
                kind: StructureKind::Posy,
                base: b1,
                cycle: first,
                path: p,
                second_cycle: blossom_of[b2].clone(),
                second_base: Some(b2),
                empty_stem: false,
            }));
        }
    }
    Ok(None)
}

fn grow_posy_path(
    search: &mut Search<'_>,
    blossom_of: &[Option<Vec<usize>>],
    path: &mut Vec<usize>,
    on: &mut [bool],
) -> Result<Option<Vec<usize>>> {
    search.tick()?;
    let end = *path.last().unwrap();
    if blossom_of[end].is_some() {
        return Ok(Some(path.clone()));
    }
    for (w, z) in search.steps_from(end, on) {
        path.extend([w, z]);
        on[w] = true;
        on[z] = true;
        let hit = grow_posy_path(search, blossom_of, path, on)?;
        on[w] = false;
        on[z] = false;
        path.truncate(path.len() - 2);
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::maximum_matching;

    fn lim() -> Limits {
        Limits::default()
    }

    fn c5() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn triangle_blossom() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let m = Matching::from_pairs(&k3, [(1, 2)]).unwrap();
        let bl = find_blossoms(&k3, &m, &lim()).unwrap();
        assert_eq!(bl.len(), 1);
        assert_eq!(bl[0].cycle, vec![0, 1, 2]);
        assert!(bl[0].is_valid(&k3, &m));
    }

    #[test]
    fn c5_flower_has_empty_stem() {
        let g = c5();
        let m = Matching::from_pairs(&g, [(1, 2), (3, 4)]).unwrap();
        let f = find_flower(&g, &m, &lim()).unwrap().unwrap();
        assert_eq!(f.base, 0);
        assert!(f.empty_stem);
        assert_eq!(f.path, vec![0]);
        assert!(f.is_valid(&g, &m));
        assert!(find_posy(&g, &m, &lim()).unwrap().is_none());
    }

    #[test]
    fn flower_with_proper_stem() {
        // triangle 2-3-4 with a pendant path 0-1-2, matching {12, 34}
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let m = Matching::from_pairs(&g, [(1, 2), (3, 4)]).unwrap();
        let f = find_flower(&g, &m, &lim()).unwrap().unwrap();
        assert_eq!(f.path, vec![0, 1, 2]);
        assert_eq!(f.base, 2);
        assert!(!f.empty_stem);
        assert!(f.is_valid(&g, &m));
    }

    #[test]
    fn two_triangles_bridged_form_a_posy() {
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let m = Matching::from_pairs(&g, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(find_flower(&g, &m, &lim()).unwrap().is_none());
        let p = find_posy(&g, &m, &lim()).unwrap().unwrap();
        assert_eq!((p.base, p.second_base), (2, Some(3)));
        assert_eq!(p.path, vec![2, 3]);
        assert!(p.is_valid(&g, &m));
    }

    #[test]
    fn bipartite_and_trees_have_nothing() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]).unwrap();
        let m = maximum_matching(&g);
        assert!(find_blossoms(&g, &m, &lim()).unwrap().is_empty());
        assert!(find_flower(&g, &m, &lim()).unwrap().is_none());
        assert!(find_posy(&g, &m, &lim()).unwrap().is_none());
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let m = maximum_matching(&c6);
        assert!(is_blossom_free(&c6, &m, &lim()).unwrap());
    }

    #[test]
    fn perfect_matching_admits_no_flower() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let m = maximum_matching(&k4);
        assert!(find_flower(&k4, &m, &lim()).unwrap().is_none());
    }

    #[test]
    fn flower_search_needs_maximum_matching() {
        let g = c5();
        let m = Matching::from_pairs(&g, [(1, 2)]).unwrap();
        assert!(matches!(find_flower(&g, &m, &lim()), Err(Error::NotMaximum { .. })));
        assert!(matches!(find_posy(&g, &m, &lim()), Err(Error::NotMaximum { .. })));
    }

    #[test]
    fn budget_is_enforced() {
        let g = c5();
        let m = Matching::from_pairs(&g, [(1, 2), (3, 4)]).unwrap();
        let tight = Limits {
            search_budget: 1,
            ..Limits::default()
        };
        assert_eq!(find_blossoms(&g, &m, &tight), Err(Error::BudgetExceeded(1)));
    }

    #[test]
    fn structure_cap_is_enforced() {
        let g = Graph::empty(30);
        let m = Matching::empty(30);
        assert!(matches!(has_blossom(&g, &m, &lim()), Err(Error::CapExceeded { .. })));
    }
}
