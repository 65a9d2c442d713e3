//! Neighbourhood structure: local bipartiteness, odd wheels, dense and sparse
//! pairs, and edge-maximal saturation.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{generate, FamilyId};
use crate::graph::Graph;
use crate::hom::find_subgraph;
use crate::vertex_set::VertexSet;

/// A centre together with an odd cycle inside its neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddWheelWitness {
    pub centre: usize,
    pub rim: Vec<usize>,
}

impl OddWheelWitness {
    /// Checks the witness against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let k = self.rim.len();
        k >= 3
            && k % 2 == 1
            && self.centre < g.n()
            && self.rim.iter().all(|&r| r < g.n() && g.has_edge(self.centre, r))
            && (0..k).all(|i| g.has_edge(self.rim[i], self.rim[(i + 1) % k]))
            && {
                let mut seen = self.rim.clone();
                seen.sort_unstable();
                seen.dedup();
                seen.len() == k
            }
    }
}

impl fmt::Display for OddWheelWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rim: Vec<String> = self.rim.iter().map(usize::to_string).collect();
        write!(f, "centre: {} rim: {}", self.centre, rim.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairClass {
    Adjacent,
    Dense,
    Sparse,
}

/// Whether `G[S]` is bipartite, by breadth-first layering on bitsets.
pub fn is_bipartite_on(g: &Graph, s: &VertexSet) -> bool {
    let mut unseen = s.clone();
    while let Some(root) = unseen.first() {
        unseen.remove(root);
        let mut sides = [VertexSet::new(g.n()), VertexSet::new(g.n())];
        sides[0].insert(root);
        let mut frontier = sides[0].clone();
        let mut p = 0;
        while !frontier.is_empty() {
            let mut reach = VertexSet::new(g.n());
            for f in &frontier {
                reach.union_with(g.neighbours(f));
            }
            reach.intersect_with(s);
            if reach.intersects(&sides[p]) {
                return false;
            }
            reach.intersect_with(&unseen);
            unseen.difference_with(&reach);
            sides[1 - p].union_with(&reach);
            frontier = reach;
            p = 1 - p;
        }
    }
    true
}

/// A shortest odd cycle of `G[S]`, or `None` when `G[S]` is bipartite.
pub fn shortest_odd_cycle(g: &Graph, s: &VertexSet) -> Option<Vec<usize>> {
    let mut best: Option<(usize, usize, usize, usize)> = None;
    for root in s {
        let (level, _) = bfs_within(g, s, root);
        for x in s {
            let Some(lx) = level[x] else { continue };
            for y in g.neighbours(x).intersection(s).iter().filter(|&y| y > x) {
                if level[y] == Some(lx) && best.is_none_or(|b| 2 * lx + 1 < b.0) {
                    best = Some((2 * lx + 1, root, x, y));
                }
            }
        }
    }
    let (_, root, x, y) = best?;
    let (_, parent) = bfs_within(g, s, root);
    let path_to = |mut v: usize| {
        let mut p = vec![v];
        while v != root {
            v = parent[v];
            p.push(v);
        }
        p
    };
    // root .. x then y .. (back to root)
    let mut cycle: Vec<usize> = path_to(x).into_iter().rev().collect();
    let py = path_to(y);
    cycle.extend(py[..py.len() - 1].iter().copied());
    Some(cycle)
}

fn bfs_within(g: &Graph, s: &VertexSet, root: usize) -> (Vec<Option<usize>>, Vec<usize>) {
    let mut level = vec![None; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    level[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let lv = level[v].expect("queued vertices are levelled");
        for w in g.neighbours(v).intersection(s).iter() {
            if level[w].is_none() {
                level[w] = Some(lv + 1);
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    (level, parent)
}

fn neighbourhood_is_bipartite(g: &Graph, v: usize) -> bool {
    is_bipartite_on(g, g.neighbours(v))
}

/// An odd wheel of `g`, with the shortest odd rim at the first offending
/// centre, or `None` when `g` is locally bipartite.
pub fn odd_wheel(g: &Graph) -> Option<OddWheelWitness> {
    let centre = g.vertices().find(|&v| !neighbourhood_is_bipartite(g, v))?;
    let rim = shortest_odd_cycle(g, g.neighbours(centre)).expect("non-bipartite neighbourhood has an odd cycle");
    Some(OddWheelWitness { centre, rim })
}

pub fn is_locally_bipartite(g: &Graph) -> bool {
    g.vertices().all(|v| neighbourhood_is_bipartite(g, v))
}

/// For a locally bipartite `g` and a non-edge `uv`, whether `g + uv` is still
/// locally bipartite. Only `u`, `v` and their common neighbours see their
/// neighbourhoods change.
pub fn edge_keeps_locally_bipartite(g: &Graph, u: usize, v: usize) -> bool {
    let h = g.with_edge(u, v).expect("valid non-edge");
    let mut touched = g.common_neighbours(&[u, v]);
    touched.insert(u);
    touched.insert(v);
    touched.iter().all(|w| neighbourhood_is_bipartite(&h, w))
}

pub fn classify_pair(g: &Graph, u: usize, v: usize) -> Result<PairClass> {
    for x in [u, v] {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
        }
    }
    if u == v {
        return Err(Error::InvalidParameter(format!("pair ({u}, {v}) is not a pair of distinct vertices")));
    }
    if g.has_edge(u, v) {
        return Ok(PairClass::Adjacent);
    }
    let common = g.common_neighbours(&[u, v]);
    if common.iter().any(|x| g.neighbours(x).intersects(&common)) {
        Ok(PairClass::Dense)
    } else {
        Ok(PairClass::Sparse)
    }
}

/// `D_v`: the vertices forming a dense pair with `v`.
pub fn dense_set(g: &Graph, v: usize) -> VertexSet {
    g.set(g.vertices().filter(|&u| u != v && matches!(classify_pair(g, u, v), Ok(PairClass::Dense))))
}

/// A non-adjacent pair `u, v` where `uv` is the missing spoke of an odd
/// wheel: `rim` is an odd cycle starting at `v` whose other vertices all lie
/// in `Γ(u)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MissingSpoke {
    pub u: usize,
    pub v: usize,
    pub rim: Vec<usize>,
}

impl MissingSpoke {
    pub fn validate(&self, g: &Graph) -> bool {
        let k = self.rim.len();
        self.u != self.v
            && !g.has_edge(self.u, self.v)
            && k >= 3
            && k % 2 == 1
            && self.rim[0] == self.v
            && self.rim[1..].iter().all(|&r| g.has_edge(self.u, r))
            && (0..k).all(|i| g.has_edge(self.rim[i], self.rim[(i + 1) % k]))
    }
}

/// The shortest rim making `uv` the missing spoke of an odd wheel, if any.
/// Such a rim is `v` followed by an odd-length path of `G[Γ(u)]` between two
/// common neighbours of `u` and `v`.
pub fn missing_spoke(g: &Graph, u: usize, v: usize) -> Option<Vec<usize>> {
    if u == v || g.has_edge(u, v) {
        return None;
    }
    let s = g.neighbours(u);
    let ends = g.common_neighbours(&[u, v]);
    let mut best: Option<Vec<usize>> = None;
    for x in &ends {
        let (level, parent) = bfs_within(g, s, x);
        for y in ends.iter().filter(|&y| y != x) {
            let Some(ly) = level[y] else { continue };
            if ly % 2 == 1 && best.as_ref().is_none_or(|b| ly + 2 < b.len()) {
                let mut rim = vec![v];
                let mut w = y;
                while w != x {
                    rim.push(w);
                    w = parent[w];
                }
                rim.push(x);
                best = Some(rim);
            }
        }
    }
    best
}

/// The first sparse pair (in lexicographic order of `(u, v)`) that is the
/// missing spoke of an odd wheel.
pub fn sparse_missing_spoke(g: &Graph) -> Option<MissingSpoke> {
    for u in g.vertices() {
        for v in g.vertices() {
            if u == v || g.has_edge(u, v) || !matches!(classify_pair(g, u, v), Ok(PairClass::Sparse)) {
                continue;
            }
            if let Some(rim) = missing_spoke(g, u, v) {
                return Some(MissingSpoke { u, v, rim });
            }
        }
    }
    None
}

/// Adds non-edges in lexicographic order, keeping each one iff the graph
/// stays locally bipartite. One pass suffices since adding edges can only
/// destroy local bipartiteness.
pub fn saturate(g: &Graph) -> Result<Graph> {
    if let Some(w) = odd_wheel(g) {
        return Err(Error::NotLocallyBipartite(w));
    }
    let mut h = g.clone();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !h.has_edge(u, v) && edge_keeps_locally_bipartite(&h, u, v) {
                h.add_edge(u, v);
            }
        }
    }
    Ok(h)
}

/// Locally bipartite, and adding any non-edge creates an odd wheel.
pub fn is_edge_maximal_locally_bipartite(g: &Graph) -> bool {
    is_locally_bipartite(g) && g.non_edges().all(|(u, v)| !edge_keeps_locally_bipartite(g, u, v))
}

pub fn is_twin_free(g: &Graph) -> bool {
    g.is_twin_free()
}

/// Whether `g` has no (not necessarily induced) copy of `H0`.
pub fn is_h0_free(g: &Graph) -> bool {
    let h0 = generate(FamilyId::H0).expect("H0 is parameter-free");
    find_subgraph(&h0, g, false).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate;

    fn fam(id: FamilyId) -> Graph {
        generate(id).unwrap()
    }

    #[test]
    fn wheels_and_cliques() {
        assert!(is_locally_bipartite(&fam(FamilyId::H0)));
        let w7 = fam(FamilyId::Wheel(7));
        let w = odd_wheel(&w7).unwrap();
        assert!(w.validate(&w7));
        assert_eq!(w.centre, 7);
        assert_eq!(w.rim.len(), 7);
        let k4 = Graph::complete(4);
        let w = odd_wheel(&k4).unwrap();
        assert_eq!(w.rim.len(), 3);
        assert_eq!(w.to_string(), "centre: 0 rim: 1,2,3");
        assert!(is_locally_bipartite(&fam(FamilyId::Wheel(6))));
    }

    #[test]
    fn pair_classes() {
        let c7bar = fam(FamilyId::C7Bar);
        assert_eq!(classify_pair(&c7bar, 0, 3).unwrap(), PairClass::Dense);
        assert_eq!(classify_pair(&c7bar, 0, 1).unwrap(), PairClass::Adjacent);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(classify_pair(&c5, 0, 2).unwrap(), PairClass::Sparse);
        assert!(classify_pair(&c5, 1, 1).is_err());
        assert_eq!(dense_set(&c7bar, 0).to_vec(), vec![3, 4]);
        assert!(c5.vertices().all(|v| dense_set(&c5, v).is_empty()));
    }

    #[test]
    fn saturation() {
        assert_eq!(saturate(&fam(FamilyId::H2)).unwrap(), fam(FamilyId::C7Bar));
        assert_eq!(saturate(&fam(FamilyId::C7Bar)).unwrap(), fam(FamilyId::C7Bar));
        assert_eq!(saturate(&fam(FamilyId::H2Plus)).unwrap(), fam(FamilyId::H2Plus));
        assert_eq!(saturate(&Graph::empty(3)).unwrap(), Graph::complete(3));
        assert!(matches!(saturate(&Graph::complete(4)), Err(Error::NotLocallyBipartite(_))));
    }

    #[test]
    fn maximality() {
        assert!(!is_edge_maximal_locally_bipartite(&fam(FamilyId::H0)));
        assert!(is_edge_maximal_locally_bipartite(&fam(FamilyId::Delta(3))));
        let b = fam(FamilyId::C7Bar).blow_up(&[2; 7]).unwrap();
        assert!(!is_twin_free(&b.graph));
    }

    #[test]
    fn missing_spokes() {
        // A 5-wheel with one spoke removed: the hub and the rim vertex form a
        // sparse pair.
        let w5 = fam(FamilyId::Wheel(5));
        let g = w5.without_edge(5, 0);
        assert_eq!(classify_pair(&g, 5, 0).unwrap(), PairClass::Sparse);
        let rim = missing_spoke(&g, 5, 0).unwrap();
        assert_eq!(rim.len(), 5);
        let w = sparse_missing_spoke(&g).unwrap();
        assert!(w.validate(&g));
        assert!(sparse_missing_spoke(&fam(FamilyId::C7Bar)).is_none());
        assert!(missing_spoke(&w5, 5, 0).is_none());
    }

    #[test]
    fn shortest_odd_cycle_prefers_triangles() {
        // A 5-cycle and a disjoint triangle.
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (6, 7), (5, 7)]).unwrap();
        let c = shortest_odd_cycle(&g, &g.vertex_set()).unwrap();
        assert_eq!(c.len(), 3);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(shortest_odd_cycle(&c5, &c5.vertex_set()).unwrap().len(), 5);
        assert!(shortest_odd_cycle(&Graph::cycle(6).unwrap(), &VertexSet::full(6)).is_none());
    }
}
