//! Exact colouring: k-colourability, chromatic number, clique and independence
//! numbers.
//!
//! Colouring runs on the twin quotient (false twins may always share a
//! colour), then DSATUR-ordered backtracking with a greedy-clique bound.

use serde::Serialize;

use crate::graph::{Graph, WeightedGraph};
use crate::vertex_set::VertexSet;

/// A proper colouring with colours `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Colouring {
    pub colours: Vec<usize>,
    pub k: usize,
}

impl Colouring {
    /// Renumbers colours by first occurrence, keeping `k`.
    pub fn normalized(&self) -> Colouring {
        let mut rename = std::collections::HashMap::new();
        let colours = self
            .colours
            .iter()
            .map(|&c| {
                let next = rename.len() + 1;
                *rename.entry(c).or_insert(next)
            })
            .collect();
        Colouring { colours, k: self.k }
    }

    pub fn validate(&self, g: &Graph) -> bool {
        self.colours.len() == g.n()
            && self.colours.iter().all(|&c| (1..=self.k).contains(&c))
            && g.edges().all(|(u, v)| self.colours[u] != self.colours[v])
    }

    /// Vertices of colour `c`.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.colours.len()).filter(|&v| self.colours[v] == c).collect()
    }

    pub fn colours_used(&self) -> usize {
        let mut c = self.colours.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
    counts: Vec<Vec<u32>>,
    saturation: Vec<usize>,
}

impl Dsatur<'_> {
    fn pick(&self) -> Option<usize> {
        (0..self.g.n()).filter(|&v| self.colour[v] == usize::MAX).max_by_key(|&v| {
            let free = self.g.neighbours(v).iter().filter(|&w| self.colour[w] == usize::MAX).count();
            (self.saturation[v], free, std::cmp::Reverse(v))
        })
    }

    fn set(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        for w in self.g.neighbours(v) {
            if self.counts[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.counts[w][c] += 1;
        }
    }

    fn unset(&mut self, v: usize, c: usize) {
        self.colour[v] = usize::MAX;
        for w in self.g.neighbours(v) {
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn search(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else { return true };
        if self.saturation[v] >= self.k {
            return false;
        }
        for c in 0..self.k.min(used + 1) {
            if self.counts[v][c] > 0 {
                continue;
            }
            self.set(v, c);
            if self.search(used.max(c + 1)) {
                return true;
            }
            self.unset(v, c);
        }
        false
    }
}

fn colour_twin_free(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    if k >= n {
        return Some((0..n).collect());
    }
    if greedy_clique(g).len() > k {
        return None;
    }
    let mut d = Dsatur { g, k, colour: vec![usize::MAX; n], counts: vec![vec![0; k]; n], saturation: vec![0; n] };
    d.search(0).then_some(d.colour)
}

/// A proper `k`-colouring, or `None` if none exists. Exact.
pub fn k_colourable(g: &Graph, k: usize) -> Option<Colouring> {
    let (quotient, map) = WeightedGraph::unit(g.clone()).merge_twins_with_map();
    let q = colour_twin_free(quotient.graph(), k)?;
    let c = Colouring { colours: map.iter().map(|&i| q[i] + 1).collect(), k }.normalized();
    debug_assert!(c.validate(g));
    Some(c)
}

/// `χ(G)` with a witness colouring using exactly `χ(G)` colours.
pub fn chromatic_number(g: &Graph) -> (usize, Colouring) {
    let mut k = greedy_clique(g).len();
    loop {
        if let Some(c) = k_colourable(g, k) {
            return (k, c);
        }
        k += 1;
    }
}

/// A clique found greedily from each start vertex; the largest is kept.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for start in g.vertices() {
        let mut clique = vec![start];
        let mut cand = g.neighbours(start).clone();
        while !cand.is_empty() {
            let v =
                cand.iter().max_by_key(|&v| (g.neighbours(v).intersection_len(&cand), std::cmp::Reverse(v))).unwrap();
            clique.push(v);
            cand.intersect_with(g.neighbours(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

fn colour_sort(g: &Graph, p: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    let mut uncoloured = p.clone();
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(g.neighbours(v));
            uncoloured.remove(v);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

fn expand(g: &Graph, current: &mut Vec<usize>, mut p: VertexSet, best: &mut Vec<usize>) {
    let (order, bounds) = colour_sort(g, &p);
    for i in (0..order.len()).rev() {
        if current.len() + bounds[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let next = p.intersection(g.neighbours(v));
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        p.remove(v);
    }
}

/// A maximum clique, by branch and bound with greedy colouring bounds.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = greedy_clique(g);
    expand(g, &mut Vec::new(), g.vertex_set(), &mut best);
    g.set(best)
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// `α(G)` with a maximum independent set.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let s = max_clique(&g.complement());
    (s.len(), s)
}

/// A 2-colouring, when `g` is bipartite.
pub fn two_colouring(g: &Graph) -> Option<Colouring> {
    if !crate::local::is_bipartite_on(g, &g.vertex_set()) {
        return None;
    }
    k_colourable(g, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilyId};

    fn fam(id: FamilyId) -> Graph {
        generate(id).unwrap()
    }

    #[test]
    fn four_chromatic_family() {
        for id in [FamilyId::H0, FamilyId::H1, FamilyId::H2, FamilyId::H2Plus, FamilyId::C7Bar, FamilyId::Wheel(7)] {
            let (chi, c) = chromatic_number(&fam(id));
            assert_eq!(chi, 4, "{id}");
            assert!(c.validate(&fam(id)));
        }
        assert!(k_colourable(&fam(FamilyId::C7Bar), 3).is_none());
        assert_eq!(chromatic_number(&Graph::empty(1)).0, 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).0, 0);
    }

    #[test]
    fn delta_family() {
        for l in 2..=4 {
            let d = fam(FamilyId::Delta(l));
            assert_eq!(chromatic_number(&d).0, 4);
            assert_eq!(independence_number(&d).0, l);
        }
        assert_eq!(independence_number(&fam(FamilyId::C7Bar)).0, 2);
        assert_eq!(independence_number(&Graph::empty(5)).0, 5);
    }

    #[test]
    fn normalization() {
        let c = Colouring { colours: vec![3, 1, 3, 2], k: 3 }.normalized();
        assert_eq!(c.colours, vec![1, 2, 1, 3]);
    }

    #[test]
    fn blow_up_chromatic() {
        let b = fam(FamilyId::C7Bar).blow_up(&[2; 7]).unwrap();
        assert_eq!(chromatic_number(&b.graph).0, 4);
        assert_eq!(clique_number(&b.graph), 3);
    }

    #[test]
    fn bipartite() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(two_colouring(&c6).unwrap().validate(&c6));
        assert!(two_colouring(&Graph::cycle(5).unwrap()).is_none());
    }
}
