use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::Rational;

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph { n, adj: vec![VertexSet::new(n); n] }
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n);
                s.remove(v);
                s
            })
            .collect();
        Graph { n, adj }
    }

    /// The cycle `0-1-...-(k-1)-0`.
    pub fn cycle(k: usize) -> Result<Graph> {
        Graph::cycle_power(k, 1)
    }

    /// `C_k^j`: `u ~ v` iff their circular distance lies in `1..=j`.
    pub fn cycle_power(k: usize, j: usize) -> Result<Graph> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!("cycle power needs k >= 3, got {k}")));
        }
        if 2 * j >= k {
            return Err(Error::InvalidParameter(format!("cycle power needs j < k/2, got k={k} j={j}")));
        }
        let mut g = Graph::empty(k);
        for u in 0..k {
            for d in 1..=j {
                g.add_edge(u, (u + d) % k);
            }
        }
        Ok(g)
    }

    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; self-loops, duplicates and out-of-range indices are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.add_edge(u, v);
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    /// A copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        g.add_edge(u, v);
        Ok(g)
    }

    /// A copy with the edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// A copy with one new vertex `n` adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: &[usize]) -> Result<Graph> {
        let n = self.n + 1;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for &u in nbrs {
            g.try_add_edge(u, self.n)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Range<usize> {
        0..self.n
    }

    /// `Γ(v)`.
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-edges `(u, v)` with `u < v` in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// `δ(G)`; zero for the graph on no vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    /// `Δ(G)`; zero for the graph on no vertices.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                let mut s = self.adj[v].complement();
                s.remove(v);
                s
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// The subgraph induced on `vs`, with `vs[i]` becoming vertex `i`.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::empty(vs.len());
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn set<I: IntoIterator<Item = usize>>(&self, vs: I) -> VertexSet {
        VertexSet::from_vertices(self.n, vs)
    }

    /// `Γ(X)`, the common neighbourhood of a nonempty set.
    pub fn common_neighbourhood(&self, xs: &VertexSet) -> Result<VertexSet> {
        let mut it = xs.iter();
        let first = it.next().ok_or(Error::EmptyVertexSet)?;
        let mut s = self.adj[first].clone();
        for v in it {
            s.intersect_with(&self.adj[v]);
        }
        Ok(s)
    }

    /// `Γ(v_1, ..., v_k)` for a nonempty list. Panics on an empty list.
    pub fn common_neighbours(&self, vs: &[usize]) -> VertexSet {
        assert!(!vs.is_empty(), "common neighbourhood of the empty set");
        let mut s = self.adj[vs[0]].clone();
        for &v in &vs[1..] {
            s.intersect_with(&self.adj[v]);
        }
        s
    }

    /// `d(u, v) = |Γ(u, v)|`.
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        self.adj[u].intersection_len(&self.adj[v])
    }

    /// `e(X, G) = Σ_{x ∈ X} d(x)`.
    pub fn degree_sum(&self, xs: &VertexSet) -> usize {
        xs.iter().map(|v| self.degree(v)).sum()
    }

    /// Number of pairs `(x, y)` with `x ∈ X`, `y ∈ Y`, `xy ∈ E`. Edges inside
    /// `X ∩ Y` are counted twice.
    pub fn edges_between(&self, xs: &VertexSet, ys: &VertexSet) -> usize {
        xs.iter().map(|x| self.adj[x].intersection_len(ys)).sum()
    }

    /// Number of edges with both ends in `X`.
    pub fn edges_within(&self, xs: &VertexSet) -> usize {
        self.edges_between(xs, xs) / 2
    }

    pub fn is_independent(&self, xs: &VertexSet) -> bool {
        xs.iter().all(|v| !self.adj[v].intersects(xs))
    }

    pub fn is_clique(&self, xs: &VertexSet) -> bool {
        xs.iter().all(|v| {
            let mut others = xs.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    /// Replaces each vertex `v` by an independent class of `sizes[v]`
    /// vertices; classes occupy consecutive index ranges in vertex order.
    pub fn blow_up(&self, sizes: &[usize]) -> Result<BlowUp> {
        if sizes.len() != self.n {
            return Err(Error::InvalidParameter(format!("blow-up needs {} class sizes, got {}", self.n, sizes.len())));
        }
        if let Some(v) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidParameter(format!("blow-up class of vertex {v} is empty")));
        }
        let mut classes = Vec::with_capacity(self.n);
        let mut start = 0;
        for &s in sizes {
            classes.push(start..start + s);
            start += s;
        }
        let mut g = Graph::empty(start);
        for (u, v) in self.edges() {
            for a in classes[u].clone() {
                for b in classes[v].clone() {
                    g.add_edge(a, b);
                }
            }
        }
        Ok(BlowUp { graph: g, classes })
    }

    /// Vertices with identical neighbourhoods, grouped into classes of size at
    /// least two. Classes and their members are in ascending order.
    pub fn twin_classes(&self) -> Vec<Vec<usize>> {
        let mut by_nbhd: BTreeMap<&VertexSet, Vec<usize>> = BTreeMap::new();
        for v in 0..self.n {
            by_nbhd.entry(&self.adj[v]).or_default().push(v);
        }
        let mut classes: Vec<Vec<usize>> = by_nbhd.into_values().filter(|c| c.len() > 1).collect();
        classes.sort();
        classes
    }

    /// All unordered pairs `u < v` with `Γ(u) = Γ(v)`.
    pub fn find_twins(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] == self.adj[v] {
                    debug_assert!(!self.has_edge(u, v));
                    pairs.push((u, v));
                }
            }
        }
        pairs
    }

    pub fn is_twin_free(&self) -> bool {
        self.twin_classes().is_empty()
    }

    pub fn adjacency_rows(&self) -> &[VertexSet] {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        Repr { n: self.n, edges: self.edges().collect() }.serialize(s)
    }
}

/// A blow-up together with its class layout.
#[derive(Clone, Debug)]
pub struct BlowUp {
    pub graph: Graph,
    /// `classes[v]` is the index range replacing vertex `v`.
    pub classes: Vec<Range<usize>>,
}

impl BlowUp {
    /// The vertex of the base graph whose class contains `x`.
    pub fn class_of(&self, x: usize) -> usize {
        self.classes.partition_point(|r| r.end <= x)
    }

    /// The class-collapse map, a homomorphism onto the base graph.
    pub fn collapse_map(&self) -> Vec<usize> {
        (0..self.graph.n()).map(|x| self.class_of(x)).collect()
    }
}

/// A graph with a nonnegative rational weight on each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<Rational>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<Rational>) -> Result<WeightedGraph> {
        if weights.len() != graph.n() {
            return Err(Error::WeightCount { expected: graph.n(), got: weights.len() });
        }
        if let Some(v) = weights.iter().position(|w| w < &Rational::zero()) {
            return Err(Error::NegativeWeight(v));
        }
        Ok(WeightedGraph { graph, weights })
    }

    /// Every vertex has weight one.
    pub fn unit(graph: Graph) -> WeightedGraph {
        let weights = vec![Rational::from_integer(1.into()); graph.n()];
        WeightedGraph { graph, weights }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> &Rational {
        &self.weights[v]
    }

    /// `ω(H)`.
    pub fn total_weight(&self) -> Rational {
        self.weights.iter().sum()
    }

    /// `ω(X)`.
    pub fn weight_of(&self, xs: &VertexSet) -> Rational {
        xs.iter().map(|v| &self.weights[v]).sum()
    }

    /// Total weight of the neighbours of `v`.
    pub fn weighted_degree(&self, v: usize) -> Rational {
        self.weight_of(self.graph.neighbours(v))
    }

    pub fn weighted_degrees(&self) -> Vec<Rational> {
        (0..self.graph.n()).map(|v| self.weighted_degree(v)).collect()
    }

    /// `δ(H, ω)`; zero for the graph on no vertices.
    pub fn min_weighted_degree(&self) -> Rational {
        self.weighted_degrees().into_iter().min().unwrap_or_else(Rational::zero)
    }

    /// Merges every twin class into its lowest-indexed member, which receives
    /// the class's total weight. Surviving vertices keep their relative order.
    pub fn merge_twins(&self) -> WeightedGraph {
        self.merge_twins_with_map().0
    }

    /// As [`merge_twins`](Self::merge_twins), also returning for each original
    /// vertex its index in the merged graph.
    pub fn merge_twins_with_map(&self) -> (WeightedGraph, Vec<usize>) {
        let n = self.graph.n();
        let mut rep = (0..n).collect::<Vec<_>>();
        for class in self.graph.twin_classes() {
            for &v in &class[1..] {
                rep[v] = class[0];
            }
        }
        let keep: Vec<usize> = (0..n).filter(|&v| rep[v] == v).collect();
        let mut index = vec![0; n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut weights = vec![Rational::zero(); keep.len()];
        for v in 0..n {
            weights[index[rep[v]]] += &self.weights[v];
        }
        let map = (0..n).map(|v| index[rep[v]]).collect();
        (WeightedGraph { graph: self.graph.induced(&keep), weights }, map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn cycle_power_shapes() {
        let c7bar = Graph::cycle_power(7, 2).unwrap();
        assert!(c7bar.degrees().iter().all(|&d| d == 4));
        let g = Graph::cycle_power(11, 2).unwrap();
        assert_eq!(g.n(), 11);
        assert!(g.degrees().iter().all(|&d| d == 4));
        assert_eq!(Graph::cycle_power(9, 0).unwrap().edge_count(), 0);
        assert!(Graph::cycle_power(2, 0).is_err());
        assert!(Graph::cycle_power(8, 4).is_err());
        assert_eq!(Graph::cycle_power(5, 1).unwrap(), Graph::cycle(5).unwrap());
    }

    #[test]
    fn complement_involution() {
        let g = Graph::cycle(7).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
    }

    #[test]
    fn blow_up_basics() {
        let k2 = Graph::complete(2);
        let b = k2.blow_up(&[2, 3]).unwrap();
        assert_eq!(b.graph.edge_count(), 6);
        assert_eq!(b.collapse_map(), vec![0, 0, 1, 1, 1]);
        assert_eq!(k2.blow_up(&[1, 1]).unwrap().graph, k2);
        assert!(k2.blow_up(&[0, 1]).is_err());
        assert!(k2.blow_up(&[1]).is_err());
    }

    #[test]
    fn twins() {
        let b = Graph::complete(2).blow_up(&[2, 1]).unwrap();
        assert_eq!(b.graph.find_twins(), vec![(0, 1)]);
        assert!(Graph::cycle_power(7, 2).unwrap().find_twins().is_empty());
        assert!(Graph::complete(3).find_twins().is_empty());
    }

    #[test]
    fn common_neighbourhood_in_c7bar() {
        let g = Graph::cycle_power(7, 2).unwrap();
        let x = g.set([0, 3]);
        assert_eq!(g.common_neighbourhood(&x).unwrap().to_vec(), vec![1, 2, 5]);
        assert!(matches!(g.common_neighbourhood(&g.set([])), Err(Error::EmptyVertexSet)));
    }

    #[test]
    fn merge_twins_undoes_blow_up() {
        let c7bar = Graph::cycle_power(7, 2).unwrap();
        let b = c7bar.blow_up(&[2, 1, 1, 1, 1, 1, 1]).unwrap();
        let merged = WeightedGraph::unit(b.graph).merge_twins();
        assert_eq!(merged.graph(), &c7bar);
        let mut expect = vec![rat(1, 1); 7];
        expect[0] = rat(2, 1);
        assert_eq!(merged.weights(), &expect[..]);
        assert_eq!(merged.merge_twins(), merged);
    }

    #[test]
    fn with_vertex_appends() {
        let g = Graph::complete(2).with_vertex(&[0, 1]).unwrap();
        assert_eq!(g, Graph::complete(3));
        assert!(Graph::complete(2).with_vertex(&[5]).is_err());
    }
}
