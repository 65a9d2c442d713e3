//! Canonical labelling by equitable refinement and individualization.
//!
//! The canonical code is the lexicographically largest upper-triangle
//! adjacency bitstring over all leaves of the individualization tree. Branches
//! that differ only by swapping two twins (true or false) are explored once,
//! since such a transposition is an automorphism fixing the current partition.

use std::cmp::Ordering;

use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    n: usize,
    code: Vec<u64>,
    labelling: Vec<usize>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Packed upper-triangle adjacency in canonical order, most significant
    /// bit first.
    pub fn code(&self) -> &[u64] {
        &self.code
    }

    /// `labelling()[i]` is the original vertex placed at canonical position `i`.
    pub fn labelling(&self) -> &[usize] {
        &self.labelling
    }

    /// The canonically relabelled graph.
    pub fn graph(&self, g: &Graph) -> Graph {
        g.induced(&self.labelling)
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.code == other.code
    }
}

impl Eq for CanonicalForm {}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, &self.code).cmp(&(other.n, &other.code))
    }
}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.code.hash(state);
    }
}

fn adjacency_code(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut code = vec![0u64; bits.div_ceil(64).max(1)];
    let mut k = 0;
    for i in 0..n {
        let row = g.neighbours(order[i]);
        for &w in &order[i + 1..] {
            if row.contains(w) {
                code[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    code
}

/// Refines an ordered partition until every cell is equitable. Each cell is
/// split by the vector of neighbour counts into every cell, with sub-cells
/// ordered by that vector, so the result is label-invariant.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.n();
    loop {
        let mut cell_of = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next = Vec::with_capacity(k);
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u32; k];
                    for w in g.neighbours(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == k;
        *cells = next;
        if stable {
            return;
        }
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = g.neighbours(u).clone();
    let mut b = g.neighbours(v).clone();
    a.remove(v);
    b.remove(u);
    a == b
}

struct Best {
    code: Vec<u64>,
    order: Vec<usize>,
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<Best>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = adjacency_code(g, &order);
        if best.as_ref().is_none_or(|b| code > b.code) {
            *best = Some(Best { code, order });
        }
        return;
    };
    let cell = cells[target].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&t| are_twins(g, t, v)) {
            continue;
        }
        tried.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(cell.iter().copied().filter(|&w| w != v).collect());
        child.extend_from_slice(&cells[target + 1..]);
        search(g, child, best);
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n == 0 {
        return CanonicalForm { n, code: vec![0], labelling: Vec::new() };
    }
    let mut best = None;
    search(g, vec![(0..n).collect()], &mut best);
    let best = best.expect("the search tree has at least one leaf");
    CanonicalForm { n, code: best.code, labelling: best.order }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && g.degrees_sorted() == h.degrees_sorted()
        && canonical_form(g) == canonical_form(h)
}

/// An isomorphism `V(g) -> V(h)`, if one exists.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, ch) = (canonical_form(g), canonical_form(h));
    if cg != ch {
        return None;
    }
    let mut map = vec![0; g.n()];
    for (i, &v) in cg.labelling().iter().enumerate() {
        map[v] = ch.labelling()[i];
    }
    Some(map)
}

impl Graph {
    pub fn degrees_sorted(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilyId};

    #[test]
    fn complement_of_c7_is_its_square() {
        let c7 = Graph::cycle(7).unwrap();
        let sq = Graph::cycle_power(7, 2).unwrap();
        assert!(is_isomorphic(&c7.complement(), &sq));
        let map = isomorphism(&c7.complement(), &sq).unwrap();
        assert!(c7.complement().edges().all(|(u, v)| sq.has_edge(map[u], map[v])));
    }

    #[test]
    fn delta2_is_c7bar() {
        assert!(is_isomorphic(&generate(FamilyId::Delta(2)).unwrap(), &generate(FamilyId::C7Bar).unwrap()));
    }

    #[test]
    fn distinguishes() {
        assert!(!is_isomorphic(&Graph::cycle(5).unwrap(), &Graph::cycle(7).unwrap()));
        assert!(!is_isomorphic(&generate(FamilyId::H0).unwrap(), &generate(FamilyId::H1).unwrap()));
        // Same degree sequence, not isomorphic: C6 versus two triangles.
        let two_k3 = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic(&Graph::cycle(6).unwrap(), &two_k3));
    }

    #[test]
    fn relabelling_invariance() {
        let g = generate(FamilyId::H2Plus).unwrap();
        let perm = [3, 7, 1, 0, 6, 2, 5, 4];
        let mut edges = Vec::new();
        for (u, v) in g.edges() {
            edges.push((perm[u], perm[v]));
        }
        let h = Graph::from_edges(8, &edges).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert_eq!(canonical_form(&g).graph(&g), canonical_form(&h).graph(&h));
    }
}
