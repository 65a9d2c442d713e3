//! Seeded random instance generators. Probabilities are exact fractions
//! `num/den`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{BlowUp, Graph};
use crate::local::{edge_keeps_locally_bipartite, is_locally_bipartite};

pub type Rng64 = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coin(rng: &mut Rng64, num: u32, den: u32) -> bool {
    rng.gen_range(0..den) < num
}

/// `G(n, num/den)`.
pub fn random_graph(rng: &mut Rng64, n: usize, num: u32, den: u32) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if coin(rng, num, den) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Class sizes in `1..=max`.
pub fn random_sizes(rng: &mut Rng64, n: usize, max: usize) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(1..=max)).collect()
}

pub fn random_blow_up(rng: &mut Rng64, g: &Graph, max: usize) -> BlowUp {
    let sizes = random_sizes(rng, g.n(), max);
    g.blow_up(&sizes).expect("sizes are positive")
}

/// Tries the non-edges of `g` in random order and adds each with probability
/// `num/den` if the graph stays locally bipartite. `g` must be locally
/// bipartite.
pub fn grow_locally_bipartite(rng: &mut Rng64, g: &Graph, num: u32, den: u32) -> Graph {
    debug_assert!(is_locally_bipartite(g));
    let mut h = g.clone();
    let mut pairs: Vec<(usize, usize)> = g.non_edges().collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if !h.has_edge(u, v) && coin(rng, num, den) && edge_keeps_locally_bipartite(&h, u, v) {
            h.add_edge(u, v);
        }
    }
    h
}

/// A random locally bipartite graph on `n` vertices.
pub fn random_locally_bipartite(rng: &mut Rng64, n: usize, num: u32, den: u32) -> Graph {
    grow_locally_bipartite(rng, &Graph::empty(n), num, den)
}

/// A locally bipartite graph containing `f` (which must be locally
/// bipartite): a random blow-up of `f`, plus `extra` new vertices, with
/// random edges added while local bipartiteness holds.
pub fn random_locally_bipartite_supergraph(rng: &mut Rng64, f: &Graph, max_class: usize, extra: usize) -> Graph {
    let b = random_blow_up(rng, f, max_class).graph;
    let mut g = Graph::empty(b.n() + extra);
    for (u, v) in b.edges() {
        g.add_edge(u, v);
    }
    grow_locally_bipartite(rng, &g, 1, 2)
}

/// A random graph with `δ(G) > n/2`, by rejection from `G(n, num/den)`.
pub fn random_dense_graph(rng: &mut Rng64, n: usize, num: u32, den: u32) -> Graph {
    loop {
        let g = random_graph(rng, n, num, den);
        if 2 * g.min_degree() > n {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilyId};

    #[test]
    fn deterministic() {
        let a = random_graph(&mut seeded(7), 12, 1, 2);
        let b = random_graph(&mut seeded(7), 12, 1, 2);
        assert_eq!(a, b);
    }

    #[test]
    fn generators_respect_contracts() {
        let mut rng = seeded(1);
        for _ in 0..20 {
            let g = random_locally_bipartite(&mut rng, 9, 2, 3);
            assert!(is_locally_bipartite(&g));
            let d = random_dense_graph(&mut rng, 9, 3, 4);
            assert!(2 * d.min_degree() > 9);
        }
        let f = generate(FamilyId::C7Bar).unwrap();
        let g = random_locally_bipartite_supergraph(&mut rng, &f, 2, 3);
        assert!(is_locally_bipartite(&g));
    }
}
