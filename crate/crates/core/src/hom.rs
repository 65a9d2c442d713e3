//! Homomorphism, subgraph and induced-subgraph search by backtracking with
//! forward checking, plus the homscores verifier.
//!
//! Pattern vertices are ordered greedily: next is the unordered vertex with the
//! most already-ordered neighbours, ties broken by larger degree, then smaller
//! index. Values are tried in ascending order. Host twin classes are used for
//! exact symmetry breaking: a homomorphism only ever needs the first member of
//! each false-twin class, and an injective map only needs the lowest unused
//! member of each (true or false) twin class.

use serde::Serialize;

pub use crate::canon::{is_isomorphic, isomorphism};
use crate::graph::{Graph, WeightedGraph};
use crate::local::{is_edge_maximal_locally_bipartite, is_locally_bipartite};
use crate::vertex_set::VertexSet;

/// A vertex map `V(G) -> V(H)` witnessing `G -> H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomCertificate {
    pub map: Vec<usize>,
}

impl HomCertificate {
    /// Single edge scan.
    pub fn validate(&self, g: &Graph, h: &Graph) -> bool {
        self.map.len() == g.n()
            && self.map.iter().all(|&x| x < h.n())
            && g.edges().all(|(u, v)| h.has_edge(self.map[u], self.map[v]))
    }

    /// `self: G -> H` followed by `next: H -> K`.
    pub fn compose(&self, next: &HomCertificate) -> HomCertificate {
        HomCertificate { map: self.map.iter().map(|&x| next.map[x]).collect() }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Mode {
    Hom,
    Subgraph,
    Induced,
}

impl Mode {
    fn injective(self) -> bool {
        self != Mode::Hom
    }
}

fn pattern_order(pat: &Graph) -> Vec<usize> {
    let n = pat.n();
    let mut placed = VertexSet::new(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (pat.neighbours(v).intersection_len(&placed), pat.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex exists");
        placed.insert(next);
        order.push(next);
    }
    order
}

/// For each host vertex, the members of its twin class (itself alone when it
/// has no twin). `closed` also groups true twins.
fn host_classes(host: &Graph, closed: bool) -> Vec<Vec<usize>> {
    let n = host.n();
    let mut class: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for u in 0..n {
        for v in u + 1..n {
            let same = if closed {
                let mut a = host.neighbours(u).clone();
                let mut b = host.neighbours(v).clone();
                a.remove(v);
                b.remove(u);
                a == b
            } else {
                host.neighbours(u) == host.neighbours(v)
            };
            if same {
                class[u].push(v);
                class[v].push(u);
            }
        }
    }
    for c in &mut class {
        c.sort_unstable();
    }
    class
}

struct Engine<'a> {
    pat: &'a Graph,
    host: &'a Graph,
    mode: Mode,
    order: Vec<usize>,
    classes: Vec<Vec<usize>>,
    limit: usize,
    found: Vec<Vec<usize>>,
}

impl Engine<'_> {
    fn initial_domains(&self) -> Vec<VertexSet> {
        let (np, nh) = (self.pat.n(), self.host.n());
        (0..np)
            .map(|x| {
                let dp = self.pat.degree(x);
                let mut d = VertexSet::new(nh);
                for a in 0..nh {
                    let dh = self.host.degree(a);
                    let ok = match self.mode {
                        Mode::Hom => self.classes[a][0] == a && (dp == 0 || dh > 0),
                        Mode::Subgraph => dh >= dp,
                        Mode::Induced => dh >= dp && nh - 1 - dh >= np - 1 - dp,
                    };
                    if ok {
                        d.insert(a);
                    }
                }
                d
            })
            .collect()
    }

    fn run(&mut self) {
        if self.mode.injective() && self.pat.n() > self.host.n() {
            return;
        }
        let domains = self.initial_domains();
        let mut assign = vec![usize::MAX; self.pat.n()];
        let mut used = VertexSet::new(self.host.n());
        self.search(0, &domains, &mut assign, &mut used);
    }

    fn symmetric_duplicate(&self, a: usize, used: &VertexSet) -> bool {
        self.mode.injective() && self.classes[a].iter().take_while(|&&b| b < a).any(|&b| !used.contains(b))
    }

    fn search(&mut self, depth: usize, domains: &[VertexSet], assign: &mut Vec<usize>, used: &mut VertexSet) {
        if depth == self.order.len() {
            self.found.push(assign.clone());
            return;
        }
        let x = self.order[depth];
        for a in domains[x].iter() {
            if self.symmetric_duplicate(a, used) {
                continue;
            }
            let mut next = domains.to_vec();
            let mut dead = false;
            for &y in &self.order[depth + 1..] {
                let d = &mut next[y];
                if self.pat.has_edge(x, y) {
                    d.intersect_with(self.host.neighbours(a));
                } else if self.mode == Mode::Induced {
                    d.difference_with(self.host.neighbours(a));
                }
                if self.mode.injective() {
                    d.remove(a);
                }
                if d.is_empty() {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            assign[x] = a;
            used.insert(a);
            self.search(depth + 1, &next, assign, used);
            used.remove(a);
            assign[x] = usize::MAX;
            if self.found.len() >= self.limit {
                return;
            }
        }
    }
}

fn solve(pat: &Graph, host: &Graph, mode: Mode, limit: usize) -> Vec<Vec<usize>> {
    let mut engine = Engine {
        pat,
        host,
        mode,
        order: pattern_order(pat),
        classes: host_classes(host, mode.injective()),
        limit,
        found: Vec::new(),
    };
    engine.run();
    engine.found
}

/// A homomorphism `g -> h`, if one exists. Exact.
///
/// Twins of `g` can share an image, so the search runs on the twin quotient
/// of `g` and the map is extended afterwards.
pub fn find_homomorphism(g: &Graph, h: &Graph) -> Option<HomCertificate> {
    let (quotient, to_quotient) = WeightedGraph::unit(g.clone()).merge_twins_with_map();
    let q = solve(quotient.graph(), h, Mode::Hom, 1).into_iter().next()?;
    let cert = HomCertificate { map: to_quotient.iter().map(|&i| q[i]).collect() };
    debug_assert!(cert.validate(g, h));
    Some(cert)
}

/// An injective map `V(pattern) -> V(host)` preserving edges (and non-edges
/// when `induced`), if one exists. Exact.
pub fn find_subgraph(pattern: &Graph, host: &Graph, induced: bool) -> Option<Vec<usize>> {
    subgraph_embeddings(pattern, host, induced, 1).into_iter().next()
}

/// Up to `limit` embeddings in solver order, one per orbit of the host's
/// twin-swapping symmetries.
pub fn subgraph_embeddings(pattern: &Graph, host: &Graph, induced: bool, limit: usize) -> Vec<Vec<usize>> {
    let mode = if induced { Mode::Induced } else { Mode::Subgraph };
    solve(pattern, host, mode, limit.max(1))
}

/// Checks an injective embedding.
pub fn validate_embedding(pattern: &Graph, host: &Graph, map: &[usize], induced: bool) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&a| a >= host.n()) {
        return false;
    }
    let mut seen = VertexSet::new(host.n());
    for &a in map {
        if seen.contains(a) {
            return false;
        }
        seen.insert(a);
    }
    (0..pattern.n()).all(|u| {
        (u + 1..pattern.n()).all(|v| {
            let e = host.has_edge(map[u], map[v]);
            if pattern.has_edge(u, v) {
                e
            } else {
                !induced || !e
            }
        })
    })
}

/// Exhaustive oracle over all `|H|^|G|` maps, for cross-checking.
pub fn brute_force_homomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let (ng, nh) = (g.n(), h.n());
    if ng == 0 {
        return Some(Vec::new());
    }
    if nh == 0 {
        return None;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut map = vec![0usize; ng];
    loop {
        if edges.iter().all(|&(u, v)| h.has_edge(map[u], map[v])) {
            return Some(map);
        }
        let mut i = 0;
        loop {
            if i == ng {
                return None;
            }
            map[i] += 1;
            if map[i] < nh {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HomscoresReport {
    pub f_twin_free: bool,
    pub f_edge_maximal_locally_bipartite: bool,
    pub g_locally_bipartite: bool,
    pub homomorphism: Option<HomCertificate>,
    pub induced_copy: Option<Vec<usize>>,
}

impl HomscoresReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.f_twin_free
            && self.f_edge_maximal_locally_bipartite
            && self.g_locally_bipartite
            && self.homomorphism.is_some()
    }

    /// `None` when the hypotheses fail, otherwise whether an induced copy of
    /// `f` was found in `g`.
    pub fn conclusion(&self) -> Option<bool> {
        self.hypotheses_hold().then(|| self.induced_copy.is_some())
    }

    pub fn summary(&self) -> String {
        let mut failed = Vec::new();
        if !self.f_twin_free {
            failed.push("hypothesis (f twin-free) fails");
        }
        if !self.f_edge_maximal_locally_bipartite {
            failed.push("hypothesis (f edge-maximal locally bipartite) fails");
        }
        if !self.g_locally_bipartite {
            failed.push("hypothesis (g locally bipartite) fails");
        }
        if self.homomorphism.is_none() {
            failed.push("hypothesis (hom) fails");
        }
        match self.conclusion() {
            None => failed.join("; "),
            Some(true) => "hypotheses hold; induced copy found".into(),
            Some(false) => "hypotheses hold; NO induced copy (conclusion falsified)".into(),
        }
    }
}

/// If `f` is twin-free and edge-maximal locally bipartite, `g` is locally
/// bipartite and `f -> g`, then `f` is an induced subgraph of `g`. Reports
/// which hypotheses hold and, when all do, whether the conclusion does.
pub fn verify_homscores(f: &Graph, g: &Graph) -> HomscoresReport {
    let mut report = HomscoresReport {
        f_twin_free: f.is_twin_free(),
        f_edge_maximal_locally_bipartite: is_edge_maximal_locally_bipartite(f),
        g_locally_bipartite: is_locally_bipartite(g),
        homomorphism: find_homomorphism(f, g),
        induced_copy: None,
    };
    if report.hypotheses_hold() {
        report.induced_copy = find_subgraph(f, g, true);
    }
    report
}
