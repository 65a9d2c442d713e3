//! Exhaustive enumeration of twin-free, edge-maximal locally bipartite graphs
//! beating a threshold.
//!
//! Generation is by vertex augmentation with canonical-form deduplication,
//! restricted to locally bipartite graphs. This is sound because local
//! bipartiteness is hereditary: every induced subgraph of a locally bipartite
//! graph is locally bipartite, so every such graph on `n` vertices extends a
//! locally bipartite graph on `n - 1` vertices. Twin-freeness,
//! edge-maximality and `t* > c` are leaf filters.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::colouring::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{emit_compact, parse_compact};
use crate::local::{
    edge_keeps_locally_bipartite, is_bipartite_on, is_edge_maximal_locally_bipartite, is_locally_bipartite,
};
use crate::vertex_set::VertexSet;
use crate::weighting::optimal_weighting;
use crate::{fmt_rat, parse_rat, Rational};

pub const MAX_SEARCH_N: usize = 10;
/// A checkpoint is written after every this many canonical forms.
pub const CHECKPOINT_INTERVAL: usize = 100_000;
const CHUNK: usize = 512;

#[derive(Clone, Debug)]
pub struct Found {
    pub graph: Graph,
    pub t_star: Rational,
    pub chi: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelStats {
    pub n: usize,
    /// Locally bipartite graphs on `n` vertices up to isomorphism. Not
    /// counted at the last level, where only leaf candidates are kept.
    pub locally_bipartite: Option<usize>,
    pub found: usize,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub n_max: usize,
    pub c: Rational,
    /// Sorted by `n`, then canonical code.
    pub found: Vec<Found>,
    pub exhausted: bool,
    pub levels: Vec<LevelStats>,
}

impl SearchResult {
    /// One line per graph: compact form, then `t*=p/q chi=k`.
    pub fn to_lines(&self) -> String {
        self.found
            .iter()
            .map(|f| format!("{} t*={} chi={}\n", emit_compact(&f.graph), fmt_rat(&f.t_star), f.chi))
            .collect()
    }
}

/// Parses [`SearchResult::to_lines`] output.
pub fn parse_result_lines(text: &str) -> Result<Vec<Found>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let (graph_part, rest) = line
                .rsplit_once(" t*=")
                .ok_or_else(|| Error::Parse { line: 0, msg: format!("missing t* in `{line}`") })?;
            let (t, chi) = rest
                .split_once(" chi=")
                .ok_or_else(|| Error::Parse { line: 0, msg: format!("missing chi in `{line}`") })?;
            Ok(Found {
                graph: parse_compact(graph_part)?,
                t_star: parse_rat(t)?,
                chi: chi.trim().parse().map_err(|_| Error::Parse { line: 0, msg: format!("bad chi `{chi}`") })?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipReport {
    pub locally_bipartite: bool,
    pub edge_maximal: bool,
    pub twin_free: bool,
    #[serde(serialize_with = "ser_opt_rat")]
    pub t_star: Option<Rational>,
    pub beats: bool,
}

fn ser_opt_rat<S: serde::Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&fmt_rat(r)),
        None => s.serialize_none(),
    }
}

impl MembershipReport {
    pub fn all_pass(&self) -> bool {
        self.locally_bipartite && self.edge_maximal && self.twin_free && self.beats
    }
}

/// Evaluates the four filter predicates on one graph.
pub fn check_membership(g: &Graph, c: &Rational) -> MembershipReport {
    let t_star = optimal_weighting(g).ok().map(|w| w.optimum);
    MembershipReport {
        locally_bipartite: is_locally_bipartite(g),
        edge_maximal: is_edge_maximal_locally_bipartite(g),
        twin_free: g.is_twin_free(),
        beats: t_star.as_ref().is_some_and(|t| t > c),
        t_star,
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Where to write checkpoints; none are written when unset.
    pub checkpoint: Option<PathBuf>,
    /// A checkpoint to resume from.
    pub resume: Option<PathBuf>,
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    n_max: usize,
    c: String,
    /// Vertex count of the graphs in `parents`.
    parent_n: usize,
    parents: Vec<String>,
    parents_done: usize,
    children: Vec<String>,
    found: Vec<String>,
    levels: Vec<(usize, Option<usize>, usize)>,
    canonical_forms: usize,
}

/// Children of `parent` obtained by adding one vertex, keeping local
/// bipartiteness. The parent must be locally bipartite.
fn extensions(parent: &Graph) -> Vec<Graph> {
    let n = parent.n();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let s = VertexSet::from_vertices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
        if !is_bipartite_on(parent, &s) {
            continue;
        }
        let child = parent.with_vertex(&s.to_vec()).expect("valid neighbourhood");
        let ok = s.iter().all(|w| is_bipartite_on(&child, child.neighbours(w)));
        if ok {
            out.push(child);
        }
    }
    out
}

fn is_leaf_candidate(g: &Graph) -> bool {
    g.is_twin_free() && g.non_edges().all(|(u, v)| !edge_keeps_locally_bipartite(g, u, v))
}

struct State {
    n_max: usize,
    c: Rational,
    parent_n: usize,
    parents: Vec<Graph>,
    parents_done: usize,
    children: BTreeMap<Vec<u64>, Graph>,
    found: Vec<Found>,
    levels: Vec<LevelStats>,
    canonical_forms: usize,
}

impl State {
    fn to_checkpoint(&self) -> Checkpoint {
        Checkpoint {
            n_max: self.n_max,
            c: fmt_rat(&self.c),
            parent_n: self.parent_n,
            parents: self.parents.iter().map(emit_compact).collect(),
            parents_done: self.parents_done,
            children: self.children.values().map(emit_compact).collect(),
            found: self
                .found
                .iter()
                .map(|f| format!("{} t*={} chi={}", emit_compact(&f.graph), fmt_rat(&f.t_star), f.chi))
                .collect(),
            levels: self.levels.iter().map(|l| (l.n, l.locally_bipartite, l.found)).collect(),
            canonical_forms: self.canonical_forms,
        }
    }

    fn from_checkpoint(cp: Checkpoint) -> Result<State> {
        let bad = |e: Error| Error::Checkpoint(e.to_string());
        let parse_all = |v: &[String]| v.iter().map(|s| parse_compact(s)).collect::<Result<Vec<_>>>();
        let children = parse_all(&cp.children).map_err(bad)?;
        Ok(State {
            n_max: cp.n_max,
            c: parse_rat(&cp.c).map_err(bad)?,
            parent_n: cp.parent_n,
            parents: parse_all(&cp.parents).map_err(bad)?,
            parents_done: cp.parents_done,
            children: children.into_iter().map(|g| (canonical_form(&g).code().to_vec(), g)).collect(),
            found: parse_result_lines(&cp.found.join("\n")).map_err(bad)?,
            levels: cp
                .levels
                .into_iter()
                .map(|(n, locally_bipartite, found)| LevelStats { n, locally_bipartite, found })
                .collect(),
            canonical_forms: cp.canonical_forms,
        })
    }

    fn save(&self, path: &Path) -> Result<()> {
        let json = serde_json::to_string(&self.to_checkpoint()).map_err(|e| Error::Checkpoint(e.to_string()))?;
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, json)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    fn record_level(&mut self, n: usize, graphs: &[Graph]) {
        let mut found = 0;
        for g in graphs.iter().filter(|g| is_leaf_candidate(g)) {
            let w = optimal_weighting(g).expect("nonempty graph");
            if w.beats(&self.c) {
                self.found.push(Found { graph: g.clone(), t_star: w.optimum, chi: chromatic_number(g).0 });
                found += 1;
            }
        }
        let complete = n < self.n_max;
        self.levels.push(LevelStats { n, locally_bipartite: complete.then_some(graphs.len()), found });
    }
}

pub fn enumerate_extremal(n_max: usize, c: &Rational) -> Result<SearchResult> {
    enumerate_extremal_with(n_max, c, &SearchOptions::default())
}

/// Enumerates up to isomorphism every twin-free, edge-maximal locally
/// bipartite graph on at most `n_max` vertices with `t* > c`.
pub fn enumerate_extremal_with(n_max: usize, c: &Rational, opts: &SearchOptions) -> Result<SearchResult> {
    if !(1..=MAX_SEARCH_N).contains(&n_max) {
        return Err(Error::InvalidParameter(format!("n_max must lie in 1..={MAX_SEARCH_N}, got {n_max}")));
    }
    let mut st = match &opts.resume {
        Some(path) => {
            let cp: Checkpoint =
                serde_json::from_str(&fs::read_to_string(path)?).map_err(|e| Error::Checkpoint(e.to_string()))?;
            let st = State::from_checkpoint(cp)?;
            if st.n_max != n_max || st.c != *c {
                return Err(Error::Checkpoint(format!(
                    "checkpoint is for n_max={} c={}, not n_max={n_max} c={}",
                    st.n_max,
                    fmt_rat(&st.c),
                    fmt_rat(c)
                )));
            }
            st
        }
        None => {
            let mut st = State {
                n_max,
                c: c.clone(),
                parent_n: 1,
                parents: vec![Graph::empty(1)],
                parents_done: 0,
                children: BTreeMap::new(),
                found: Vec::new(),
                levels: Vec::new(),
                canonical_forms: 0,
            };
            st.record_level(1, &[Graph::empty(1)]);
            st
        }
    };

    while st.parent_n < n_max {
        let last_level = st.parent_n + 1 == n_max;
        while st.parents_done < st.parents.len() {
            let end = (st.parents_done + CHUNK).min(st.parents.len());
            let counter = AtomicUsize::new(0);
            let batches: Vec<Vec<(Vec<u64>, Graph)>> = st.parents[st.parents_done..end]
                .par_iter()
                .map(|p| {
                    let mut local = BTreeMap::new();
                    for child in extensions(p) {
                        // At the last level only leaf candidates matter, and
                        // both leaf predicates are isomorphism invariant.
                        if last_level && !is_leaf_candidate(&child) {
                            continue;
                        }
                        let cf = canonical_form(&child);
                        counter.fetch_add(1, Ordering::Relaxed);
                        local.entry(cf.code().to_vec()).or_insert_with(|| cf.graph(&child));
                    }
                    local.into_iter().collect()
                })
                .collect();
            for (code, g) in batches.into_iter().flatten() {
                st.children.entry(code).or_insert(g);
            }
            let before = st.canonical_forms;
            st.canonical_forms += counter.into_inner();
            st.parents_done = end;
            if let Some(path) = &opts.checkpoint {
                if before / CHECKPOINT_INTERVAL != st.canonical_forms / CHECKPOINT_INTERVAL {
                    st.save(path)?;
                }
            }
        }
        let level: Vec<Graph> = std::mem::take(&mut st.children).into_values().collect();
        let n = st.parent_n + 1;
        st.record_level(n, &level);
        st.parents = level;
        st.parent_n = n;
        st.parents_done = 0;
    }
    if let Some(path) = &opts.checkpoint {
        st.save(path)?;
    }
    Ok(SearchResult { n_max, c: st.c, found: st.found, exhausted: true, levels: st.levels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilyId};
    use crate::hom::is_isomorphic;
    use crate::rat;

    #[test]
    fn locally_bipartite_counts_small() {
        // All graphs on up to 4 vertices except K4 are locally bipartite:
        // 1, 2, 4, 10 graphs, minus K4.
        let r = enumerate_extremal(5, &rat(0, 1)).unwrap();
        let counts: Vec<Option<usize>> = r.levels.iter().map(|l| l.locally_bipartite).collect();
        assert_eq!(counts, vec![Some(1), Some(2), Some(4), Some(10), None]);
    }

    #[test]
    fn triangle_strictness() {
        let r = enumerate_extremal(3, &rat(2, 3)).unwrap();
        assert!(r.found.is_empty());
        let r = enumerate_extremal(3, &rat(1, 2)).unwrap();
        assert_eq!(r.found.len(), 1);
        assert!(is_isomorphic(&r.found[0].graph, &Graph::complete(3)));
    }

    #[test]
    fn membership() {
        let m = check_membership(&generate(FamilyId::Counterexample8).unwrap(), &rat(1, 2));
        assert!(m.all_pass(), "{m:?}");
        assert!(!check_membership(&generate(FamilyId::H0).unwrap(), &rat(1, 2)).edge_maximal);
        assert!(check_membership(&Graph::complete(2), &rat(0, 1)).all_pass());
    }

    #[test]
    fn range() {
        assert!(enumerate_extremal(0, &rat(1, 2)).is_err());
        assert!(enumerate_extremal(11, &rat(1, 2)).is_err());
    }
}
