//! Constructive homomorphism decompositions of dense locally bipartite graphs
//! around an anchored copy of `C7BAR` or `H2PLUS`, and the end-to-end profile
//! pipeline.
//!
//! Around the anchor `v0..v6` the graph splits into `D` (vertices with four
//! anchor neighbours, sorted into `D0..D6` by which four) and `R`. Each
//! vertex of `R` is placed in a class `Ri` with `Γ(x) ∩ D ⊆ Γ(vi)`, and the
//! classes are chosen to minimise the residual `S`. The map `Ti = Di ∪ Ri ↦ i`
//! is then checked as a homomorphism.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::colouring::{k_colourable, Colouring};
use crate::error::{Error, Result};
use crate::families::{generate, h2plus_aug_colouring, FamilyId, H2PLUS_U};
use crate::graph::Graph;
use crate::hom::{find_subgraph, subgraph_embeddings, HomCertificate};
use crate::local::{is_h0_free, is_locally_bipartite, odd_wheel, sparse_missing_spoke, MissingSpoke};
use crate::vertex_set::VertexSet;
use crate::Rational;

/// Anchors tried per decomposition.
pub const MAX_ANCHORS: usize = 100;
/// Largest number of flexible vertices searched exhaustively.
pub const MAX_FLEXIBLE: usize = 20;
const BRANCH_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AnchorKind {
    #[serde(rename = "C7BAR")]
    C7Bar,
    #[serde(rename = "H2PLUS")]
    H2Plus,
}

impl fmt::Display for AnchorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnchorKind::C7Bar => write!(f, "C7BAR"),
            AnchorKind::H2Plus => write!(f, "H2PLUS"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Outcome {
    /// Map into `C7BAR`.
    #[serde(rename = "HOM_C7BAR")]
    HomC7Bar { map: Vec<usize> },
    /// Map into `H2PLUS` (vertex 7 is `u`).
    #[serde(rename = "HOM_H2PLUS")]
    HomH2Plus { map: Vec<usize> },
    /// Map into `H2PLUS_AUG` and the 4-colouring pulled back from it.
    #[serde(rename = "HOM_AUGMENTED")]
    HomAugmented { map: Vec<usize>, colouring: Vec<usize> },
    #[serde(rename = "FAILED")]
    Failed { reason: String },
}

impl Outcome {
    pub fn is_hom(&self) -> bool {
        !matches!(self, Outcome::Failed { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Outcome::HomC7Bar { .. } => "HOM_C7BAR",
            Outcome::HomH2Plus { .. } => "HOM_H2PLUS",
            Outcome::HomAugmented { .. } => "HOM_AUGMENTED",
            Outcome::Failed { .. } => "FAILED",
        }
    }

    pub fn map(&self) -> Option<&[usize]> {
        match self {
            Outcome::HomC7Bar { map } | Outcome::HomH2Plus { map } | Outcome::HomAugmented { map, .. } => Some(map),
            Outcome::Failed { .. } => None,
        }
    }

    /// The target graph of the map.
    pub fn target(&self) -> Option<Graph> {
        let id = match self {
            Outcome::HomC7Bar { .. } => FamilyId::C7Bar,
            Outcome::HomH2Plus { .. } => FamilyId::H2Plus,
            Outcome::HomAugmented { .. } => FamilyId::H2PlusAug,
            Outcome::Failed { .. } => return None,
        };
        Some(generate(id).expect("parameter-free family"))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Failed { reason } => write!(f, "FAILED({reason})"),
            other => write!(f, "{}", other.name()),
        }
    }
}

/// A named vertex set of the partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part {
    pub name: String,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionCertificate {
    pub kind: AnchorKind,
    /// `v0..v6` (and `u` for `H2PLUS`); empty when no anchor was found.
    pub anchor: Vec<usize>,
    /// `D`, `R`, `D0..D6`, `R0..R6`, `T0..T6`, and for `H2PLUS` also `D*` and
    /// `R502`. Empty when a precondition failed.
    pub parts: Vec<Part>,
    /// The residual `S` of the final class choice.
    pub s_value: usize,
    pub outcome: Outcome,
}

impl DecompositionCertificate {
    fn failed(kind: AnchorKind, reason: impl Into<String>) -> Self {
        DecompositionCertificate {
            kind,
            anchor: Vec::new(),
            parts: Vec::new(),
            s_value: 0,
            outcome: Outcome::Failed { reason: reason.into() },
        }
    }

    pub fn part(&self, name: &str) -> Option<&[usize]> {
        self.parts.iter().find(|p| p.name == name).map(|p| p.vertices.as_slice())
    }

    /// A proper colouring of `g` pulled back along the map: 4 colours for
    /// every hom outcome.
    pub fn colouring(&self) -> Option<Colouring> {
        if let Outcome::HomAugmented { colouring, .. } = &self.outcome {
            return Some(Colouring { colours: colouring.clone(), k: 4 });
        }
        let map = self.outcome.map()?;
        let target = self.outcome.target()?;
        let c = k_colourable(&target, 4).expect("targets are 4-colourable");
        Some(Colouring { colours: map.iter().map(|&x| c.colours[x]).collect(), k: 4 })
    }

    /// Re-checks the certificate against `g` from scratch.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let Some(map) = self.outcome.map() else {
            return Ok(());
        };
        let target = self.outcome.target().expect("hom outcomes have a target");
        if !(HomCertificate { map: map.to_vec() }).validate(g, &target) {
            return Err(format!("map is not a homomorphism into {}", self.outcome.name()));
        }
        let get = |name: &str| self.part(name).ok_or_else(|| format!("missing part {name}"));
        let n = g.n();
        let set = |vs: &[usize]| VertexSet::from_vertices(n, vs.iter().copied());
        let d = set(get("D")?);
        let r = set(get("R")?);
        if d.intersects(&r) || d.union(&r) != VertexSet::full(n) {
            return Err("D and R do not partition the vertex set".into());
        }
        let mut ts = VertexSet::new(n);
        for i in 0..7 {
            let t = set(get(&format!("T{i}"))?);
            if t.intersects(&ts) {
                return Err(format!("T{i} overlaps an earlier class"));
            }
            if t.iter().any(|x| map[x] != i) {
                return Err(format!("T{i} is not mapped to {i}"));
            }
            ts.union_with(&t);
        }
        if self.kind == AnchorKind::H2Plus {
            let r502 = set(get("R502")?);
            if r502.intersects(&ts) || r502.iter().any(|x| map[x] != H2PLUS_U) {
                return Err("R502 is not a separate class mapped to u".into());
            }
            ts.union_with(&r502);
        }
        if ts != VertexSet::full(n) {
            return Err("classes do not cover the vertex set".into());
        }
        if self.kind == AnchorKind::C7Bar {
            for i in 0..7 {
                let a = set(get(&format!("T{i}"))?);
                let b = set(get(&format!("T{}", (i + 3) % 7))?);
                if !g.is_independent(&a.union(&b)) {
                    return Err(format!("T{i} ∪ T{} is not independent", (i + 3) % 7));
                }
            }
        }
        if let Some(c) = self.colouring() {
            if !c.validate(g) {
                return Err("pulled back colouring is not proper".into());
            }
        }
        Ok(())
    }

    /// `key: value` lines; sets as comma lists, `-` when empty.
    pub fn to_text(&self) -> String {
        let list = |vs: &[usize]| {
            if vs.is_empty() {
                "-".to_string()
            } else {
                vs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            }
        };
        let mut out = format!("kind: {}\nanchor: {}\n", self.kind, list(&self.anchor));
        for p in &self.parts {
            out += &format!("{}: {}\n", p.name, list(&p.vertices));
        }
        out += &format!("S: {}\noutcome: {}\n", self.s_value, self.outcome);
        if let Some(map) = self.outcome.map() {
            out += &format!("map: {}\n", list(map));
        }
        if let Some(c) = self.colouring() {
            out += &format!("colouring: {}\n", list(&c.colours));
        }
        out
    }

    /// One line for people.
    pub fn summary(&self) -> String {
        match &self.outcome {
            Outcome::Failed { reason } => format!("{} decomposition failed: {reason}", self.kind),
            o => {
                let r = self.part("R").map_or(0, <[usize]>::len);
                format!("{} decomposition: {} with |R| = {r}, S = {}", self.kind, o.name(), self.s_value)
            }
        }
    }
}

fn check_common(g: &Graph) -> Option<String> {
    if !is_locally_bipartite(g) {
        return Some("not locally bipartite".into());
    }
    if 11 * g.min_degree() <= 6 * g.n() {
        return Some(format!("degree too low: δ = {} and 11δ ≤ 6n = {}", g.min_degree(), 6 * g.n()));
    }
    None
}

fn c7bar() -> Graph {
    generate(FamilyId::C7Bar).expect("parameter-free family")
}

/// Decomposes `g` around a copy of `C7BAR`, aiming for `HOM_C7BAR`.
pub fn decompose_c7bar(g: &Graph) -> DecompositionCertificate {
    let kind = AnchorKind::C7Bar;
    if let Some(reason) = check_common(g) {
        return DecompositionCertificate::failed(kind, reason);
    }
    decompose_anchored(g, kind, &c7bar(), "no C7BAR copy")
}

/// Decomposes `g` around a copy of `H2PLUS`, aiming for `HOM_H2PLUS` and
/// falling back to `HOM_AUGMENTED`.
pub fn decompose_h2plus(g: &Graph) -> DecompositionCertificate {
    let kind = AnchorKind::H2Plus;
    if let Some(reason) = check_common(g) {
        return DecompositionCertificate::failed(kind, reason);
    }
    if find_subgraph(&c7bar(), g, false).is_some() {
        return DecompositionCertificate::failed(kind, "contains C7BAR; use decompose_c7bar");
    }
    let pattern = generate(FamilyId::H2Plus).expect("parameter-free family");
    decompose_anchored(g, kind, &pattern, "no H2PLUS copy")
}

/// Tries up to [`MAX_ANCHORS`] anchors in lexicographic order, in parallel,
/// and keeps the least one that succeeds. When none does, reports the first
/// anchor in solver order.
fn decompose_anchored(g: &Graph, kind: AnchorKind, pattern: &Graph, none: &str) -> DecompositionCertificate {
    let anchors = subgraph_embeddings(pattern, g, false, MAX_ANCHORS);
    let Some(first) = anchors.first().cloned() else {
        return DecompositionCertificate::failed(kind, none);
    };
    let mut sorted = anchors;
    sorted.sort();
    sorted
        .par_iter()
        .map(|a| decompose_at(g, kind, a))
        .find_first(|c| c.outcome.is_hom())
        .unwrap_or_else(|| decompose_at(g, kind, &first))
}

/// Whether classes `a` and `b` (7 standing for `R502`) count towards `S`.
fn counts_in_s(kind: AnchorKind, a: usize, b: usize) -> bool {
    match (a.min(b), a.max(b)) {
        (x, 7) => kind == AnchorKind::H2Plus && (x == 3 || x == 4),
        (x, y) => (y - x) % 7 == 3 || (y - x) % 7 == 4,
    }
}

/// Decomposition around one anchor embedding.
pub fn decompose_at(g: &Graph, kind: AnchorKind, anchor: &[usize]) -> DecompositionCertificate {
    let n = g.n();
    let v = |i: usize| anchor[i % 7];
    let fail = |parts: Vec<Part>, reason: String| DecompositionCertificate {
        kind,
        anchor: anchor.to_vec(),
        parts,
        s_value: 0,
        outcome: Outcome::Failed { reason },
    };

    let core = g.set(anchor[..7].iter().copied());
    for x in g.vertices() {
        let k = g.neighbours(x).intersection_len(&core);
        if k >= 5 {
            return fail(Vec::new(), format!("vertex {x} has {k} neighbours in the anchor"));
        }
    }

    let ds: Vec<VertexSet> = (0..7)
        .map(|i| match (kind, i) {
            (AnchorKind::H2Plus, 1) => g.common_neighbours(&[v(0), v(2), v(3)]),
            (AnchorKind::H2Plus, 6) => g.common_neighbours(&[v(4), v(5), v(0)]),
            _ => g.common_neighbours(&[v(i + 5), v(i + 6), v(i + 1), v(i + 2)]),
        })
        .collect();
    let mut d = VertexSet::new(n);
    for (i, di) in ds.iter().enumerate() {
        if let Some(j) = (0..i).find(|&j| ds[j].intersects(di)) {
            return fail(Vec::new(), format!("D{j} and D{i} overlap"));
        }
        d.union_with(di);
    }
    let r = d.complement();

    let mut parts =
        vec![Part { name: "D".into(), vertices: d.to_vec() }, Part { name: "R".into(), vertices: r.to_vec() }];
    for (i, di) in ds.iter().enumerate() {
        parts.push(Part { name: format!("D{i}"), vertices: di.to_vec() });
    }

    // Size audit.
    let bound = 4 * n as i64 - 7 * g.min_degree() as i64;
    let (audited, label) = match kind {
        AnchorKind::C7Bar => (r.len(), "|R|"),
        AnchorKind::H2Plus => (r.union(&ds[1]).union(&ds[6]).len(), "|R ∪ D1 ∪ D6|"),
    };
    if audited as i64 > bound {
        return fail(parts, format!("size audit: {label} = {audited} > 4n - 7δ = {bound}"));
    }

    let mut r502 = VertexSet::new(n);
    if kind == AnchorKind::H2Plus {
        for x in &r {
            if [5, 0, 2].iter().all(|&i| g.neighbours(x).intersects(&ds[i])) {
                r502.insert(x);
            }
        }
    }

    // Admissible classes, then the initial choice.
    let mut class = vec![usize::MAX; n];
    let mut flexible: Vec<(usize, Vec<usize>)> = Vec::new();
    for x in r.difference(&r502).iter() {
        let nd = g.neighbours(x).intersection(&d);
        let adm: Vec<usize> = (0..7).filter(|&i| nd.is_subset(g.neighbours(v(i)))).collect();
        match adm.len() {
            0 => return fail(parts, format!("vertex {x} has no admissible class")),
            1 => class[x] = adm[0],
            _ => {
                class[x] = adm[0];
                flexible.push((x, adm));
            }
        }
    }
    for x in &r502 {
        class[x] = 7;
    }

    let s_value = match minimise_s(g, kind, &r, &mut class, &flexible) {
        Ok(s) => s,
        Err(reason) => return fail(parts, reason),
    };

    let mut rs = vec![VertexSet::new(n); 7];
    for x in r.difference(&r502).iter() {
        rs[class[x]].insert(x);
    }
    let mut map = vec![0; n];
    let mut ts = Vec::with_capacity(7);
    for i in 0..7 {
        let t = ds[i].union(&rs[i]);
        for x in &t {
            map[x] = i;
        }
        ts.push(t);
    }
    for x in &r502 {
        map[x] = H2PLUS_U;
    }
    for (i, ri) in rs.iter().enumerate() {
        parts.push(Part { name: format!("R{i}"), vertices: ri.to_vec() });
    }
    for (i, ti) in ts.iter().enumerate() {
        parts.push(Part { name: format!("T{i}"), vertices: ti.to_vec() });
    }
    if kind == AnchorKind::H2Plus {
        let dstar = [0, 2, 3, 4, 5].iter().fold(VertexSet::new(n), |acc, &i| acc.union(&ds[i]));
        parts.push(Part { name: "D*".into(), vertices: dstar.to_vec() });
        parts.push(Part { name: "R502".into(), vertices: r502.to_vec() });
    }

    let label =
        |c: usize| if c == H2PLUS_U && kind == AnchorKind::H2Plus { "R502".to_string() } else { format!("T{c}") };
    let violation = |target: &Graph| {
        g.edges().find(|&(x, y)| !target.has_edge(map[x], map[y])).map(|(x, y)| {
            let (a, b) = (map[x].min(map[y]), map[x].max(map[y]));
            format!("edge {x}-{y} joins {} and {}", label(a), label(b))
        })
    };
    let outcome = match kind {
        AnchorKind::C7Bar => match violation(&c7bar()) {
            None => Outcome::HomC7Bar { map },
            Some(v) => Outcome::Failed { reason: v },
        },
        AnchorKind::H2Plus => {
            let plus = generate(FamilyId::H2Plus).expect("parameter-free family");
            let aug = generate(FamilyId::H2PlusAug).expect("parameter-free family");
            match (violation(&plus), violation(&aug)) {
                (None, _) => Outcome::HomH2Plus { map },
                (Some(_), None) => {
                    let c = h2plus_aug_colouring();
                    let colouring = map.iter().map(|&x| c[x]).collect();
                    Outcome::HomAugmented { map, colouring }
                }
                (Some(_), Some(v)) => Outcome::Failed { reason: v },
            }
        }
    };
    DecompositionCertificate { kind, anchor: anchor.to_vec(), parts, s_value, outcome }
}

fn s_of(g: &Graph, kind: AnchorKind, r: &VertexSet, class: &[usize]) -> usize {
    r.iter()
        .map(|x| {
            g.neighbours(x).intersection(r).iter().filter(|&y| y > x && counts_in_s(kind, class[x], class[y])).count()
        })
        .sum()
}

/// Greedy single-vertex moves to strict improvement, then branch and bound
/// over the flexible vertices that touch `R` when `S > 0` and there are at
/// most [`MAX_FLEXIBLE`] of them. Returns the final `S`.
fn minimise_s(
    g: &Graph,
    kind: AnchorKind,
    r: &VertexSet,
    class: &mut [usize],
    flexible: &[(usize, Vec<usize>)],
) -> std::result::Result<usize, String> {
    let local = |class: &[usize], x: usize, c: usize| {
        g.neighbours(x).intersection(r).iter().filter(|&y| counts_in_s(kind, c, class[y])).count()
    };
    loop {
        let mut improved = false;
        for (x, adm) in flexible {
            let now = local(class, *x, class[*x]);
            if let Some(&c) = adm.iter().find(|&&c| local(class, *x, c) < now) {
                class[*x] = c;
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    let s = s_of(g, kind, r, class);
    if s == 0 {
        return Ok(0);
    }
    let free: Vec<&(usize, Vec<usize>)> = flexible.iter().filter(|(x, _)| g.neighbours(*x).intersects(r)).collect();
    if free.len() > MAX_FLEXIBLE {
        return Err(format!("S = {s} after greedy moves and {} flexible vertices exceed the limit", free.len()));
    }

    let mut is_free = VertexSet::new(g.n());
    for (x, _) in &free {
        is_free.insert(*x);
    }
    let fixed = r.difference(&is_free);
    let base = fixed
        .iter()
        .map(|x| {
            g.neighbours(x)
                .intersection(&fixed)
                .iter()
                .filter(|&y| y > x && counts_in_s(kind, class[x], class[y]))
                .count()
        })
        .sum::<usize>();

    struct Bb<'a> {
        g: &'a Graph,
        kind: AnchorKind,
        free: Vec<&'a (usize, Vec<usize>)>,
        fixed: VertexSet,
        work: Vec<usize>,
        best: usize,
        best_class: Vec<usize>,
        nodes: u64,
    }
    impl Bb<'_> {
        fn go(&mut self, k: usize, cost: usize) {
            self.nodes += 1;
            if cost >= self.best || self.nodes > BRANCH_BUDGET {
                return;
            }
            if k == self.free.len() {
                self.best = cost;
                self.best_class = self.work.clone();
                return;
            }
            let (x, adm) = self.free[k];
            for &c in adm {
                let mut add = 0;
                for y in self.g.neighbours(*x).iter() {
                    let placed = self.fixed.contains(y) || self.free[..k].iter().any(|(z, _)| *z == y);
                    if placed && counts_in_s(self.kind, c, self.work[y]) {
                        add += 1;
                    }
                }
                self.work[*x] = c;
                self.go(k + 1, cost + add);
                if self.best == 0 {
                    return;
                }
            }
        }
    }
    let mut bb = Bb { g, kind, free, fixed, work: class.to_vec(), best: s, best_class: class.to_vec(), nodes: 0 };
    bb.go(0, base);
    if bb.nodes > BRANCH_BUDGET && bb.best > 0 {
        return Err(format!("S = {} and the exhaustive search budget ran out", bb.best));
    }
    class.copy_from_slice(&bb.best_class);
    Ok(bb.best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// `δ > 4/7 n`: 3-colourable.
    #[serde(rename = "above 4/7")]
    AboveFourSevenths,
    /// `6/11 n < δ ≤ 4/7 n`: 3-colourable or a decomposition certificate.
    #[serde(rename = "above 6/11")]
    AboveSixElevenths,
    /// `δ ≤ 6/11 n`.
    #[serde(rename = "outside theorem range")]
    Outside,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// The certificate promised for the regime was produced.
    #[serde(rename = "CERTIFIED")]
    Certified,
    /// Below the range; colouring attempted opportunistically.
    #[serde(rename = "OUTSIDE_RANGE")]
    OutsideRange,
    /// A promised certificate is missing: a bug or a counterexample.
    #[serde(rename = "HARD_FAILURE")]
    HardFailure(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileReport {
    pub n: usize,
    pub min_degree: usize,
    #[serde(serialize_with = "crate::weighting::ser_rat")]
    pub ratio: Rational,
    pub regime: Regime,
    pub colouring: Option<Colouring>,
    pub decomposition: Option<DecompositionCertificate>,
    /// Result of the sparse missing-spoke check, run when `δ > 6/11 n` and
    /// the graph has no `H0`.
    pub missing_spoke: Option<Option<MissingSpoke>>,
    pub verdict: Verdict,
}

impl ProfileReport {
    pub fn ok(&self) -> bool {
        !matches!(self.verdict, Verdict::HardFailure(_))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n: {}\nmin_degree: {}\nratio: {}\nregime: {}\n",
            self.n,
            self.min_degree,
            crate::fmt_rat(&self.ratio),
            match self.regime {
                Regime::AboveFourSevenths => "above 4/7",
                Regime::AboveSixElevenths => "above 6/11",
                Regime::Outside => "outside theorem range",
            }
        );
        if let Some(c) = &self.colouring {
            let cs: Vec<String> = c.colours.iter().map(usize::to_string).collect();
            out += &format!("colouring: k={} {}\n", c.k, cs.join(","));
        } else {
            out += "colouring: none\n";
        }
        if let Some(d) = &self.decomposition {
            out += &format!("decomposition: {}\n", d.summary());
        }
        match &self.missing_spoke {
            Some(None) => out += "missing_spoke_check: PASS\n",
            Some(Some(w)) => out += &format!("missing_spoke_check: FAIL pair {},{}\n", w.u, w.v),
            None => {}
        }
        out += &match &self.verdict {
            Verdict::Certified => "verdict: CERTIFIED\n".to_string(),
            Verdict::OutsideRange => "verdict: OUTSIDE_RANGE\n".to_string(),
            Verdict::HardFailure(why) => format!("verdict: HARD_FAILURE {why}\n"),
        };
        out
    }
}

/// The end-to-end pipeline for a locally bipartite graph.
pub fn verify_profile(g: &Graph) -> Result<ProfileReport> {
    if let Some(w) = odd_wheel(g) {
        return Err(Error::NotLocallyBipartite(w));
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (n, delta) = (g.n(), g.min_degree());
    let ratio = Rational::new(delta.into(), n.into());
    let regime = if 7 * delta > 4 * n {
        Regime::AboveFourSevenths
    } else if 11 * delta > 6 * n {
        Regime::AboveSixElevenths
    } else {
        Regime::Outside
    };
    let missing_spoke = (regime != Regime::Outside && is_h0_free(g)).then(|| sparse_missing_spoke(g));
    let mut report = ProfileReport {
        n,
        min_degree: delta,
        ratio,
        regime,
        colouring: None,
        decomposition: None,
        missing_spoke,
        verdict: Verdict::Certified,
    };
    let mut problems = Vec::new();
    if let Some(Some(w)) = &report.missing_spoke {
        problems.push(format!("sparse pair {},{} is the missing spoke of an odd wheel", w.u, w.v));
    }
    match regime {
        Regime::AboveFourSevenths => {
            report.colouring = k_colourable(g, 3);
            if report.colouring.is_none() {
                problems.push("no 3-colouring above 4/7".into());
            }
        }
        Regime::AboveSixElevenths => {
            let cert = if find_subgraph(&c7bar(), g, false).is_some() {
                Some(decompose_c7bar(g))
            } else if find_subgraph(&generate(FamilyId::H2Plus).expect("parameter-free family"), g, false).is_some() {
                Some(decompose_h2plus(g))
            } else {
                None
            };
            match cert {
                Some(cert) => {
                    if let Err(why) = cert.validate(g) {
                        problems.push(format!("certificate does not validate: {why}"));
                    }
                    if !cert.outcome.is_hom() {
                        problems.push(cert.summary());
                    }
                    report.colouring = cert.colouring();
                    report.decomposition = Some(cert);
                }
                None => {
                    report.colouring = k_colourable(g, 3);
                    if report.colouring.is_none() {
                        problems.push("no C7BAR or H2PLUS copy and no 3-colouring".into());
                    }
                }
            }
        }
        Regime::Outside => {
            report.colouring = k_colourable(g, 3).or_else(|| k_colourable(g, 4));
            report.verdict = Verdict::OutsideRange;
        }
    }
    if !problems.is_empty() {
        report.verdict = Verdict::HardFailure(problems.join("; "));
    }
    Ok(report)
}
