//! The claim runner behind `localchrom verify-paper`: every acceptance check
//! as a named claim with a stable id, run in a fixed order with exact
//! arithmetic. Family graphs come from the generators, never from fixtures.

use std::sync::mpsc;
use std::time::{Duration, Instant};

use rand::Rng;
use serde::Serialize;

use crate::canon::{canonical_form, is_isomorphic};
use crate::colouring::{chromatic_number, clique_number, independence_number, k_colourable, two_colouring};
use crate::decompose::{decompose_c7bar, decompose_h2plus, Outcome};
use crate::families::{
    generate, h2plus_aug_colouring, FamilyId, COUNTEREXAMPLE8_FIGURE_WEIGHTS, H2PLUS_FIGURE_WEIGHTS, H2PLUS_U,
    H2_FIGURE_WEIGHTS,
};
use crate::graph::{Graph, WeightedGraph};
use crate::hom::{brute_force_homomorphism, find_homomorphism, find_subgraph, verify_homscores};
use crate::local::{
    classify_pair, dense_set, is_edge_maximal_locally_bipartite, is_h0_free, is_locally_bipartite, saturate, PairClass,
};
use crate::random::{
    random_blow_up, random_dense_graph, random_graph, random_locally_bipartite, random_locally_bipartite_supergraph,
    seeded, Rng64,
};
use crate::search::{check_membership, enumerate_extremal};
use crate::weighting::{forced_zeros, int_weights, optimal_weighting};
use crate::{fmt_rat, rat, Rational};

/// The frozen output of `enumerate_extremal(7, 1/2)`.
pub const SEARCH_N7_GOLDEN: &str = include_str!("../golden/search_n7_half.txt");
/// The frozen output of `enumerate_extremal(9, 1/2)`.
pub const SEARCH_N9_GOLDEN: &str = include_str!("../golden/search_n9_half.txt");
/// Seeded cases per property suite.
pub const PROPERTY_CASES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIP")]
    Skip,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

type ClaimFn = fn() -> Result<String, String>;

/// One checkable statement.
#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    /// The acceptance criterion (1 to 12) the claim belongs to.
    pub criterion: u8,
    /// Filter tags; `--only` matches an id or a tag.
    pub tags: &'static [&'static str],
    pub run: ClaimFn,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub criterion: u8,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub results: Vec<ClaimResult>,
}

impl Report {
    pub fn count(&self, s: Status) -> usize {
        self.results.iter().filter(|r| r.status == s).count()
    }

    /// No claim failed.
    pub fn ok(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn get(&self, id: &str) -> Option<&ClaimResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn to_text(&self) -> String {
        let mut out: String = self
            .results
            .iter()
            .map(|r| format!("{} {} ({} ms): {}\n", r.status, r.id, r.elapsed_ms, r.detail))
            .collect();
        out += &format!(
            "summary: {} passed, {} failed, {} skipped\n",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Ids or tags to run; all claims when empty.
    pub only: Vec<String>,
    /// Per-claim limit; a claim that hits it is reported as SKIP.
    pub timeout: Option<Duration>,
}

/// Every claim, in report order.
pub fn claims() -> Vec<Claim> {
    macro_rules! claim {
        ($id:expr, $c:expr, [$($t:expr),*], $f:expr) => {
            Claim { id: $id, criterion: $c, tags: &[$($t),*], run: $f }
        };
    }
    vec![
        claim!("family-chi-4", 1, ["families", "chi"], family_chi),
        claim!("family-locally-bipartite", 1, ["families"], family_locally_bipartite),
        claim!("H0-five-subsets", 2, ["moser"], h0_five_subsets),
        claim!("saturate-H2", 3, ["saturation"], saturate_h2),
        claim!("edge-maximal-H2PLUS-C7BAR", 3, ["saturation"], edge_maximal_anchors),
        claim!("no-hom-H2PLUS-to-C7BAR", 4, ["hom"], || no_hom(FamilyId::H2Plus, FamilyId::C7Bar)),
        claim!("no-hom-C7BAR-to-H2PLUS", 4, ["hom"], || no_hom(FamilyId::C7Bar, FamilyId::H2Plus)),
        claim!("no-hom-H2PLUS-to-H2", 4, ["hom"], || no_hom(FamilyId::H2Plus, FamilyId::H2)),
        claim!("no-hom-C7BAR-to-H2", 4, ["hom"], || no_hom(FamilyId::C7Bar, FamilyId::H2)),
        claim!("H2-weighted-6/11", 5, ["weighting"], || h2_weighted(&generate(FamilyId::H2).expect("family"))),
        claim!("H2PLUS-weighted-5/9", 5, ["weighting"], h2plus_weighted),
        claim!("C7BAR-weighted-4/7", 5, ["weighting"], || optimum_is(FamilyId::C7Bar, rat(4, 7))),
        claim!("DELTA3-weighted-6/11", 5, ["weighting"], || optimum_is(FamilyId::Delta(3), rat(6, 11))),
        claim!("DELTA2-structure", 6, ["delta", "chi"], || delta_structure(2)),
        claim!("DELTA3-structure", 6, ["delta", "chi"], || delta_structure(3)),
        claim!("DELTA4-structure", 6, ["delta", "chi"], || delta_structure(4)),
        claim!("DELTA2-is-C7BAR", 6, ["delta"], delta2_is_c7bar),
        claim!("H2PLUS_AUG-colouring", 7, ["chi"], h2plus_aug),
        claim!("COUNTEREXAMPLE8-weighted-6/11", 8, ["counterexample", "weighting"], counterexample_weighted),
        claim!("COUNTEREXAMPLE8-structure", 8, ["counterexample", "chi"], counterexample_structure),
        claim!("COUNTEREXAMPLE8-no-hom", 8, ["counterexample", "hom"], counterexample_no_hom),
        claim!("decompose-C7BAR-m2", 9, ["decompose"], || decompose_balanced(2)),
        claim!("decompose-C7BAR-m3", 9, ["decompose"], || decompose_balanced(3)),
        claim!("decompose-C7BAR-m4", 9, ["decompose"], || decompose_balanced(4)),
        claim!("decompose-H2PLUS", 9, ["decompose"], decompose_h2plus_scaled),
        claim!("property-4I", 10, ["properties"], || property_4i(1, PROPERTY_CASES)),
        claim!("property-4sparse", 10, ["properties"], || property_4sparse(2, PROPERTY_CASES)),
        claim!("property-4dense", 10, ["properties"], || property_4dense(3, PROPERTY_CASES)),
        claim!("property-homscores", 10, ["properties", "hom"], || property_homscores(4, PROPERTY_CASES)),
        claim!("property-blow-up", 10, ["properties", "chi"], || property_blow_up(5, PROPERTY_CASES)),
        claim!("property-merge-twins", 10, ["properties"], || property_merge_twins(6, PROPERTY_CASES)),
        claim!("property-hom-compose", 10, ["properties", "hom"], || property_hom_compose(7, PROPERTY_CASES)),
        claim!("property-codegree", 10, ["properties"], || property_codegree(8, PROPERTY_CASES)),
        claim!("search-n7", 11, ["search"], search_n7),
        claim!("search-n9", 11, ["search"], search_n9),
        claim!("aes-r2", 12, ["aes", "chi"], || aes_r2(9, 100)),
    ]
}

/// Runs the selected claims concurrently and reports them in declared order.
pub fn verify_paper(opts: &VerifyOptions) -> Report {
    let selected: Vec<Claim> = claims()
        .into_iter()
        .filter(|c| opts.only.is_empty() || opts.only.iter().any(|o| o == c.id || c.tags.contains(&o.as_str())))
        .collect();
    // Plain threads rather than rayon tasks: a claim may use the rayon pool
    // itself, and a pool worker blocked on a result would starve it.
    let started: Vec<_> = selected.iter().map(spawn_claim).collect();
    let results = selected.iter().zip(started).map(|(c, s)| collect_claim(c, s, opts.timeout)).collect();
    Report { results }
}

type Pending = (Instant, mpsc::Receiver<(std::thread::Result<Result<String, String>>, Duration)>);

fn spawn_claim(c: &Claim) -> Pending {
    let (tx, rx) = mpsc::channel();
    let f = c.run;
    std::thread::spawn(move || {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f);
        let _ = tx.send((r, t.elapsed()));
    });
    (Instant::now(), rx)
}

fn collect_claim(c: &Claim, (start, rx): Pending, timeout: Option<Duration>) -> ClaimResult {
    let got = match timeout {
        Some(t) => rx
            .recv_timeout(t.saturating_sub(start.elapsed()))
            .map_err(|_| format!("timed out after {} s", t.as_secs_f64())),
        None => rx.recv().map_err(|_| "claim thread vanished".to_string()),
    };
    let (status, detail, elapsed) = match got {
        Ok((Ok(Ok(d)), e)) => (Status::Pass, d, e),
        Ok((Ok(Err(d)), e)) => (Status::Fail, d, e),
        Ok((Err(_), e)) => (Status::Fail, "claim panicked".to_string(), e),
        Err(why) => (Status::Skip, why, start.elapsed()),
    };
    ClaimResult { id: c.id.to_string(), criterion: c.criterion, status, detail, elapsed_ms: elapsed.as_millis() }
}

/// Runs one claim on its own thread. A panic is a FAIL; hitting the timeout
/// is a SKIP (the thread is left to finish in the background).
pub fn run_claim(c: &Claim, timeout: Option<Duration>) -> ClaimResult {
    collect_claim(c, spawn_claim(c), timeout)
}

fn fam(id: FamilyId) -> Graph {
    generate(id).expect("valid family")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn family_chi() -> Result<String, String> {
    use FamilyId::*;
    for id in [H0, H1, H2, H2Plus, C7Bar, Wheel(7)] {
        let g = fam(id);
        let (chi, c) = chromatic_number(&g);
        ensure(c.validate(&g), || format!("{id}: colouring does not validate"))?;
        ensure(chi == 4, || format!("χ({id}) = {chi}, expected 4"))?;
        ensure(k_colourable(&g, 3).is_none(), || format!("{id} is 3-colourable"))?;
    }
    Ok("χ = 4 for H0, H1, H2, H2PLUS, C7BAR, WHEEL(7)".into())
}

fn family_locally_bipartite() -> Result<String, String> {
    use FamilyId::*;
    for id in [H0, H1, H2, H2Plus, C7Bar] {
        ensure(is_locally_bipartite(&fam(id)), || format!("{id} is not locally bipartite"))?;
    }
    ensure(!is_locally_bipartite(&fam(Wheel(7))), || "WHEEL(7) is locally bipartite".into())?;
    Ok("all locally bipartite except WHEEL(7)".into())
}

/// A triangle or a 5-cycle on the given vertices, by brute force.
fn has_triangle_or_c5(g: &Graph, vs: &[usize]) -> bool {
    let k = vs.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let (x, y, z) = (vs[a], vs[b], vs[c]);
                if g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z) {
                    return true;
                }
            }
        }
    }
    if k == 5 {
        // Cycles through vs[0] in every order of the other four.
        let rest = [vs[1], vs[2], vs[3], vs[4]];
        for p in permutations(&rest) {
            let cyc = [vs[0], p[0], p[1], p[2], p[3]];
            if (0..5).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % 5])) {
                return true;
            }
        }
    }
    false
}

fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn h0_five_subsets() -> Result<String, String> {
    let g = fam(FamilyId::H0);
    let mut count = 0;
    for mask in 0u32..1 << 7 {
        if mask.count_ones() != 5 {
            continue;
        }
        count += 1;
        let vs: Vec<usize> = (0..7).filter(|&i| mask >> i & 1 == 1).collect();
        ensure(has_triangle_or_c5(&g, &vs), || format!("subset {vs:?} has neither a triangle nor a 5-cycle"))?;
    }
    ensure(count == 21, || format!("{count} subsets checked"))?;
    Ok("all 21 five-vertex subsets contain a triangle or a 5-cycle".into())
}

fn saturate_h2() -> Result<String, String> {
    let s = saturate(&fam(FamilyId::H2)).map_err(|e| e.to_string())?;
    ensure(s == fam(FamilyId::C7Bar), || format!("saturate(H2) = {}", crate::io::emit_compact(&s)))?;
    Ok("saturate(H2) = C7BAR".into())
}

fn edge_maximal_anchors() -> Result<String, String> {
    for id in [FamilyId::H2Plus, FamilyId::C7Bar] {
        ensure(is_edge_maximal_locally_bipartite(&fam(id)), || format!("{id} is not edge-maximal"))?;
    }
    Ok("H2PLUS and C7BAR are edge-maximal locally bipartite".into())
}

fn no_hom(a: FamilyId, b: FamilyId) -> Result<String, String> {
    let (g, h) = (fam(a), fam(b));
    if let Some(c) = find_homomorphism(&g, &h) {
        return Err(format!("{a} -> {b} via {:?}", c.map));
    }
    if let Some(m) = brute_force_homomorphism(&g, &h) {
        return Err(format!("brute force finds {a} -> {b} via {m:?}"));
    }
    Ok(format!("{a} does not map to {b}; brute force over {}^{} maps agrees", h.n(), g.n()))
}

/// The figure weighting of `H2` must give every vertex weighted degree
/// `6/11`, and `t*(H2) = 6/11` with a verified dual.
pub fn h2_weighted(g: &Graph) -> Result<String, String> {
    let ws = int_weights(&H2_FIGURE_WEIGHTS);
    let wg = WeightedGraph::new(g.clone(), ws).map_err(|e| e.to_string())?;
    let total = wg.total_weight();
    let target = rat(6, 11);
    for v in g.vertices() {
        let d = wg.weighted_degree(v) / &total;
        ensure(d == target, || format!("vertex a{v} has weighted degree {} instead of 6/11", fmt_rat(&d)))?;
    }
    let opt = optimal_weighting(g).map_err(|e| e.to_string())?;
    opt.certify(g)?;
    ensure(opt.optimum == target, || format!("t*(H2) = {}", fmt_rat(&opt.optimum)))?;
    Ok("figure weights give every vertex 6/11; t* = 6/11 with dual certificate".into())
}

fn h2plus_weighted() -> Result<String, String> {
    let g = fam(FamilyId::H2Plus);
    let opt = optimal_weighting(&g).map_err(|e| e.to_string())?;
    opt.certify(&g)?;
    ensure(opt.optimum == rat(5, 9), || format!("t*(H2PLUS) = {}", fmt_rat(&opt.optimum)))?;
    let zeros = forced_zeros(&g, &opt.optimum);
    ensure(zeros == vec![1, 6], || format!("vertices forced to zero: {zeros:?}, expected a1, a6"))?;
    let wg = WeightedGraph::new(g.clone(), int_weights(&H2PLUS_FIGURE_WEIGHTS)).map_err(|e| e.to_string())?;
    let total = wg.total_weight();
    let min = wg.min_weighted_degree() / &total;
    ensure(min == rat(5, 9), || format!("figure weights give minimum {}", fmt_rat(&min)))?;
    let centre = wg.weighted_degree(H2PLUS_U) / &total;
    ensure(centre == rat(2, 3), || format!("centre has weighted degree {}", fmt_rat(&centre)))?;
    ensure(wg.weight(H2PLUS_U).clone() / &total == rat(1, 9), || "centre weight is not 1/9".into())?;
    Ok("t* = 5/9, zero exactly at a1 and a6 in every optimum, centre weight 1/9 with degree 2/3".into())
}

fn optimum_is(id: FamilyId, t: Rational) -> Result<String, String> {
    let g = fam(id);
    let opt = optimal_weighting(&g).map_err(|e| e.to_string())?;
    opt.certify(&g)?;
    ensure(opt.optimum == t, || format!("t*({id}) = {}, expected {}", fmt_rat(&opt.optimum), fmt_rat(&t)))?;
    Ok(format!("t*({id}) = {} with dual certificate", fmt_rat(&t)))
}

fn delta_structure(l: usize) -> Result<String, String> {
    let id = FamilyId::Delta(l);
    let g = fam(id);
    ensure(g.n() == 4 * l - 1, || format!("{id} has {} vertices", g.n()))?;
    ensure(g.degrees().iter().all(|&d| d == 2 * l), || format!("{id} is not {}-regular", 2 * l))?;
    let (alpha, _) = independence_number(&g);
    ensure(alpha == l, || format!("α({id}) = {alpha}"))?;
    let (chi, c) = chromatic_number(&g);
    ensure(chi == 4 && c.validate(&g), || format!("χ({id}) = {chi}"))?;
    ensure(is_locally_bipartite(&g), || format!("{id} is not locally bipartite"))?;
    for (u, v) in g.non_edges().collect::<Vec<_>>() {
        let h = g.with_edge(u, v).map_err(|e| e.to_string())?;
        ensure(clique_number(&h) == 4, || format!("adding {u}{v} to {id} gives no K4"))?;
    }
    ensure(is_edge_maximal_locally_bipartite(&g), || format!("{id} is not edge-maximal"))?;
    ensure(find_subgraph(&fam(FamilyId::H2), &g, true).is_none(), || format!("{id} has an induced H2"))?;
    Ok(format!(
        "{id}: {}-regular on {} vertices, α = {l}, χ = 4, every added edge makes a K4, no induced H2",
        2 * l,
        4 * l - 1
    ))
}

fn delta2_is_c7bar() -> Result<String, String> {
    ensure(is_isomorphic(&fam(FamilyId::Delta(2)), &fam(FamilyId::C7Bar)), || "DELTA(2) is not C7BAR".into())?;
    Ok("DELTA(2) ≅ C7BAR".into())
}

fn h2plus_aug() -> Result<String, String> {
    let g = fam(FamilyId::H2PlusAug);
    let c = crate::colouring::Colouring { colours: h2plus_aug_colouring(), k: 4 };
    ensure(c.validate(&g), || "figure colouring is not proper".into())?;
    let (chi, _) = chromatic_number(&g);
    ensure(chi == 4, || format!("χ(H2PLUS_AUG) = {chi}"))?;
    Ok("figure colouring (u, a0..a6) = (1,2,1,3,2,4,3,1) is proper; χ = 4".into())
}

fn counterexample_weighted() -> Result<String, String> {
    let g = fam(FamilyId::Counterexample8);
    let wg = WeightedGraph::new(g.clone(), int_weights(&COUNTEREXAMPLE8_FIGURE_WEIGHTS)).map_err(|e| e.to_string())?;
    let total = wg.total_weight();
    for v in g.vertices() {
        let d = wg.weighted_degree(v) / &total;
        ensure(d == rat(6, 11), || format!("vertex {v} has weighted degree {}", fmt_rat(&d)))?;
    }
    Ok("figure weights give every vertex 6/11 > 1/2".into())
}

fn counterexample_structure() -> Result<String, String> {
    let g = fam(FamilyId::Counterexample8);
    ensure(g.is_twin_free(), || "has twins".into())?;
    ensure(is_edge_maximal_locally_bipartite(&g), || "not edge-maximal locally bipartite".into())?;
    let (chi, _) = chromatic_number(&g);
    ensure(chi == 4, || format!("χ = {chi}"))?;
    Ok("twin-free, edge-maximal locally bipartite, χ = 4".into())
}

fn counterexample_no_hom() -> Result<String, String> {
    let g = fam(FamilyId::Counterexample8);
    ensure(find_homomorphism(&g, &fam(FamilyId::C7Bar)).is_none(), || "maps to C7BAR".into())?;
    for l in 2..=4 {
        ensure(find_homomorphism(&g, &fam(FamilyId::Delta(l))).is_none(), || format!("maps to DELTA({l})"))?;
    }
    Ok("maps to none of C7BAR, DELTA(2..4)".into())
}

fn check_classes(
    cert: &crate::decompose::DecompositionCertificate,
    classes: &[std::ops::Range<usize>],
) -> Result<(), String> {
    for (i, class) in classes.iter().enumerate().take(7) {
        let t = cert.part(&format!("T{i}")).ok_or("missing T part")?;
        ensure(t.iter().copied().eq(class.clone()), || format!("T{i} = {t:?} is not blow-up class {i}"))?;
    }
    Ok(())
}

fn decompose_balanced(m: usize) -> Result<String, String> {
    let b = fam(FamilyId::C7Bar).blow_up(&[m; 7]).map_err(|e| e.to_string())?;
    let cert = decompose_c7bar(&b.graph);
    ensure(matches!(cert.outcome, Outcome::HomC7Bar { .. }), || format!("outcome {}", cert.outcome))?;
    cert.validate(&b.graph)?;
    check_classes(&cert, &b.classes)?;
    Ok(format!("n = {}: HOM_C7BAR with each Ti a blow-up class; certificate validates", 7 * m))
}

/// Sizes `(a0..a6, u)` for the `H2PLUS` round trip: n = 20, δ = 11.
pub const H2PLUS_DECOMPOSITION_SIZES: [usize; 8] = [5, 1, 4, 2, 2, 4, 1, 1];

fn decompose_h2plus_scaled() -> Result<String, String> {
    let b = fam(FamilyId::H2Plus).blow_up(&H2PLUS_DECOMPOSITION_SIZES).map_err(|e| e.to_string())?;
    let (n, delta) = (b.graph.n(), b.graph.min_degree());
    ensure(11 * delta > 6 * n, || format!("δ = {delta} is not above 6/11 of {n}"))?;
    let cert = decompose_h2plus(&b.graph);
    ensure(matches!(cert.outcome, Outcome::HomH2Plus { .. }), || format!("outcome {}", cert.outcome))?;
    cert.validate(&b.graph)?;
    check_classes(&cert, &b.classes)?;
    let u: Vec<usize> = b.classes[H2PLUS_U].clone().collect();
    ensure(cert.part("R502") == Some(u.as_slice()), || "R502 is not the class of u".into())?;
    Ok(format!("n = {n}, δ = {delta}: HOM_H2PLUS with Ti the blow-up classes and R502 the class of u"))
}

fn dense(g: &Graph, u: usize, v: usize) -> bool {
    matches!(classify_pair(g, u, v), Ok(PairClass::Dense))
}

/// All maximum independent sets, by subset enumeration (n <= 16).
fn maximum_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut best = 0;
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if vs.len() < best || !g.is_independent(&g.set(vs.iter().copied())) {
            continue;
        }
        if vs.len() > best {
            best = vs.len();
            out.clear();
        }
        out.push(vs);
    }
    out
}

fn size_between(rng: &mut Rng64, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi)
}

/// Every pair inside every largest independent set of a graph with
/// `δ > n/2` is dense.
pub fn property_4i(seed: u64, cases: usize) -> Result<String, String> {
    let mut rng = seeded(seed);
    let mut pairs = 0;
    for case in 0..cases {
        let n = size_between(&mut rng, 5, 11);
        let g = random_dense_graph(&mut rng, n, 3, 4);
        for i in maximum_independent_sets(&g) {
            for (a, &u) in i.iter().enumerate() {
                for &v in &i[a + 1..] {
                    pairs += 1;
                    ensure(dense(&g, u, v), || {
                        format!("case {case}: pair {u},{v} of {i:?} is sparse in {}", crate::io::emit_compact(&g))
                    })?;
                }
            }
        }
    }
    Ok(format!("{cases} graphs, {pairs} pairs, no violation"))
}

/// In a graph with `δ > n/2`, every induced 4-cycle has a dense diagonal.
pub fn property_4sparse(seed: u64, cases: usize) -> Result<String, String> {
    let mut rng = seeded(seed);
    let mut cycles = 0;
    for case in 0..cases {
        let n = size_between(&mut rng, 5, 11);
        let g = random_dense_graph(&mut rng, n, 2, 3);
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        // The three ways to close a, b, c, d into a 4-cycle.
                        for [w, x, y, z] in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
                            let cyc = g.has_edge(w, x) && g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(z, w);
                            if cyc && !g.has_edge(w, y) && !g.has_edge(x, z) {
                                cycles += 1;
                                ensure(dense(&g, w, y) || dense(&g, x, z), || {
                                    format!("case {case}: induced C4 {w},{x},{y},{z} with two sparse diagonals")
                                })?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{cases} graphs, {cycles} induced 4-cycles, no violation"))
}

/// In a locally bipartite graph without `H0`, each `D_v` is independent.
pub fn property_4dense(seed: u64, cases: usize) -> Result<String, String> {
    let mut rng = seeded(seed);
    let mut done = 0;
    let mut nonempty = 0;
    while done < cases {
        let n = size_between(&mut rng, 5, 10);
        let num = size_between(&mut rng, 1, 4) as u32;
        let g = random_locally_bipartite(&mut rng, n, num, 4);
        if !is_h0_free(&g) {
            continue;
        }
        done += 1;
        for v in g.vertices() {
            let d = dense_set(&g, v);
            nonempty += usize::from(!d.is_empty());
            ensure(g.is_independent(&d), || {
                format!("D_{v} = {d} is not independent in {}", crate::io::emit_compact(&g))
            })?;
        }
    }
    Ok(format!("{cases} graphs, {nonempty} non-empty dense sets, no violation"))
}

fn homscores_pool() -> Vec<Graph> {
    use FamilyId::*;
    let mut pool = vec![Graph::complete(3)];
    pool.extend([C7Bar, H2Plus, Delta(3), Counterexample8].map(fam));
    pool
}

/// A twin-free edge-maximal locally bipartite `F` that maps to a locally
/// bipartite `G` is an induced subgraph of `G`.
pub fn property_homscores(seed: u64, cases: usize) -> Result<String, String> {
    let mut rng = seeded(seed);
    let pool = homscores_pool();
    let mut held = 0;
    for case in 0..cases {
        let f = &pool[case % pool.len()];
        let g = if case % 4 == 3 {
            let n = size_between(&mut rng, 6, 10);
            random_locally_bipartite(&mut rng, n, 3, 4)
        } else {
            let extra = size_between(&mut rng, 0, 3);
            random_locally_bipartite_supergraph(&mut rng, f, 2, extra)
        };
        let r = verify_homscores(f, &g);
        match r.conclusion() {
            Some(false) => return Err(format!("case {case}: {}", r.summary())),
            Some(true) => held += 1,
            None => {}
        }
    }
    ensure(held >= cases / 2, || format!("only {held} cases met the hypotheses"))?;
    Ok(format!("{cases} cases, {held} with hypotheses met, induced copy found in each"))
}

/// χ, clique number and local bipartiteness survive blow-ups.
pub fn property_blow_up(seed: u64, cases: usize) -> Result<String, String> {
    let mut rng = seeded(seed);
    for case in 0..cases {
        let n = size_between(&mut rng, 3, 8);
        let num = size_between(&mut rng, 1, 3) as u32;
        let g = random_graph(&mut rng, n, num, 4);
        let b = random_blow_up(&mut rng, &g, 3).graph;
        let (cg, cb) = (chromatic_number(&g).0, chromatic_number(&b).0);
        ensure(cg == cb, || format!("case {case}: χ {cg} vs {cb}"))?;
        ensure(clique_number(&g) == clique_number(&b), || format!("case {case}: clique numbers differ"))?;
        ensure(is_locally_bipartite(&g) == is_locally_bipartite(&b), || {
            format!("case {case}: local bipartiteness differs")
        })?;
    }
    Ok(format!("{cases} blow-ups, χ, ω and local bipartiteness preserved"))
}

/// Merging twins keeps every weighted degree and the total weight.
pub fn property_merge_twins(seed: u64, cases: usize) -> Result<String, String> {
    let mut rng = seeded(seed);
    for case in 0..cases {
        let n = size_between(&mut rng, 2, 7);
        let g = random_graph(&mut rng, n, 1, 2);
        let b = random_blow_up(&mut rng, &g, 3).graph;
        let weights: Vec<Rational> = (0..b.n()).map(|_| rat(rng.gen_range(0..5), 1)).collect();
        let wg = WeightedGraph::new(b.clone(), weights).map_err(|e| e.to_string())?;
        let (m, map) = wg.merge_twins_with_map();
        ensure(m.graph().is_twin_free(), || format!("case {case}: merged graph has twins"))?;
        ensure(m.total_weight() == wg.total_weight(), || format!("case {case}: total weight changed"))?;
        for v in b.vertices() {
            ensure(wg.weighted_degree(v) == m.weighted_degree(map[v]), || {
                format!("case {case}: vertex {v} changed degree")
            })?;
        }
    }
    Ok(format!("{cases} weighted blow-ups, degrees and totals preserved"))
}

/// A random subgraph of a random blow-up of `h`: maps onto `h`.
fn shrink_of(rng: &mut Rng64, h: &Graph) -> Graph {
    let b = random_blow_up(rng, h, 2).graph;
    let mut g = Graph::empty(b.n());
    for (u, v) in b.edges() {
        if rng.gen_range(0..4) != 0 {
            g.add_edge(u, v);
        }
    }
    g
}

/// Composed homomorphisms validate.
pub fn property_hom_compose(seed: u64, cases: usize) -> Result<String, String> {
    let mut rng = seeded(seed);
    for case in 0..cases {
        let nk = size_between(&mut rng, 2, 5);
        let k = random_graph(&mut rng, nk, 2, 3);
        let h = shrink_of(&mut rng, &k);
        let g = shrink_of(&mut rng, &h);
        let gh = find_homomorphism(&g, &h).ok_or_else(|| format!("case {case}: no map g -> h"))?;
        let hk = find_homomorphism(&h, &k).ok_or_else(|| format!("case {case}: no map h -> k"))?;
        ensure(gh.validate(&g, &h) && hk.validate(&h, &k), || format!("case {case}: a found map is invalid"))?;
        ensure(gh.compose(&hk).validate(&g, &k), || format!("case {case}: composition is invalid"))?;
        let (cg, ck) = (chromatic_number(&g).0, chromatic_number(&k).0);
        ensure(cg <= ck, || format!("case {case}: χ(g) = {cg} > χ(k) = {ck}"))?;
    }
    Ok(format!("{cases} chains g -> h -> k, every composition validates"))
}

/// `d(u,v) = d(u) + d(v) - |Γ(u) ∪ Γ(v)| >= 2δ - n` for all pairs.
pub fn property_codegree(seed: u64, cases: usize) -> Result<String, String> {
    let mut rng = seeded(seed);
    let mut pairs = 0;
    for case in 0..cases {
        let n = size_between(&mut rng, 2, 14);
        let num = size_between(&mut rng, 0, 4) as u32;
        let g = random_graph(&mut rng, n, num, 4);
        for u in 0..n {
            for v in u + 1..n {
                pairs += 1;
                let union = g.neighbours(u).union(g.neighbours(v)).len();
                let d = g.codegree(u, v);
                ensure(d + union == g.degree(u) + g.degree(v), || format!("case {case}: identity fails at {u},{v}"))?;
                ensure(d as i64 >= 2 * g.min_degree() as i64 - n as i64, || {
                    format!("case {case}: bound fails at {u},{v}")
                })?;
            }
        }
    }
    Ok(format!("{cases} graphs, {pairs} pairs, identity and bound hold"))
}

fn search_n7() -> Result<String, String> {
    let half = rat(1, 2);
    let r = enumerate_extremal(7, &half).map_err(|e| e.to_string())?;
    ensure(r.exhausted, || "search did not finish".into())?;
    let graphs: Vec<&Graph> = r.found.iter().map(|f| &f.graph).collect();
    for (name, target) in [("K3", Graph::complete(3)), ("C7BAR", fam(FamilyId::C7Bar))] {
        let hits = graphs.iter().filter(|g| is_isomorphic(g, &target)).count();
        ensure(hits == 1, || format!("{name} appears {hits} times"))?;
    }
    let mut forms: Vec<_> = graphs.iter().map(|g| canonical_form(g)).collect();
    forms.sort();
    forms.dedup();
    ensure(forms.len() == graphs.len(), || "isomorphic duplicates in the output".into())?;
    for f in &r.found {
        let m = check_membership(&f.graph, &half);
        ensure(m.all_pass(), || format!("{} fails membership: {m:?}", crate::io::emit_compact(&f.graph)))?;
    }
    ensure(r.to_lines() == SEARCH_N7_GOLDEN, || format!("output differs from golden:\n{}", r.to_lines()))?;
    Ok(format!("{} graphs (K3, C7BAR), all members, matches golden", r.found.len()))
}

fn search_n9() -> Result<String, String> {
    let half = rat(1, 2);
    let r = enumerate_extremal(9, &half).map_err(|e| e.to_string())?;
    ensure(r.exhausted, || "search did not finish".into())?;
    for f in &r.found {
        ensure(check_membership(&f.graph, &half).all_pass(), || {
            format!("{} fails membership", crate::io::emit_compact(&f.graph))
        })?;
    }
    ensure(r.to_lines() == SEARCH_N9_GOLDEN, || format!("output differs from golden:\n{}", r.to_lines()))?;
    Ok(format!("{} graphs, all members, matches golden", r.found.len()))
}

fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| !g.neighbours(u).intersects(g.neighbours(v)))
}

/// Triangle-free graphs with `δ > 2n/5` are bipartite: checked on `cases`
/// perturbed blow-ups of `K2` and `C5`.
pub fn aes_r2(seed: u64, cases: usize) -> Result<String, String> {
    let mut rng = seeded(seed);
    let (k2, c5) = (Graph::complete(2), Graph::cycle(5).expect("valid cycle"));
    let (mut checked, mut from_c5, mut rejected) = (0, 0, 0);
    let mut attempts = 0;
    while checked < cases {
        attempts += 1;
        if attempts > 200 * cases {
            return Err(format!("only {checked} qualifying graphs after {attempts} attempts"));
        }
        let use_c5 = attempts % 2 == 0;
        let base = if use_c5 { &c5 } else { &k2 };
        let b = random_blow_up(&mut rng, base, 8).graph;
        // Perturb: drop some edges, then try random extra edges that keep
        // the graph triangle-free.
        let mut g = Graph::empty(b.n());
        for (u, v) in b.edges() {
            if rng.gen_range(0..10) != 0 {
                g.add_edge(u, v);
            }
        }
        for _ in 0..b.n() {
            let (u, v) = (rng.gen_range(0..g.n()), rng.gen_range(0..g.n()));
            if u != v && !g.has_edge(u, v) && !g.neighbours(u).intersects(g.neighbours(v)) {
                g.add_edge(u, v);
            }
        }
        if !is_triangle_free(&g) {
            return Err("perturbation produced a triangle".into());
        }
        if 5 * g.min_degree() <= 2 * g.n() {
            rejected += 1;
            continue;
        }
        checked += 1;
        from_c5 += usize::from(use_c5);
        let c = two_colouring(&g).ok_or_else(|| format!("not 2-colourable: {}", crate::io::emit_compact(&g)))?;
        ensure(c.validate(&g), || "2-colouring does not validate".into())?;
    }
    Ok(format!(
        "{checked} triangle-free graphs with δ > 2n/5 are 2-colourable ({from_c5} from C5 blow-ups; {rejected} candidates rejected by the degree filter)"
    ))
}

/// The acceptance criteria titles, by number.
pub fn criterion_title(c: u8) -> &'static str {
    match c {
        1 => "family sanity",
        2 => "five-vertex subsets of H0",
        3 => "saturation chain",
        4 => "non-homomorphism triangle",
        5 => "weighting optima",
        6 => "DELTA family",
        7 => "augmented H2PLUS colouring",
        8 => "eight-vertex counterexample",
        9 => "decomposition round trips",
        10 => "property suites",
        11 => "extremal search",
        12 => "AES r = 2 sanity",
        _ => "unknown",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_ordered_by_criterion() {
        let cs = claims();
        let mut ids: Vec<&str> = cs.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), cs.len());
        assert!(cs.windows(2).all(|w| w[0].criterion <= w[1].criterion));
        assert_eq!(cs.iter().map(|c| c.criterion).max(), Some(12));
    }

    #[test]
    fn mutated_h2_names_the_vertex() {
        let g = fam(FamilyId::H2).without_edge(4, 6);
        let err = h2_weighted(&g).unwrap_err();
        assert!(err.contains("vertex a4 has weighted degree"), "{err}");
    }

    #[test]
    fn only_filters() {
        let r = verify_paper(&VerifyOptions { only: vec!["H0-five-subsets".into()], timeout: None });
        assert_eq!(r.results.len(), 1);
        assert!(r.ok());
    }

    #[test]
    fn timeout_gives_skip() {
        let c = Claim {
            id: "slow",
            criterion: 0,
            tags: &[],
            run: || {
                std::thread::sleep(Duration::from_secs(2));
                Ok(String::new())
            },
        };
        let r = run_claim(&c, Some(Duration::from_millis(10)));
        assert_eq!(r.status, Status::Skip);
    }
}
