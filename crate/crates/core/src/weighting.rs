//! Optimal blow-up weightings.
//!
//! `t*(G)` is the largest `t` such that some weighting `ω >= 0` with total
//! weight one gives every vertex weighted degree at least `t`. Every vertex
//! keeps its degree constraint, including vertices of weight zero (a class of
//! arbitrarily small positive weight in the blow-up). `G` beats `c` exactly
//! when `t* > c`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, WeightedGraph};
use crate::lp::{maximize, LinearProgram, LpOutcome, Relation};
use crate::Rational;

#[derive(Clone, Debug, Serialize)]
pub struct WeightingResult {
    #[serde(serialize_with = "ser_rat")]
    pub optimum: Rational,
    /// An optimal weighting with total weight one.
    #[serde(serialize_with = "ser_rats")]
    pub weights: Vec<Rational>,
    /// An optimal dual distribution: for every `u`, `Σ_{v ∈ Γ(u)} y_v <= t*`.
    #[serde(serialize_with = "ser_rats")]
    pub dual: Vec<Rational>,
    /// Whether some optimal weighting is strictly positive everywhere.
    pub support_full: bool,
    /// Vertices of degree zero; any of them forces `t* = 0`.
    pub isolated: Vec<usize>,
}

pub(crate) fn ser_rat<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::fmt_rat(r))
}

pub(crate) fn ser_rats<S: serde::Serializer>(r: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(r.iter().map(crate::fmt_rat))
}

impl WeightingResult {
    pub fn beats(&self, c: &Rational) -> bool {
        self.optimum > *c
    }

    /// Re-checks primal feasibility, tightness and the dual bound exactly.
    pub fn certify(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        if self.weights.len() != n || self.dual.len() != n {
            return Err("certificate length mismatch".into());
        }
        let one = Rational::one();
        if self.weights.iter().any(Signed::is_negative) || self.weights.iter().sum::<Rational>() != one {
            return Err("primal weights are not a distribution".into());
        }
        if self.dual.iter().any(Signed::is_negative) || self.dual.iter().sum::<Rational>() != one {
            return Err("dual weights are not a distribution".into());
        }
        let wg = WeightedGraph::new(g.clone(), self.weights.clone()).map_err(|e| e.to_string())?;
        let degs = wg.weighted_degrees();
        if let Some(v) = degs.iter().position(|d| *d < self.optimum) {
            return Err(format!("vertex {v} has weighted degree {} < t*", crate::fmt_rat(&degs[v])));
        }
        if !degs.contains(&self.optimum) {
            return Err("no vertex attains t*".into());
        }
        let dual = WeightedGraph::new(g.clone(), self.dual.clone()).map_err(|e| e.to_string())?;
        if let Some(u) = g.vertices().find(|&u| dual.weighted_degree(u) > self.optimum) {
            return Err(format!("dual bound violated at vertex {u}"));
        }
        Ok(())
    }
}

fn solve(lp: &LinearProgram) -> (Rational, Vec<Rational>) {
    match maximize(lp) {
        LpOutcome::Optimal { value, x } => (value, x),
        other => unreachable!("weighting programs are feasible and bounded: {other:?}"),
    }
}

/// Rows `Σ_{u ∈ Γ(v)} x_u` for each `v`, padded with `extra` zero columns.
fn adjacency_rows(g: &Graph, extra: usize) -> Vec<Vec<Rational>> {
    let n = g.n();
    (0..n)
        .map(|v| {
            let mut row = vec![Rational::zero(); n + extra];
            for u in g.neighbours(v) {
                row[u] = Rational::one();
            }
            row
        })
        .collect()
}

fn simplex_row(n: usize, extra: usize) -> Vec<Rational> {
    let mut row = vec![Rational::one(); n];
    row.extend(std::iter::repeat_n(Rational::zero(), extra));
    row
}

/// Computes `t*(G)` with an optimal weighting and a dual certificate.
pub fn optimal_weighting(g: &Graph) -> Result<WeightingResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let unit = |i: usize, len: usize, value: Rational| {
        let mut v = vec![Rational::zero(); len];
        v[i] = value;
        v
    };

    // Primal: max t, t - A ω <= 0, Σ ω = 1.
    let mut primal = LinearProgram::new(n + 1, unit(n, n + 1, Rational::one()));
    for mut row in adjacency_rows(g, 1) {
        row.iter_mut().take(n).for_each(|a| *a = -a.clone());
        row[n] = Rational::one();
        primal.add(row, Relation::Le, Rational::zero());
    }
    primal.add(simplex_row(n, 1), Relation::Eq, Rational::one());
    let (optimum, x) = solve(&primal);
    let weights = x[..n].to_vec();

    // Dual: min s, A y - s <= 0, Σ y = 1.
    let mut dual_lp = LinearProgram::new(n + 1, unit(n, n + 1, -Rational::one()));
    for mut row in adjacency_rows(g, 1) {
        row[n] = -Rational::one();
        dual_lp.add(row, Relation::Le, Rational::zero());
    }
    dual_lp.add(simplex_row(n, 1), Relation::Eq, Rational::one());
    let (neg_dual_value, y) = solve(&dual_lp);
    assert_eq!(-neg_dual_value, optimum, "primal and dual optima differ");
    let dual = y[..n].to_vec();

    // Support: max s, A ω >= t*, Σ ω = 1, ω_v - s >= 0.
    let mut support = LinearProgram::new(n + 1, unit(n, n + 1, Rational::one()));
    for row in adjacency_rows(g, 1) {
        support.add(row, Relation::Ge, optimum.clone());
    }
    support.add(simplex_row(n, 1), Relation::Eq, Rational::one());
    for v in 0..n {
        let mut row = unit(v, n + 1, Rational::one());
        row[n] = -Rational::one();
        support.add(row, Relation::Ge, Rational::zero());
    }
    let (slack, _) = solve(&support);

    let result = WeightingResult {
        optimum,
        weights,
        dual,
        support_full: slack.is_positive(),
        isolated: g.vertices().filter(|&v| g.degree(v) == 0).collect(),
    };
    debug_assert_eq!(result.certify(g), Ok(()));
    Ok(result)
}

/// Vertices that have weight zero in every optimal weighting: those where
/// maximising `ω_v` subject to optimality gives zero.
pub fn forced_zeros(g: &Graph, optimum: &Rational) -> Vec<usize> {
    let n = g.n();
    g.vertices()
        .filter(|&v| {
            let mut obj = vec![Rational::zero(); n];
            obj[v] = Rational::one();
            let mut lp = LinearProgram::new(n, obj);
            for row in adjacency_rows(g, 0) {
                lp.add(row, Relation::Ge, optimum.clone());
            }
            lp.add(simplex_row(n, 0), Relation::Eq, Rational::one());
            match maximize(&lp) {
                LpOutcome::Optimal { value, .. } => value.is_zero(),
                _ => true,
            }
        })
        .collect()
}

/// Whether `min_v Σ_{u ∈ Γ(v)} ω(u) > c · Σ ω`, exactly.
pub fn verify_weighting(g: &Graph, weights: &[Rational], c: &Rational) -> Result<bool> {
    let wg = WeightedGraph::new(g.clone(), weights.to_vec())?;
    let total = wg.total_weight();
    if total.is_zero() {
        return Err(Error::ZeroWeighting);
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(wg.min_weighted_degree() > c * total)
}

/// Integer weights as rationals.
pub fn int_weights(ws: &[i64]) -> Vec<Rational> {
    ws.iter().map(|&w| Rational::from_integer(w.into())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilyId, H2PLUS_FIGURE_WEIGHTS, H2_FIGURE_WEIGHTS};
    use crate::rat;

    fn fam(id: FamilyId) -> Graph {
        generate(id).unwrap()
    }

    fn scaled(ws: &[i64], q: i64) -> Vec<Rational> {
        ws.iter().map(|&w| rat(w, q)).collect()
    }

    #[test]
    fn h2_optimum() {
        let r = optimal_weighting(&fam(FamilyId::H2)).unwrap();
        assert_eq!(r.optimum, rat(6, 11));
        assert_eq!(r.weights, scaled(&H2_FIGURE_WEIGHTS, 11));
        assert!(r.support_full);
        assert_eq!(r.certify(&fam(FamilyId::H2)), Ok(()));
    }

    #[test]
    fn h2plus_optimum() {
        let g = fam(FamilyId::H2Plus);
        let r = optimal_weighting(&g).unwrap();
        assert_eq!(r.optimum, rat(5, 9));
        assert_eq!(r.weights, scaled(&H2PLUS_FIGURE_WEIGHTS, 9));
        assert!(!r.support_full);
        let wg = WeightedGraph::new(g, r.weights.clone()).unwrap();
        assert_eq!(wg.weighted_degree(7), rat(2, 3));
    }

    #[test]
    fn vertex_transitive_optima() {
        assert_eq!(optimal_weighting(&fam(FamilyId::C7Bar)).unwrap().optimum, rat(4, 7));
        assert_eq!(optimal_weighting(&fam(FamilyId::Delta(3))).unwrap().optimum, rat(6, 11));
        assert_eq!(optimal_weighting(&Graph::complete(3)).unwrap().optimum, rat(2, 3));
    }

    #[test]
    fn isolated_and_empty() {
        let r = optimal_weighting(&Graph::empty(2)).unwrap();
        assert_eq!(r.optimum, rat(0, 1));
        assert_eq!(r.isolated, vec![0, 1]);
        assert!(matches!(optimal_weighting(&Graph::empty(0)), Err(Error::EmptyGraph)));
    }

    #[test]
    fn strictness() {
        let h2 = fam(FamilyId::H2);
        let w = int_weights(&H2_FIGURE_WEIGHTS);
        assert!(!verify_weighting(&h2, &w, &rat(6, 11)).unwrap());
        assert!(verify_weighting(&h2, &w, &(rat(6, 11) - rat(1, 1000))).unwrap());
        assert!(verify_weighting(&fam(FamilyId::C7Bar), &int_weights(&[1; 7]), &rat(1, 2)).unwrap());
        assert!(!verify_weighting(&Graph::complete(2), &int_weights(&[1, 1]), &rat(1, 2)).unwrap());
        assert!(matches!(verify_weighting(&h2, &int_weights(&[0; 7]), &rat(1, 2)), Err(Error::ZeroWeighting)));
    }
}
