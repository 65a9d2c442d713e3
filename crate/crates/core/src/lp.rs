//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Solves `maximize c·x` subject to linear constraints and `x >= 0`.

use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    pub fn new(num_vars: usize, objective: Vec<Rational>) -> Self {
        assert_eq!(objective.len(), num_vars);
        LinearProgram { num_vars, objective, constraints: Vec::new() }
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    /// Checks feasibility of `x` exactly.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs: Rational = c.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        self.objective.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Reduced costs `c_B B^-1 A - c`, with the objective value in the last slot.
    z: Vec<Rational>,
    cols: usize,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.cols
    }

    fn price(&mut self, cost: &[Rational]) {
        let rhs = self.rhs();
        let mut z: Vec<Rational> =
            (0..=rhs).map(|j| if j < rhs { -cost[j].clone() } else { Rational::zero() }).collect();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for j in 0..=rhs {
                if !row[j].is_zero() {
                    z[j] += cb * &row[j];
                }
            }
        }
        self.z = z;
    }

    fn pivot(&mut self, r: usize, s: usize) {
        let p = self.rows[r][s].clone();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x /= &p;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[s].is_zero() {
                continue;
            }
            let f = row[s].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        if !self.z[s].is_zero() {
            let f = self.z[s].clone();
            for (x, y) in self.z.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = s;
    }

    /// Runs simplex iterations over columns `< allowed`. Returns false when
    /// unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        let rhs = self.rhs();
        loop {
            let Some(s) = (0..allowed).find(|&j| self.z[j].is_negative()) else { return true };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[s].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[s];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, s);
        }
    }
}

/// Solves the program exactly.
pub fn maximize(lp: &LinearProgram) -> LpOutcome {
    let n = lp.num_vars;
    let m = lp.constraints.len();
    let mut normalized: Vec<Constraint> = lp.constraints.clone();
    for c in &mut normalized {
        if c.rhs.is_negative() {
            c.coeffs.iter_mut().for_each(|a| *a = -a.clone());
            c.rhs = -c.rhs.clone();
            c.relation = match c.relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }
    let n_slack = normalized.iter().filter(|c| c.relation != Relation::Eq).count();
    let n_art = normalized.iter().filter(|c| c.relation != Relation::Le).count();
    let first_art = n + n_slack;
    let cols = first_art + n_art;
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut slack, mut art) = (n, first_art);
    for c in &normalized {
        let mut row = vec![Rational::zero(); cols + 1];
        row[..n].clone_from_slice(&c.coeffs);
        row[cols] = c.rhs.clone();
        match c.relation {
            Relation::Le => {
                row[slack] = Rational::one();
                basis.push(slack);
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = -Rational::one();
                slack += 1;
                row[art] = Rational::one();
                basis.push(art);
                art += 1;
            }
            Relation::Eq => {
                row[art] = Rational::one();
                basis.push(art);
                art += 1;
            }
        }
        rows.push(row);
    }
    let mut t = Tableau { rows, basis, z: Vec::new(), cols };

    if n_art > 0 {
        let mut phase1 = vec![Rational::zero(); cols];
        for c in phase1.iter_mut().skip(first_art) {
            *c = -Rational::one();
        }
        t.price(&phase1);
        t.optimize(cols);
        if t.z[cols].is_negative() {
            return LpOutcome::Infeasible;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= first_art {
                match (0..first_art).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut cost = vec![Rational::zero(); cols];
    cost[..n].clone_from_slice(&lp.objective);
    t.price(&cost);
    if !t.optimize(first_art) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            x[b] = t.rows[i][cols].clone();
        }
    }
    let value = lp.objective_value(&x);
    debug_assert_eq!(value, t.z[cols]);
    LpOutcome::Optimal { value, x }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| rat(a, 1)).collect()
    }

    #[test]
    fn textbook() {
        // max 3x + 5y; x <= 4; 2y <= 12; 3x + 2y <= 18 -> 36 at (2, 6)
        let mut lp = LinearProgram::new(2, r(&[3, 5]));
        lp.add(r(&[1, 0]), Relation::Le, rat(4, 1));
        lp.add(r(&[0, 2]), Relation::Le, rat(12, 1));
        lp.add(r(&[3, 2]), Relation::Le, rat(18, 1));
        assert_eq!(maximize(&lp), LpOutcome::Optimal { value: rat(36, 1), x: r(&[2, 6]) });
    }

    #[test]
    fn equality_and_ge() {
        // max -x - y; x + y = 1; x >= 1/3 -> value -1
        let mut lp = LinearProgram::new(2, r(&[-1, -1]));
        lp.add(r(&[1, 1]), Relation::Eq, rat(1, 1));
        lp.add(r(&[1, 0]), Relation::Ge, rat(1, 3));
        match maximize(&lp) {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, rat(-1, 1));
                assert!(lp.is_feasible(&x));
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1, r(&[1]));
        lp.add(r(&[1]), Relation::Le, rat(1, 1));
        lp.add(r(&[1]), Relation::Ge, rat(2, 1));
        assert_eq!(maximize(&lp), LpOutcome::Infeasible);
        let mut lp = LinearProgram::new(2, r(&[1, 0]));
        lp.add(r(&[0, 1]), Relation::Le, rat(1, 1));
        assert_eq!(maximize(&lp), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::new(2, r(&[1, 2]));
        lp.add(r(&[1, 1]), Relation::Eq, rat(1, 1));
        lp.add(r(&[2, 2]), Relation::Eq, rat(2, 1));
        assert_eq!(maximize(&lp), LpOutcome::Optimal { value: rat(2, 1), x: r(&[0, 1]) });
    }

    #[test]
    fn negative_rhs() {
        // max x; -x >= -5  (x <= 5)
        let mut lp = LinearProgram::new(1, r(&[1]));
        lp.add(r(&[-1]), Relation::Ge, rat(-5, 1));
        assert_eq!(maximize(&lp), LpOutcome::Optimal { value: rat(5, 1), x: r(&[5]) });
    }
}
