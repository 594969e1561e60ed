//! Exact two-phase simplex over ℚ with Bland's rule.
//!
//! All variables are free; they are split as `x = x⁺ − x⁻` internally.

use num_traits::{One, Signed, Zero};

use crate::linalg::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, relation: Relation, rhs: Rat) -> Self {
        Self { coeffs, relation, rhs }
    }

    pub fn holds(&self, x: &[Rat]) -> bool {
        let lhs: Rat = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rat, x: Vec<Rat> },
    Unbounded,
    Infeasible,
}

struct Tableau {
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        self.rhs[r] /= &p;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost · z` over the current basic feasible solution.
    /// Returns `false` when unbounded.
    fn run(&mut self, cost: &[Rat], allowed: impl Fn(usize) -> bool) -> bool {
        loop {
            let entering = (0..self.cols).find(|&j| {
                if !allowed(j) || self.basis.contains(&j) {
                    return false;
                }
                let reduced: Rat =
                    &cost[j] - self.basis.iter().enumerate().map(|(i, &b)| &cost[b] * &self.rows[i][j]).sum::<Rat>();
                reduced.is_positive()
            });
            let Some(c) = entering else { return true };
            let mut leaving: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][c].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][c];
                let better = match &leaving {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            match leaving {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }

    fn value_of(&self, j: usize) -> Rat {
        self.basis.iter().position(|&b| b == j).map_or_else(Rat::zero, |i| self.rhs[i].clone())
    }
}

/// Maximizes `objective · x` subject to `constraints`, with `x ∈ ℚ^nvars` free.
pub fn maximize(objective: &[Rat], constraints: &[Constraint], nvars: usize) -> LpOutcome {
    let m = constraints.len();
    let slack_count = constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let structural = 2 * nvars;
    let art0 = structural + slack_count;
    let cols = art0 + m;
    let mut rows = vec![vec![Rat::zero(); cols]; m];
    let mut rhs = vec![Rat::zero(); m];
    let mut slack = structural;
    for (i, con) in constraints.iter().enumerate() {
        debug_assert_eq!(con.coeffs.len(), nvars);
        for (j, a) in con.coeffs.iter().enumerate() {
            rows[i][j] = a.clone();
            rows[i][nvars + j] = -a;
        }
        match con.relation {
            Relation::Le => {
                rows[i][slack] = Rat::one();
                slack += 1;
            }
            Relation::Ge => {
                rows[i][slack] = -Rat::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        rhs[i] = con.rhs.clone();
        if rhs[i].is_negative() {
            for x in rows[i].iter_mut() {
                *x = -&*x;
            }
            rhs[i] = -&rhs[i];
        }
        rows[i][art0 + i] = Rat::one();
    }
    let mut t = Tableau { rows, rhs, basis: (art0..cols).collect(), cols };

    let phase1: Vec<Rat> = (0..cols).map(|j| if j >= art0 { -Rat::one() } else { Rat::zero() }).collect();
    t.run(&phase1, |_| true);
    if t.rhs.iter().zip(&t.basis).any(|(v, &b)| b >= art0 && !v.is_zero()) {
        return LpOutcome::Infeasible;
    }
    // drive zero-valued artificials out of the basis, dropping redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= art0 {
            match (0..art0).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut cost = vec![Rat::zero(); cols];
    for (j, c) in objective.iter().enumerate() {
        cost[j] = c.clone();
        cost[nvars + j] = -c;
    }
    if !t.run(&cost, |j| j < art0) {
        return LpOutcome::Unbounded;
    }
    let x: Vec<Rat> = (0..nvars).map(|j| t.value_of(j) - t.value_of(nvars + j)).collect();
    let value = objective.iter().zip(&x).map(|(a, b)| a * b).sum();
    LpOutcome::Optimal { value, x }
}

/// Some point satisfying every constraint, or `None`.
pub fn feasible_point(constraints: &[Constraint], nvars: usize) -> Option<Vec<Rat>> {
    match maximize(&vec![Rat::zero(); nvars], constraints, nvars) {
        LpOutcome::Optimal { x, .. } => Some(x),
        LpOutcome::Unbounded => unreachable!("zero objective is bounded"),
        LpOutcome::Infeasible => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    fn c(coeffs: &[i64], relation: Relation, rhs: i64) -> Constraint {
        Constraint::new(coeffs.iter().map(|&x| rat(x)).collect(), relation, rat(rhs))
    }

    #[test]
    fn textbook_maximum() {
        // max 3x + 2y s.t. x + y ≤ 4, x + 3y ≤ 6, x, y ≥ 0
        let cons = [
            c(&[1, 1], Relation::Le, 4),
            c(&[1, 3], Relation::Le, 6),
            c(&[1, 0], Relation::Ge, 0),
            c(&[0, 1], Relation::Ge, 0),
        ];
        match maximize(&[rat(3), rat(2)], &cons, 2) {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, rat(12));
                assert_eq!(x, vec![rat(4), rat(0)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fractional_optimum() {
        // max x + y s.t. 2x + y ≤ 2, x + 2y ≤ 2
        let cons = [c(&[2, 1], Relation::Le, 2), c(&[1, 2], Relation::Le, 2)];
        match maximize(&[rat(1), rat(1)], &cons, 2) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, ratio(4, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unbounded_and_infeasible() {
        assert_eq!(maximize(&[rat(1)], &[c(&[1], Relation::Ge, 0)], 1), LpOutcome::Unbounded);
        let cons = [c(&[1], Relation::Ge, 1), c(&[1], Relation::Le, 0)];
        assert_eq!(maximize(&[rat(1)], &cons, 1), LpOutcome::Infeasible);
        assert!(feasible_point(&cons, 1).is_none());
    }

    #[test]
    fn equalities_with_negative_rhs() {
        let cons = [c(&[1, 1], Relation::Eq, -3), c(&[1, -1], Relation::Eq, 1), c(&[1, 1], Relation::Eq, -3)];
        let x = feasible_point(&cons, 2).unwrap();
        assert_eq!(x, vec![rat(-1), rat(-2)]);
        assert!(cons.iter().all(|k| k.holds(&x)));
    }

    #[test]
    fn degenerate_vertex_terminates() {
        // many constraints through the origin
        let cons = [
            c(&[1, 1], Relation::Le, 0),
            c(&[1, -1], Relation::Le, 0),
            c(&[-1, 1], Relation::Le, 0),
            c(&[2, 1], Relation::Le, 0),
            c(&[0, 1], Relation::Le, 1),
        ];
        match maximize(&[rat(1), rat(0)], &cons, 2) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(0)),
            other => panic!("{other:?}"),
        }
    }
}
