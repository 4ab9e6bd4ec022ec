//! Exact two-phase primal simplex over [`Rational`] with Bland's rule.
//!
//! All variables are non-negative. Each row is `terms (≤ | ≥ | =) rhs`.
//! Bland's rule (smallest-index entering column, smallest-index leaving basic
//! variable among ratio ties) guarantees termination on degenerate programs,
//! and the absence of any randomness makes results reproducible.

use num_traits::{Signed, Zero};

use crate::numeric::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    LessEq,
    GreaterEq,
    Equal,
}

impl Relation {
    fn flipped(self) -> Self {
        match self {
            Relation::LessEq => Relation::GreaterEq,
            Relation::GreaterEq => Relation::LessEq,
            Relation::Equal => Relation::Equal,
        }
    }

    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::LessEq => lhs <= rhs,
            Relation::GreaterEq => lhs >= rhs,
            Relation::Equal => lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// Sparse linear form `Σ coefficient · x_variable`.
pub type LinearForm = Vec<(usize, Rational)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub terms: LinearForm,
    pub relation: Relation,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn new(terms: LinearForm, relation: Relation, rhs: Rational) -> Self {
        Self { terms, relation, rhs }
    }

    pub fn lhs(&self, point: &[Rational]) -> Rational {
        evaluate_form(&self.terms, point)
    }

    pub fn is_satisfied(&self, point: &[Rational]) -> bool {
        self.relation.holds(&self.lhs(point), &self.rhs)
    }
}

pub fn evaluate_form(form: &[(usize, Rational)], point: &[Rational]) -> Rational {
    form.iter().map(|(j, c)| c * &point[*j]).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub constraints: Vec<LinearConstraint>,
    pub sense: Sense,
    pub objective: LinearForm,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        Self { num_vars, constraints: Vec::new(), sense: Sense::Minimize, objective: Vec::new() }
    }

    pub fn constrain(&mut self, terms: LinearForm, relation: Relation, rhs: Rational) -> &mut Self {
        self.constraints.push(LinearConstraint::new(terms, relation, rhs));
        self
    }

    pub fn with_objective(mut self, sense: Sense, objective: LinearForm) -> Self {
        self.sense = sense;
        self.objective = objective;
        self
    }

    /// Whether `point` is non-negative and satisfies every row exactly.
    pub fn is_feasible(&self, point: &[Rational]) -> bool {
        point.len() == self.num_vars
            && point.iter().all(|x| !x.is_negative())
            && self.constraints.iter().all(|c| c.is_satisfied(point))
    }

    pub fn objective_value(&self, point: &[Rational]) -> Rational {
        evaluate_form(&self.objective, point)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimum {
    pub value: Rational,
    /// A basic feasible solution attaining `value`.
    pub solution: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LpError {
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("row {row} references variable {variable}, but only {num_vars} are declared")]
    UnknownVariable { row: usize, variable: usize, num_vars: usize },
}

pub fn solve_lp(lp: &LinearProgram) -> Result<Optimum, LpError> {
    let n = lp.num_vars;
    for (row, c) in lp.constraints.iter().enumerate() {
        if let Some((variable, _)) = c.terms.iter().find(|(j, _)| *j >= n) {
            return Err(LpError::UnknownVariable { row, variable: *variable, num_vars: n });
        }
    }
    if let Some((variable, _)) = lp.objective.iter().find(|(j, _)| *j >= n) {
        return Err(LpError::UnknownVariable { row: lp.constraints.len(), variable: *variable, num_vars: n });
    }

    let mut tableau = Tableau::standard_form(lp);
    tableau.phase_one()?;

    // internal form minimizes
    let mut cost = vec![Rational::zero(); tableau.width()];
    for (j, c) in &lp.objective {
        match lp.sense {
            Sense::Minimize => cost[*j] += c,
            Sense::Maximize => cost[*j] -= c,
        }
    }
    tableau.optimize(&cost)?;

    let mut solution = vec![Rational::zero(); n];
    for (i, &b) in tableau.basis.iter().enumerate() {
        if b < n {
            solution[b] = tableau.rhs(i).clone();
        }
    }
    let value = lp.objective_value(&solution);
    Ok(Optimum { value, solution })
}

struct Tableau {
    /// `m` rows of `width() + 1` entries, the last being the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Columns at or beyond this index are artificial.
    first_artificial: usize,
    columns: usize,
    /// Reduced costs followed by the negated objective value.
    reduced: Vec<Rational>,
}

impl Tableau {
    fn standard_form(lp: &LinearProgram) -> Self {
        let n = lp.num_vars;
        let mut normalized: Vec<(Vec<Rational>, Relation, Rational)> = Vec::with_capacity(lp.constraints.len());
        for c in &lp.constraints {
            let mut dense = vec![Rational::zero(); n];
            for (j, v) in &c.terms {
                dense[*j] += v;
            }
            if c.rhs.is_negative() {
                normalized.push((dense.into_iter().map(|v| -v).collect(), c.relation.flipped(), -c.rhs.clone()));
            } else {
                normalized.push((dense, c.relation, c.rhs.clone()));
            }
        }
        let slacks = normalized.iter().filter(|(_, r, _)| *r != Relation::Equal).count();
        let artificials = normalized.iter().filter(|(_, r, _)| *r != Relation::LessEq).count();
        let first_artificial = n + slacks;
        let columns = first_artificial + artificials;

        let mut rows = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        let (mut next_slack, mut next_artificial) = (n, first_artificial);
        for (dense, relation, rhs) in normalized {
            let mut row = dense;
            row.resize(columns + 1, Rational::zero());
            row[columns] = rhs;
            match relation {
                Relation::LessEq => {
                    row[next_slack] = Rational::from_integer(1.into());
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::GreaterEq => {
                    row[next_slack] = Rational::from_integer((-1).into());
                    next_slack += 1;
                    row[next_artificial] = Rational::from_integer(1.into());
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
                Relation::Equal => {
                    row[next_artificial] = Rational::from_integer(1.into());
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
            }
            rows.push(row);
        }
        Self { rows, basis, first_artificial, columns, reduced: Vec::new() }
    }

    fn width(&self) -> usize {
        self.columns
    }

    fn rhs(&self, row: usize) -> &Rational {
        &self.rows[row][self.columns]
    }

    fn phase_one(&mut self) -> Result<(), LpError> {
        if self.first_artificial == self.columns {
            return Ok(());
        }
        let mut cost = vec![Rational::zero(); self.columns];
        for c in cost.iter_mut().skip(self.first_artificial) {
            *c = Rational::from_integer(1.into());
        }
        self.price(&cost);
        self.iterate(self.columns)?;
        if !self.reduced[self.columns].is_zero() {
            return Err(LpError::Infeasible);
        }
        // Pivot remaining (zero-valued) artificials out, dropping redundant rows.
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.first_artificial {
                match (0..self.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        Ok(())
    }

    fn optimize(&mut self, cost: &[Rational]) -> Result<(), LpError> {
        self.price(cost);
        self.iterate(self.first_artificial)
    }

    /// Sets the reduced-cost row for `cost` relative to the current basis.
    fn price(&mut self, cost: &[Rational]) {
        let mut reduced: Vec<Rational> = cost.to_vec();
        reduced.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (r, a) in reduced.iter_mut().zip(&self.rows[i]) {
                if !a.is_zero() {
                    *r -= cb * a;
                }
            }
        }
        self.reduced = reduced;
    }

    /// Primal simplex with Bland's rule over columns `0..allowed`.
    fn iterate(&mut self, allowed: usize) -> Result<(), LpError> {
        loop {
            let Some(entering) = (0..allowed).find(|&j| self.reduced[j].is_negative()) else {
                return Ok(());
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][entering];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leaving {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio || (ratio == *best_ratio && self.basis[i] < self.basis[*best])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((row, _)) = leaving else {
                return Err(LpError::Unbounded);
            };
            self.pivot(row, entering);
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            if !v.is_zero() {
                *v /= &pivot;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[row]);
        for (i, other) in self.rows.iter_mut().enumerate() {
            if i != row {
                eliminate(other, &pivot_row, col);
            }
        }
        if !self.reduced.is_empty() {
            eliminate(&mut self.reduced, &pivot_row, col);
        }
        self.rows[row] = pivot_row;
        self.basis[row] = col;
    }
}

fn eliminate(target: &mut [Rational], pivot_row: &[Rational], col: usize) {
    let factor = target[col].clone();
    if factor.is_zero() {
        return;
    }
    for (t, p) in target.iter_mut().zip(pivot_row) {
        if !p.is_zero() {
            *t -= &factor * p;
        }
    }
}
