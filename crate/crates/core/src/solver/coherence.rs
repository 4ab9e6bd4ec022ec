//! Coherence of (interval) conditional assessments by linear feasibility
//! with zero-layer recursion.
//!
//! Each level has an active premise set `S` and a normalization domain `D`
//! (all worlds at the top level, `⋁_{i∈S} H_i` below it):
//!
//! 1. the rows of `S` together with `Σ_{w∈D} λ_w = 1` must be feasible;
//! 2. a second program finds which conditioning events `H_i` can receive
//!    positive probability. It maximizes `Σ t_i` subject to `t_i ≤ Σ_{H_i} λ`
//!    and `t_i ≤ 1` over the homogeneous premise cone, so at the optimum
//!    `t_i = 1` exactly for the events that can be positive and `t_i = 0` for
//!    the ones forced to zero.
//!
//! The forced-zero premises form the next zero layer and are checked again on
//! their own. Below the top level every feasible system gives some `H_i`
//! positive mass, so layers strictly shrink and the recursion ends after at
//! most `premises + 1` levels.

use num_traits::{One, Zero};

use crate::model::{Assessment, Distribution, Formula};
use crate::numeric::Rational;

use super::constituents::ConstituentSpace;
use super::lp::{solve_lp, LinearProgram, LpError, Relation, Sense};
use super::premises::{build_premise_constraints, PremiseRow};
use super::SolverError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoherenceStatus {
    Coherent,
    Incoherent,
}

/// Premises whose conditioning events have probability zero in every
/// distribution satisfying the enclosing level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroLayer {
    /// 1 for the first layer below the full assessment.
    pub depth: usize,
    pub premises: Vec<usize>,
    pub conditions: Vec<Formula>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceVerdict {
    pub status: CoherenceStatus,
    /// Distribution over the constituents satisfying every premise row; every
    /// conditioning event outside the zero layers has positive probability.
    pub witness: Option<Distribution>,
    pub zero_layers: Vec<ZeroLayer>,
    /// Premises of the level that had no solution, when incoherent.
    pub conflict: Option<Vec<usize>>,
}

impl CoherenceVerdict {
    pub fn is_coherent(&self) -> bool {
        self.status == CoherenceStatus::Coherent
    }

    /// Conditioning events forced to zero, across all layers.
    pub fn zero_conditions(&self) -> impl Iterator<Item = &Formula> {
        self.zero_layers.iter().flat_map(|l| l.conditions.iter())
    }
}

pub fn check_coherence(space: &ConstituentSpace, premises: &[Assessment]) -> Result<CoherenceVerdict, SolverError> {
    let rows = build_premise_constraints(space, premises)?;
    let conditions = premises
        .iter()
        .map(|p| space.bind(&p.target.antecedent).map(|c| space.indicator(&c)))
        .collect::<Result<Vec<_>, _>>()?;

    let mut active: Vec<usize> = (0..premises.len()).collect();
    let mut domain = vec![true; space.len()];
    let mut zero_layers = Vec::new();
    let mut witness = None;

    for depth in 0..=premises.len() + 1 {
        let Some(feasible) = normalized_point(space.len(), &rows, &active, &domain)? else {
            return Ok(CoherenceVerdict {
                status: CoherenceStatus::Incoherent,
                witness: None,
                zero_layers,
                conflict: Some(active),
            });
        };
        let (positive, cone_point) = positive_conditions(space.len(), &rows, &active, &conditions)?;
        if depth == 0 {
            let total: Rational = cone_point.iter().sum();
            let weights = if total.is_zero() { feasible } else { cone_point.into_iter().map(|x| x / &total).collect() };
            witness = Some(distribution(space, weights));
        }
        let forced: Vec<usize> = active.iter().copied().filter(|i| !positive.contains(i)).collect();
        if forced.is_empty() {
            return Ok(CoherenceVerdict { status: CoherenceStatus::Coherent, witness, zero_layers, conflict: None });
        }
        let next_domain: Vec<bool> =
            (0..space.len()).map(|w| forced.iter().any(|&i| conditions[i][w])).collect();
        if forced == active && next_domain == domain {
            // a feasible level with no positive conditioning event cannot recur
            return Err(SolverError::Internal("zero-layer recursion made no progress".into()));
        }
        zero_layers.push(ZeroLayer {
            depth: depth + 1,
            conditions: forced.iter().map(|&i| premises[i].target.antecedent.clone()).collect(),
            premises: forced.clone(),
        });
        active = forced;
        domain = next_domain;
    }
    Err(SolverError::Internal("zero-layer recursion exceeded its depth bound".into()))
}

fn distribution(space: &ConstituentSpace, weights: Vec<Rational>) -> Distribution {
    Distribution { atoms: space.atoms.clone(), masses: space.worlds.iter().copied().zip(weights).collect() }
}

fn premise_rows<'a>(rows: &'a [PremiseRow], active: &'a [usize]) -> impl Iterator<Item = &'a PremiseRow> {
    rows.iter().filter(move |r| active.contains(&r.premise))
}

/// A point satisfying the active rows with `Σ_{w∈domain} λ_w = 1`, if any.
fn normalized_point(
    worlds: usize,
    rows: &[PremiseRow],
    active: &[usize],
    domain: &[bool],
) -> Result<Option<Vec<Rational>>, SolverError> {
    let mut lp = LinearProgram::new(worlds);
    for row in premise_rows(rows, active) {
        lp.constraints.push(row.constraint.clone());
    }
    let normalization = (0..worlds).filter(|&w| domain[w]).map(|w| (w, Rational::one())).collect();
    lp.constrain(normalization, Relation::Equal, Rational::one());
    match solve_lp(&lp) {
        Ok(opt) => Ok(Some(opt.solution)),
        Err(LpError::Infeasible) => Ok(None),
        Err(e) => Err(SolverError::Internal(e.to_string())),
    }
}

/// Active premises whose conditioning event can have positive probability,
/// plus a cone point giving all of them positive mass.
fn positive_conditions(
    worlds: usize,
    rows: &[PremiseRow],
    active: &[usize],
    conditions: &[Vec<bool>],
) -> Result<(Vec<usize>, Vec<Rational>), SolverError> {
    let mut lp = LinearProgram::new(worlds + active.len());
    for row in premise_rows(rows, active) {
        lp.constraints.push(row.constraint.clone());
    }
    for (k, &i) in active.iter().enumerate() {
        let t = worlds + k;
        let mut terms = vec![(t, Rational::one())];
        terms.extend((0..worlds).filter(|&w| conditions[i][w]).map(|w| (w, -Rational::one())));
        lp.constrain(terms, Relation::LessEq, Rational::zero());
        lp.constrain(vec![(t, Rational::one())], Relation::LessEq, Rational::one());
    }
    let objective = (0..active.len()).map(|k| (worlds + k, Rational::one())).collect();
    let lp = lp.with_objective(Sense::Maximize, objective);
    let opt = solve_lp(&lp).map_err(|e| SolverError::Internal(e.to_string()))?;
    let positive = active
        .iter()
        .enumerate()
        .filter(|(k, _)| !opt.solution[worlds + k].is_zero())
        .map(|(_, &i)| i)
        .collect();
    let mut point = opt.solution;
    point.truncate(worlds);
    Ok((positive, point))
}
