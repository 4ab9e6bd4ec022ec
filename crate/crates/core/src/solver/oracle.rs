//! Grid enumeration oracle for conclusion bounds.
//!
//! Enumerates every distribution over the constituents whose weights are
//! multiples of `1/d`, keeps those satisfying every premise, and reports the
//! extreme conclusion probabilities among them. It shares no code with the
//! linear-programming path beyond formula evaluation: worlds are enumerated
//! here directly and premise checks are integer cross-multiplications, so the
//! result is an inner approximation of the propagated interval.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::model::{Argument, ModelError, World, ATOM_LIMIT};
use crate::numeric::Rational;

/// Default cap on the number of grid distributions examined.
pub const DEFAULT_GRID_CAP: u128 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("grid has {count} distributions, cap is {cap}")]
    GridTooLarge { count: u128, cap: u128 },
    #[error("grid denominator must be positive")]
    ZeroDenominator,
    #[error("premise bound {0} is too large for the integer grid check")]
    ValueTooLarge(Rational),
    #[error("{0}")]
    Model(#[from] ModelError),
}

/// Extremes of the conclusion probability over the kept grid points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridBounds {
    /// `None` when no grid distribution satisfies the premises and gives the
    /// conclusion's conditioning event positive mass.
    pub bounds: Option<(Rational, Rational)>,
    /// Grid distributions satisfying every premise.
    pub kept: u64,
    pub examined: u64,
}

pub fn brute_force_bounds(argument: &Argument, grid_denominator: u64) -> Result<GridBounds, OracleError> {
    brute_force_bounds_with_cap(argument, grid_denominator, DEFAULT_GRID_CAP)
}

/// Number of ways to write `d` as an ordered sum of `k` non-negative parts.
pub fn grid_size(worlds: usize, grid_denominator: u64) -> u128 {
    if worlds == 0 {
        return 0;
    }
    // C(d + k - 1, k - 1), built incrementally to stay exact
    let (d, k) = (grid_denominator as u128, worlds as u128);
    let mut count: u128 = 1;
    for i in 1..k {
        count = count.saturating_mul(d + i) / i;
    }
    count
}

struct Fraction {
    num: i128,
    den: i128,
}

fn small(value: &Rational) -> Result<Fraction, OracleError> {
    let convert = |x: &BigInt| x.to_i128().filter(|v| v.abs() < 1 << 60);
    match (convert(value.numer()), convert(value.denom())) {
        (Some(num), Some(den)) => Ok(Fraction { num, den }),
        _ => Err(OracleError::ValueTooLarge(value.clone())),
    }
}

struct PremiseCheck {
    /// per world: (in conditioning event, in event ∧ conditioning event)
    membership: Vec<(bool, bool)>,
    lower: Fraction,
    upper: Fraction,
}

pub fn brute_force_bounds_with_cap(
    argument: &Argument,
    grid_denominator: u64,
    cap: u128,
) -> Result<GridBounds, OracleError> {
    if grid_denominator == 0 {
        return Err(OracleError::ZeroDenominator);
    }
    let atoms = &argument.atoms;
    if atoms.len() > ATOM_LIMIT {
        return Err(ModelError::AtomBudgetExceeded { atoms: atoms.len(), budget: ATOM_LIMIT }.into());
    }
    let mut worlds = Vec::new();
    for bits in 0..1u64 << atoms.len() {
        let view = World(bits).view(atoms);
        let mut admissible = true;
        for c in &argument.constraints {
            admissible &= c.evaluate(&view)?;
        }
        if admissible {
            worlds.push(World(bits));
        }
    }
    let count = grid_size(worlds.len(), grid_denominator);
    if count > cap {
        return Err(OracleError::GridTooLarge { count, cap });
    }

    let mut checks = Vec::new();
    for premise in &argument.premises {
        let mut membership = Vec::with_capacity(worlds.len());
        for w in &worlds {
            let view = w.view(atoms);
            let h = premise.target.antecedent.evaluate(&view)?;
            let e = premise.target.consequent.evaluate(&view)?;
            membership.push((h, h && e));
        }
        checks.push(PremiseCheck { membership, lower: small(&premise.lower)?, upper: small(&premise.upper)? });
    }
    let mut conclusion = Vec::with_capacity(worlds.len());
    for w in &worlds {
        let view = w.view(atoms);
        let a = argument.conclusion.antecedent.evaluate(&view)?;
        let c = argument.conclusion.consequent.evaluate(&view)?;
        conclusion.push((a, a && c));
    }

    let mut search = Search {
        checks: &checks,
        conclusion: &conclusion,
        weights: vec![0; worlds.len()],
        best: None,
        kept: 0,
        examined: 0,
    };
    search.descend(0, grid_denominator as i128);

    let bounds = search.best.map(|((ln, ld), (un, ud))| {
        (Rational::new(BigInt::from(ln), BigInt::from(ld)), Rational::new(BigInt::from(un), BigInt::from(ud)))
    });
    Ok(GridBounds { bounds, kept: search.kept, examined: search.examined })
}

type Ratio = (i128, i128);

struct Search<'a> {
    checks: &'a [PremiseCheck],
    conclusion: &'a [(bool, bool)],
    weights: Vec<i128>,
    best: Option<(Ratio, Ratio)>,
    kept: u64,
    examined: u64,
}

impl Search<'_> {
    fn descend(&mut self, index: usize, remaining: i128) {
        if index + 1 == self.weights.len() {
            self.weights[index] = remaining;
            self.visit();
            return;
        }
        for w in 0..=remaining {
            self.weights[index] = w;
            self.descend(index + 1, remaining - w);
        }
    }

    fn mass(&self, membership: &[(bool, bool)]) -> (i128, i128) {
        membership.iter().zip(&self.weights).fold((0, 0), |(h, eh), (&(in_h, in_eh), &w)| {
            (h + if in_h { w } else { 0 }, eh + if in_eh { w } else { 0 })
        })
    }

    fn visit(&mut self) {
        self.examined += 1;
        for check in self.checks {
            let (h, eh) = self.mass(&check.membership);
            // lower·h ≤ eh ≤ upper·h
            if check.lower.num * h > eh * check.lower.den || eh * check.upper.den > check.upper.num * h {
                return;
            }
        }
        self.kept += 1;
        let (a, ac) = self.mass(self.conclusion);
        if a == 0 {
            return;
        }
        let value = (ac, a);
        self.best = Some(match self.best {
            None => (value, value),
            Some((low, high)) => (
                if ac * low.1 < low.0 * a { value } else { low },
                if ac * high.1 > high.0 * a { value } else { high },
            ),
        });
    }
}
