use num_traits::{One, Zero};

use crate::model::{validate_with_budget, Argument, ConclusionInterval, Distribution, VacuousReason};
use crate::numeric::Rational;

use super::coherence::{check_coherence, CoherenceVerdict};
use super::constituents::{enumerate_constituents, ConstituentSpace};
use super::lp::{solve_lp, LinearProgram, LpError, Optimum, Relation, Sense};
use super::premises::build_premise_constraints;
use super::{SolverConfig, SolverError};

/// Everything computed for one argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub space: ConstituentSpace,
    pub verdict: CoherenceVerdict,
    /// `None` when the premises are incoherent.
    pub interval: Option<ConclusionInterval>,
}

/// Best-possible coherent bounds on the conclusion under the default budget.
pub fn propagate_bounds(argument: &Argument) -> Result<ConclusionInterval, SolverError> {
    propagate_bounds_with(argument, &SolverConfig::default())
}

pub fn propagate_bounds_with(argument: &Argument, config: &SolverConfig) -> Result<ConclusionInterval, SolverError> {
    let analysis = analyze(argument, config)?;
    analysis
        .interval
        .ok_or_else(|| SolverError::Incoherent(Box::new(analysis.verdict)))
}

/// Validates, enumerates constituents, checks coherence and, when coherent,
/// propagates bounds to the conclusion.
///
/// The conclusion `C|A` is bounded by optimizing `Σ_{A∧C} λ` over the premise
/// rows with `Σ_A λ = 1` and `λ ≥ 0`. This is the Charnes–Cooper form of the
/// ratio `p(A∧C)/p(A)`; for an unconditional conclusion `A` is the tautology
/// and the normalization is the usual `Σ λ = 1`. When no admissible
/// distribution gives `A` positive mass the interval is `[0, 1]` with
/// [`VacuousReason::ConditioningEventForcedToZero`].
pub fn analyze(argument: &Argument, config: &SolverConfig) -> Result<Analysis, SolverError> {
    let violations = validate_with_budget(argument, config.max_atoms);
    if !violations.is_empty() {
        return Err(SolverError::Invalid(violations));
    }
    let space = enumerate_constituents(&argument.atoms, &argument.constraints, config.max_atoms)?;
    let verdict = check_coherence(&space, &argument.premises)?;
    if !verdict.is_coherent() {
        return Ok(Analysis { space, verdict, interval: None });
    }

    let rows = build_premise_constraints(&space, &argument.premises)?;
    let condition = space.bind(&argument.conclusion.antecedent)?;
    let joint = space.bind(&argument.conclusion.consequent.clone().and(argument.conclusion.antecedent.clone()))?;

    let mut lp = LinearProgram::new(space.len());
    lp.constraints.extend(rows.into_iter().map(|r| r.constraint));
    let normalization =
        space.worlds.iter().enumerate().filter(|(_, w)| condition.holds(**w)).map(|(j, _)| (j, Rational::one())).collect();
    lp.constrain(normalization, Relation::Equal, Rational::one());
    let objective: Vec<_> =
        space.worlds.iter().enumerate().filter(|(_, w)| joint.holds(**w)).map(|(j, _)| (j, Rational::one())).collect();

    let solve = |sense| solve_lp(&lp.clone().with_objective(sense, objective.clone()));
    let interval = match (solve(Sense::Minimize), solve(Sense::Maximize)) {
        (Ok(low), Ok(high)) => ConclusionInterval {
            lower: low.value.clone(),
            upper: high.value.clone(),
            vacuous_reason: None,
            lower_witness: Some(witness(&space, low)),
            upper_witness: Some(witness(&space, high)),
        },
        (Err(LpError::Infeasible), Err(LpError::Infeasible)) => {
            ConclusionInterval::vacuous(VacuousReason::ConditioningEventForcedToZero)
        }
        (Err(e), _) | (_, Err(e)) => return Err(SolverError::Internal(e.to_string())),
    };
    Ok(Analysis { space, verdict, interval: Some(interval) })
}

/// Rescales an optimal cone point to a probability distribution; conditional
/// probabilities are unchanged by the scaling.
fn witness(space: &ConstituentSpace, optimum: Optimum) -> Distribution {
    let total: Rational = optimum.solution.iter().sum();
    debug_assert!(!total.is_zero());
    Distribution {
        atoms: space.atoms.clone(),
        masses: space.worlds.iter().copied().zip(optimum.solution.into_iter().map(|x| x / &total)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Assessment, ConditionalEvent, Formula};
    use crate::numeric::{int, ratio};

    fn atom(name: &str) -> Formula {
        Formula::atom(name)
    }

    fn modus_ponens(x: Rational, y: Rational) -> Argument {
        Argument::new(["T", "H"], ConditionalEvent::unconditional(atom("H")))
            .with_premise(Assessment::point(ConditionalEvent::new(atom("H"), atom("T")), x))
            .with_premise(Assessment::point(ConditionalEvent::unconditional(atom("T")), y))
    }

    fn assert_tight(argument: &Argument, interval: &ConclusionInterval) {
        for (witness, bound) in [(&interval.lower_witness, &interval.lower), (&interval.upper_witness, &interval.upper)] {
            let witness = witness.as_ref().unwrap();
            assert_eq!(witness.total(), Rational::one());
            assert!(witness.masses.iter().all(|(_, m)| *m >= Rational::zero()));
            assert!(argument.premises.iter().all(|p| witness.satisfies(p).unwrap()));
            assert_eq!(witness.conditional_probability(&argument.conclusion).unwrap().as_ref(), Some(bound));
        }
    }

    #[test]
    fn modus_ponens_closed_form() {
        let arg = modus_ponens(ratio(9, 10), ratio(4, 5));
        let interval = propagate_bounds(&arg).unwrap();
        assert_eq!((interval.lower.clone(), interval.upper.clone()), (ratio(18, 25), ratio(23, 25)));
        assert_tight(&arg, &interval);
    }

    #[test]
    fn certain_modus_ponens() {
        let interval = propagate_bounds(&modus_ponens(int(1), int(1))).unwrap();
        assert_eq!((interval.lower, interval.upper), (int(1), int(1)));
    }

    #[test]
    fn no_premises_is_vacuous_without_reason() {
        let arg = Argument::new(["A"], ConditionalEvent::unconditional(atom("A")));
        let interval = propagate_bounds(&arg).unwrap();
        assert_eq!((interval.lower.clone(), interval.upper.clone()), (int(0), int(1)));
        assert_eq!(interval.vacuous_reason, None);
        assert_tight(&arg, &interval);
    }

    #[test]
    fn conditional_conclusion_uses_ratio() {
        // p(A) = 1/2, p(B) = 1/2  ⇒  p(B|A) ∈ [0, 1]; adding p(A∧B) = 1/4 pins it to 1/2
        let arg = Argument::new(["A", "B"], ConditionalEvent::new(atom("B"), atom("A")))
            .with_premise(Assessment::point(ConditionalEvent::unconditional(atom("A")), ratio(1, 2)))
            .with_premise(Assessment::point(ConditionalEvent::unconditional(atom("B")), ratio(1, 2)));
        let interval = propagate_bounds(&arg).unwrap();
        assert_eq!((interval.lower.clone(), interval.upper.clone()), (int(0), int(1)));
        assert_tight(&arg, &interval);

        let arg = arg.with_premise(Assessment::point(
            ConditionalEvent::unconditional(atom("A").and(atom("B"))),
            ratio(1, 4),
        ));
        let interval = propagate_bounds(&arg).unwrap();
        assert_eq!((interval.lower.clone(), interval.upper.clone()), (ratio(1, 2), ratio(1, 2)));
        assert_tight(&arg, &interval);
    }

    #[test]
    fn conditioning_event_forced_to_zero_is_vacuous() {
        let arg = Argument::new(["A", "B"], ConditionalEvent::new(atom("B"), atom("A")))
            .with_premise(Assessment::point(ConditionalEvent::unconditional(atom("A")), int(0)));
        let interval = propagate_bounds(&arg).unwrap();
        assert_eq!((interval.lower.clone(), interval.upper.clone()), (int(0), int(1)));
        assert_eq!(interval.vacuous_reason, Some(VacuousReason::ConditioningEventForcedToZero));
        assert!(interval.lower_witness.is_none());
    }

    #[test]
    fn incoherent_premises_are_an_error() {
        let arg = Argument::new(["A"], ConditionalEvent::unconditional(atom("A")))
            .with_premise(Assessment::point(ConditionalEvent::unconditional(atom("A")), ratio(1, 2)))
            .with_premise(Assessment::point(ConditionalEvent::unconditional(atom("A").not()), ratio(1, 3)));
        assert!(matches!(propagate_bounds(&arg), Err(SolverError::Incoherent(_))));
    }

    #[test]
    fn invalid_argument_is_an_error() {
        let arg = Argument::new(["A"], ConditionalEvent::unconditional(atom("Q")));
        assert!(matches!(propagate_bounds(&arg), Err(SolverError::Invalid(_))));
    }

    #[test]
    fn atom_budget_respected() {
        let atoms: Vec<String> = (0..4).map(|i| format!("A{i}")).collect();
        let arg = Argument::new(atoms, ConditionalEvent::unconditional(atom("A0")));
        let err = propagate_bounds_with(&arg, &SolverConfig { max_atoms: 3 }).unwrap_err();
        assert!(matches!(err, SolverError::Invalid(_)));
    }

    #[test]
    fn repeated_runs_agree() {
        let arg = modus_ponens(ratio(3, 7), ratio(2, 9));
        assert_eq!(propagate_bounds(&arg).unwrap(), propagate_bounds(&arg).unwrap());
    }
}
