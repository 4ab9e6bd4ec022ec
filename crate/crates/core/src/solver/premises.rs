use num_traits::{One, Zero};

use crate::model::Assessment;
use crate::numeric::Rational;

use super::constituents::ConstituentSpace;
use super::lp::{LinearConstraint, Relation};
use super::SolverError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSide {
    Lower,
    Upper,
    Point,
}

/// One homogeneous row `Σ coeff_w λ_w (≥ | ≤ | =) 0` derived from a premise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PremiseRow {
    pub premise: usize,
    pub side: BoundSide,
    pub constraint: LinearConstraint,
}

/// For `p(E|H) ∈ [a, b]` emits `a·Σ_H λ ≤ Σ_{E∧H} λ ≤ b·Σ_H λ` over the
/// world weights, rearranged to `Σ_{w⊨H} ([w⊨E] − a) λ_w ≥ 0` and likewise for
/// `b`. Both sides hold trivially when `Σ_H λ = 0`. Sides that cannot bind
/// (`a = 0`, `b = 1`) are omitted, so a vacuous `[0, 1]` premise yields no rows.
pub fn build_premise_constraints(
    space: &ConstituentSpace,
    premises: &[Assessment],
) -> Result<Vec<PremiseRow>, SolverError> {
    let mut rows = Vec::new();
    for (index, premise) in premises.iter().enumerate() {
        let event = space.bind(&premise.target.consequent)?;
        let condition = space.bind(&premise.target.antecedent)?;
        let row = |bound: &Rational| -> Vec<(usize, Rational)> {
            space
                .worlds
                .iter()
                .enumerate()
                .filter(|(_, w)| condition.holds(**w))
                .map(|(j, w)| {
                    let hit = if event.holds(*w) { Rational::one() } else { Rational::zero() };
                    (j, hit - bound)
                })
                .filter(|(_, c)| !c.is_zero())
                .collect()
        };
        let zero = Rational::zero();
        if premise.is_point() {
            rows.push(PremiseRow {
                premise: index,
                side: BoundSide::Point,
                constraint: LinearConstraint::new(row(&premise.lower), Relation::Equal, zero),
            });
            continue;
        }
        if !premise.lower.is_zero() {
            rows.push(PremiseRow {
                premise: index,
                side: BoundSide::Lower,
                constraint: LinearConstraint::new(row(&premise.lower), Relation::GreaterEq, zero.clone()),
            });
        }
        if !premise.upper.is_one() {
            rows.push(PremiseRow {
                premise: index,
                side: BoundSide::Upper,
                constraint: LinearConstraint::new(row(&premise.upper), Relation::LessEq, zero),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ConditionalEvent, Formula, DEFAULT_MAX_ATOMS};
    use crate::numeric::{int, ratio};
    use crate::solver::enumerate_constituents;

    fn space(atoms: &[&str], constraints: &[Formula]) -> ConstituentSpace {
        let atoms: Vec<String> = atoms.iter().map(|s| s.to_string()).collect();
        enumerate_constituents(&atoms, constraints, DEFAULT_MAX_ATOMS).unwrap()
    }

    #[test]
    fn conditional_row_is_homogeneous_definition() {
        // worlds: TH, T¬H, ¬TH, ¬T¬H
        let s = space(&["T", "H"], &[]);
        let x = ratio(9, 10);
        let premise = Assessment::point(ConditionalEvent::new(Formula::atom("H"), Formula::atom("T")), x.clone());
        let rows = build_premise_constraints(&s, &[premise]).unwrap();
        assert_eq!(rows.len(), 1);
        // λ_TH − x(λ_TH + λ_T¬H) = 0
        assert_eq!(rows[0].constraint.terms, vec![(0, int(1) - &x), (1, -x)]);
        assert_eq!(rows[0].constraint.relation, Relation::Equal);
        assert_eq!(rows[0].side, BoundSide::Point);
    }

    #[test]
    fn unconditional_row_on_normalized_weights() {
        let colors: Vec<_> = ["R", "B", "Y"].into_iter().map(Formula::atom).collect();
        let s = space(&["R", "B", "Y"], &[Formula::exactly_one(&colors)]);
        let premise = Assessment::point(ConditionalEvent::unconditional(Formula::atom("R")), ratio(33, 100));
        let rows = build_premise_constraints(&s, &[premise]).unwrap();
        // with Σλ = 1 the row reads λ_R = 33/100
        let on = [ratio(33, 100), ratio(335, 1000), ratio(335, 1000)];
        let off = [ratio(34, 100), ratio(33, 100), ratio(33, 100)];
        assert!(rows[0].constraint.is_satisfied(&on));
        assert!(!rows[0].constraint.is_satisfied(&off));
    }

    #[test]
    fn vacuous_interval_constrains_nothing() {
        let s = space(&["A", "B"], &[]);
        let premise = Assessment::interval(ConditionalEvent::new(Formula::atom("A"), Formula::atom("B")), int(0), int(1));
        assert!(build_premise_constraints(&s, &[premise]).unwrap().is_empty());
    }

    #[test]
    fn interval_gives_two_rows() {
        let s = space(&["A"], &[]);
        let premise = Assessment::interval(ConditionalEvent::unconditional(Formula::atom("A")), ratio(1, 5), ratio(2, 5));
        let rows = build_premise_constraints(&s, &[premise]).unwrap();
        let sides: Vec<_> = rows.iter().map(|r| r.side).collect();
        assert_eq!(sides, vec![BoundSide::Lower, BoundSide::Upper]);
    }
}
