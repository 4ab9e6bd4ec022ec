//! The four Ellsberg bets as probabilistic arguments.
//!
//! An urn holds 90 balls: 30 red and 60 black or yellow in unknown
//! proportion. Every argument shares the premises `p(R)` and `p(B ∨ Y)` under
//! the partition `exactly_one(R, B, Y)`; the conclusions are the winning
//! events of Bets 1–4: `R`, `B`, `R ∨ Y`, `B ∨ Y`.

use std::fmt;

use crate::model::{Argument, Assessment, ConditionalEvent, Formula};
use crate::numeric::{ratio, Rational};
use crate::solver::{propagate_bounds_with, SolverConfig, SolverError};
use crate::strength::{compare, strength, Preference, StrengthScore};
use crate::model::ConclusionInterval;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    /// `p(R) = 0.33`, `p(B ∨ Y) = 0.67`.
    #[default]
    Decimal,
    /// `p(R) = 1/3`, `p(B ∨ Y) = 2/3`.
    Exact,
}

impl Variant {
    pub fn premise_values(self) -> (Rational, Rational) {
        match self {
            Variant::Decimal => (ratio(33, 100), ratio(67, 100)),
            Variant::Exact => (ratio(1, 3), ratio(2, 3)),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Decimal => "decimal",
            Variant::Exact => "exact",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "decimal" => Ok(Variant::Decimal),
            "exact" => Ok(Variant::Exact),
            other => Err(format!("unknown variant `{other}`; expected `decimal` or `exact`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllsbergScenario {
    pub variant: Variant,
    /// Arguments for Bets 1–4, labelled `A1`..`A4`.
    pub arguments: [Argument; 4],
}

fn atom(name: &str) -> Formula {
    Formula::atom(name)
}

pub fn build_scenario(variant: Variant) -> EllsbergScenario {
    let (red, black_or_yellow) = variant.premise_values();
    let conclusions = [
        atom("R"),
        atom("B"),
        atom("R").or(atom("Y")),
        atom("B").or(atom("Y")),
    ];
    let arguments = conclusions.map(|c| c).into_iter().enumerate().map(|(i, conclusion)| {
        Argument::new(["R", "B", "Y"], ConditionalEvent::unconditional(conclusion))
            .with_label(format!("A{}", i + 1))
            .with_constraint(Formula::exactly_one(&[atom("R"), atom("B"), atom("Y")]))
            .with_premise(Assessment::point(ConditionalEvent::unconditional(atom("R")), red.clone()))
            .with_premise(Assessment::point(
                ConditionalEvent::unconditional(atom("B").or(atom("Y"))),
                black_or_yellow.clone(),
            ))
    });
    let arguments: Vec<Argument> = arguments.collect();
    EllsbergScenario { variant, arguments: arguments.try_into().expect("four bets") }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    /// 1 to 4.
    pub bet: u8,
    pub label: String,
    pub conclusion: ConditionalEvent,
    pub interval: ConclusionInterval,
    pub strength: StrengthScore,
}

/// Bounds and strengths for the four bets.
pub fn table1(variant: Variant) -> Result<Vec<Table1Row>, SolverError> {
    let scenario = build_scenario(variant);
    let config = SolverConfig::default();
    scenario
        .arguments
        .iter()
        .enumerate()
        .map(|(i, argument)| {
            let interval = propagate_bounds_with(argument, &config)?;
            let strength = strength(&interval).map_err(|e| SolverError::Internal(e.to_string()))?;
            Ok(Table1Row {
                bet: i as u8 + 1,
                label: argument.label.clone().unwrap_or_default(),
                conclusion: argument.conclusion.clone(),
                interval,
                strength,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FirstChoice {
    Bet1,
    Bet2,
    Tie,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecondChoice {
    Bet3,
    Bet4,
    Tie,
}

/// Pattern of the two bet choices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyLabel {
    /// Bets 1 and 4 preferred, as Ellsberg predicted.
    Ellsberg,
    /// Bets 2 and 3 preferred.
    Reversed,
    /// Bets 1 and 3, consistent with the independence axiom.
    IndependenceRedYellow,
    /// Bets 2 and 4, consistent with the independence axiom.
    IndependenceBlackYellow,
    /// At least one choice was a tie.
    Undetermined,
}

impl StrategyLabel {
    pub fn code(self) -> &'static str {
        match self {
            StrategyLabel::Ellsberg => "E",
            StrategyLabel::Reversed => "R",
            StrategyLabel::IndependenceRedYellow => "I1",
            StrategyLabel::IndependenceBlackYellow => "I2",
            StrategyLabel::Undetermined => "undetermined",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            StrategyLabel::Ellsberg => "(1, 4) ≻ (2, 3), Ellsberg's prediction",
            StrategyLabel::Reversed => "(2, 3) ≻ (1, 4), reversed Ellsberg",
            StrategyLabel::IndependenceRedYellow => "(1, 3) ≻ (2, 4), independence axiom",
            StrategyLabel::IndependenceBlackYellow => "(2, 4) ≻ (1, 3), independence axiom",
            StrategyLabel::Undetermined => "no prediction (tie)",
        }
    }
}

impl fmt::Display for StrategyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

pub fn classify_strategy(first: FirstChoice, second: SecondChoice) -> StrategyLabel {
    match (first, second) {
        (FirstChoice::Bet1, SecondChoice::Bet4) => StrategyLabel::Ellsberg,
        (FirstChoice::Bet2, SecondChoice::Bet3) => StrategyLabel::Reversed,
        (FirstChoice::Bet1, SecondChoice::Bet3) => StrategyLabel::IndependenceRedYellow,
        (FirstChoice::Bet2, SecondChoice::Bet4) => StrategyLabel::IndependenceBlackYellow,
        _ => StrategyLabel::Undetermined,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prediction {
    pub first: FirstChoice,
    pub second: SecondChoice,
    pub strategy: StrategyLabel,
}

/// A bet is predicted to be chosen when its argument is rated higher.
/// Ratings are used only through comparisons; equal or incomparable ratings
/// give no prediction for that pair.
pub fn predict_from_ratings<T: PartialOrd>(ratings: [T; 4]) -> Prediction {
    use std::cmp::Ordering::{Greater, Less};
    let [r1, r2, r3, r4] = ratings;
    let first = match r1.partial_cmp(&r2) {
        Some(Greater) => FirstChoice::Bet1,
        Some(Less) => FirstChoice::Bet2,
        _ => FirstChoice::Tie,
    };
    let second = match r3.partial_cmp(&r4) {
        Some(Greater) => SecondChoice::Bet3,
        Some(Less) => SecondChoice::Bet4,
        _ => SecondChoice::Tie,
    };
    Prediction { first, second, strategy: classify_strategy(first, second) }
}

/// Choices induced by the strengths of the four rows.
pub fn predict_from_table(rows: &[Table1Row]) -> Prediction {
    let first = match compare(&rows[0].strength, &rows[1].strength) {
        Preference::FirstPreferred => FirstChoice::Bet1,
        Preference::SecondPreferred => FirstChoice::Bet2,
        Preference::Indifferent => FirstChoice::Tie,
    };
    let second = match compare(&rows[2].strength, &rows[3].strength) {
        Preference::FirstPreferred => SecondChoice::Bet3,
        Preference::SecondPreferred => SecondChoice::Bet4,
        Preference::Indifferent => SecondChoice::Tie,
    };
    Prediction { first, second, strategy: classify_strategy(first, second) }
}
