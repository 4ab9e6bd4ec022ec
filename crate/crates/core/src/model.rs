//! Domain types: formulas, conditional events, assessments and arguments.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::numeric::{is_probability, Rational};

/// Default bound on the number of atoms an argument may declare before
/// constituent enumeration refuses to run.
pub const DEFAULT_MAX_ATOMS: usize = 20;

/// Hard ceiling imposed by the `u64` world encoding.
pub const ATOM_LIMIT: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("argument declares {atoms} atoms, budget is {budget}")]
    AtomBudgetExceeded { atoms: usize, budget: usize },
}

/// Propositional formula over named atoms. `Implies` is material implication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

fn pairwise_exclusions(items: &[Formula]) -> Vec<Formula> {
    let mut clauses = Vec::new();
    for (i, a) in items.iter().enumerate() {
        for b in &items[i + 1..] {
            clauses.push(a.clone().and(b.clone()).not());
        }
    }
    clauses
}

/// Source of truth values for atoms.
pub trait TruthAssignment {
    fn value(&self, atom: &str) -> Option<bool>;
}

impl TruthAssignment for HashMap<String, bool> {
    fn value(&self, atom: &str) -> Option<bool> {
        self.get(atom).copied()
    }
}

impl TruthAssignment for BTreeMap<String, bool> {
    fn value(&self, atom: &str) -> Option<bool> {
        self.get(atom).copied()
    }
}

impl TruthAssignment for [(&str, bool)] {
    fn value(&self, atom: &str) -> Option<bool> {
        self.iter().find(|(name, _)| *name == atom).map(|(_, v)| *v)
    }
}

impl<const N: usize> TruthAssignment for [(&str, bool); N] {
    fn value(&self, atom: &str) -> Option<bool> {
        self.as_slice().value(atom)
    }
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Formula) -> Self {
        Formula::Implies(Box::new(self), Box::new(other))
    }

    /// Left-nested disjunction; `False` when empty.
    pub fn any(items: impl IntoIterator<Item = Formula>) -> Self {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::False)
    }

    /// Left-nested conjunction; `True` when empty.
    pub fn all(items: impl IntoIterator<Item = Formula>) -> Self {
        items.into_iter().reduce(Formula::and).unwrap_or(Formula::True)
    }

    /// `not (a and b)` for every pair, conjoined.
    pub fn at_most_one(items: &[Formula]) -> Self {
        Formula::all(pairwise_exclusions(items))
    }

    /// Disjunction of `items` conjoined with [`Formula::at_most_one`].
    pub fn exactly_one(items: &[Formula]) -> Self {
        let some = Formula::any(items.iter().cloned());
        if items.len() < 2 {
            some
        } else {
            // one flat left-nested chain, so it renders without extra parentheses
            Formula::all(std::iter::once(some).chain(pairwise_exclusions(items)))
        }
    }

    pub fn evaluate<A: TruthAssignment + ?Sized>(&self, world: &A) -> Result<bool, ModelError> {
        Ok(match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(name) => world
                .value(name)
                .ok_or_else(|| ModelError::UnknownAtom(name.clone()))?,
            Formula::Not(f) => !f.evaluate(world)?,
            Formula::And(a, b) => a.evaluate(world)? & b.evaluate(world)?,
            Formula::Or(a, b) => a.evaluate(world)? | b.evaluate(world)?,
            Formula::Implies(a, b) => !a.evaluate(world)? | b.evaluate(world)?,
        })
    }

    /// Visits every atom occurrence in left-to-right order.
    pub fn for_each_atom<'a>(&'a self, visit: &mut impl FnMut(&'a str)) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Atom(name) => visit(name),
            Formula::Not(f) => f.for_each_atom(visit),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.for_each_atom(visit);
                b.for_each_atom(visit);
            }
        }
    }

    /// Resolves atom names to positions in `atoms` for fast evaluation on [`World`]s.
    pub fn bind(&self, atoms: &[String]) -> Result<BoundFormula, ModelError> {
        Ok(match self {
            Formula::True => BoundFormula::Const(true),
            Formula::False => BoundFormula::Const(false),
            Formula::Atom(name) => BoundFormula::Atom(
                atoms
                    .iter()
                    .position(|a| a == name)
                    .ok_or_else(|| ModelError::UnknownAtom(name.clone()))?,
            ),
            Formula::Not(f) => BoundFormula::Not(Box::new(f.bind(atoms)?)),
            Formula::And(a, b) => BoundFormula::And(Box::new(a.bind(atoms)?), Box::new(b.bind(atoms)?)),
            Formula::Or(a, b) => BoundFormula::Or(Box::new(a.bind(atoms)?), Box::new(b.bind(atoms)?)),
            Formula::Implies(a, b) => {
                BoundFormula::Or(Box::new(BoundFormula::Not(Box::new(a.bind(atoms)?))), Box::new(b.bind(atoms)?))
            }
        })
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::dsl::render_formula(self))
    }
}

/// A formula whose atoms are indices into a fixed vocabulary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundFormula {
    Const(bool),
    Atom(usize),
    Not(Box<BoundFormula>),
    And(Box<BoundFormula>, Box<BoundFormula>),
    Or(Box<BoundFormula>, Box<BoundFormula>),
}

impl BoundFormula {
    pub fn holds(&self, world: World) -> bool {
        match self {
            BoundFormula::Const(v) => *v,
            BoundFormula::Atom(i) => world.get(*i),
            BoundFormula::Not(f) => !f.holds(world),
            BoundFormula::And(a, b) => a.holds(world) && b.holds(world),
            BoundFormula::Or(a, b) => a.holds(world) || b.holds(world),
        }
    }
}

/// Truth assignment over an ordered vocabulary: bit `i` is the value of atom `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct World(pub u64);

impl World {
    pub fn get(self, atom: usize) -> bool {
        (self.0 >> atom) & 1 == 1
    }

    pub fn from_values(values: &[bool]) -> Self {
        World(values.iter().enumerate().fold(0, |acc, (i, &v)| acc | (u64::from(v) << i)))
    }

    /// Renders as `R ¬B ¬Y` in vocabulary order.
    pub fn describe(self, atoms: &[String]) -> String {
        atoms
            .iter()
            .enumerate()
            .map(|(i, a)| if self.get(i) { a.clone() } else { format!("¬{a}") })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn view(self, atoms: &[String]) -> WorldView<'_> {
        WorldView { atoms, world: self }
    }
}

/// A [`World`] paired with its vocabulary, usable as a [`TruthAssignment`].
#[derive(Debug, Clone, Copy)]
pub struct WorldView<'a> {
    pub atoms: &'a [String],
    pub world: World,
}

impl TruthAssignment for WorldView<'_> {
    fn value(&self, atom: &str) -> Option<bool> {
        self.atoms.iter().position(|a| a == atom).map(|i| self.world.get(i))
    }
}

/// `consequent | antecedent`; unconditional events have antecedent `True`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConditionalEvent {
    pub consequent: Formula,
    pub antecedent: Formula,
}

impl ConditionalEvent {
    pub fn new(consequent: Formula, antecedent: Formula) -> Self {
        Self { consequent, antecedent }
    }

    pub fn unconditional(event: Formula) -> Self {
        Self::new(event, Formula::True)
    }

    pub fn is_conditional(&self) -> bool {
        self.antecedent != Formula::True
    }
}

impl fmt::Display for ConditionalEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_conditional() {
            write!(f, "P({} | {})", self.consequent, self.antecedent)
        } else {
            write!(f, "P({})", self.consequent)
        }
    }
}

/// Probability assessment `lower ≤ p(target) ≤ upper`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assessment {
    pub target: ConditionalEvent,
    pub lower: Rational,
    pub upper: Rational,
}

impl Assessment {
    pub fn point(target: ConditionalEvent, value: Rational) -> Self {
        Self { target, lower: value.clone(), upper: value }
    }

    pub fn interval(target: ConditionalEvent, lower: Rational, upper: Rational) -> Self {
        Self { target, lower, upper }
    }

    pub fn is_point(&self) -> bool {
        self.lower == self.upper
    }

    pub fn is_vacuous(&self) -> bool {
        self.lower.is_zero() && self.upper.is_one()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Argument {
    pub label: Option<String>,
    pub atoms: Vec<String>,
    /// Hard constraints, true in every admissible world.
    pub constraints: Vec<Formula>,
    pub premises: Vec<Assessment>,
    pub conclusion: ConditionalEvent,
}

impl Argument {
    pub fn new(atoms: impl IntoIterator<Item = impl Into<String>>, conclusion: ConditionalEvent) -> Self {
        Self {
            label: None,
            atoms: atoms.into_iter().map(Into::into).collect(),
            constraints: Vec::new(),
            premises: Vec::new(),
            conclusion,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn with_constraint(mut self, constraint: Formula) -> Self {
        self.constraints.push(constraint);
        self
    }

    pub fn with_premise(mut self, premise: Assessment) -> Self {
        self.premises.push(premise);
        self
    }

    pub fn is_valid(&self) -> bool {
        validate(self).is_empty()
    }
}

/// Where in an argument a violation was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Atoms,
    Constraint(usize),
    Premise(usize),
    Conclusion,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Atoms => f.write_str("atoms"),
            Location::Constraint(i) => write!(f, "constraint {}", i + 1),
            Location::Premise(i) => write!(f, "premise {}", i + 1),
            Location::Conclusion => f.write_str("conclusion"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyAtomList,
    DuplicateAtom(String),
    InvalidAtomName(String),
    UnknownAtom { atom: String, at: Location },
    BoundOutOfRange { at: Location },
    InvertedBounds { at: Location },
    EmptyConstituentSpace,
    ImpossibleConditioningEvent { at: Location },
    AtomBudgetExceeded { atoms: usize, budget: usize },
}

impl Violation {
    pub fn location(&self) -> Location {
        match self {
            Violation::EmptyAtomList
            | Violation::DuplicateAtom(_)
            | Violation::InvalidAtomName(_)
            | Violation::AtomBudgetExceeded { .. } => Location::Atoms,
            Violation::UnknownAtom { at, .. }
            | Violation::BoundOutOfRange { at }
            | Violation::InvertedBounds { at }
            | Violation::ImpossibleConditioningEvent { at } => *at,
            Violation::EmptyConstituentSpace => Location::Constraint(0),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyAtomList => f.write_str("atom list is empty"),
            Violation::DuplicateAtom(a) => write!(f, "duplicate atom `{a}`"),
            Violation::InvalidAtomName(a) => write!(f, "invalid atom name `{a}`"),
            Violation::UnknownAtom { atom, at } => write!(f, "unknown atom `{atom}` in {at}"),
            Violation::BoundOutOfRange { at } => write!(f, "bound out of [0,1] in {at}"),
            Violation::InvertedBounds { at } => write!(f, "inverted bounds in {at}"),
            Violation::EmptyConstituentSpace => f.write_str("empty constituent space"),
            Violation::ImpossibleConditioningEvent { at } => {
                write!(f, "conditioning event in {at} is impossible under the constraints")
            }
            Violation::AtomBudgetExceeded { atoms, budget } => {
                write!(f, "{atoms} atoms exceed the budget of {budget}")
            }
        }
    }
}

const KEYWORDS: &[&str] = &["not", "and", "or", "true", "false", "in", "exactly_one", "at_most_one"];

/// Whether `name` can be used as an atom identifier in the `.arg` format.
pub fn is_valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !KEYWORDS.contains(&name)
}

/// Structural check of an argument with the default atom budget.
pub fn validate(argument: &Argument) -> Vec<Violation> {
    validate_with_budget(argument, DEFAULT_MAX_ATOMS)
}

/// Structural check; an empty result means the argument is well formed.
pub fn validate_with_budget(argument: &Argument, max_atoms: usize) -> Vec<Violation> {
    let mut violations = Vec::new();
    if argument.atoms.is_empty() {
        violations.push(Violation::EmptyAtomList);
    }
    let mut seen = HashSet::new();
    for atom in &argument.atoms {
        if !is_valid_atom_name(atom) {
            violations.push(Violation::InvalidAtomName(atom.clone()));
        }
        if !seen.insert(atom.as_str()) {
            violations.push(Violation::DuplicateAtom(atom.clone()));
        }
    }

    let check_atoms = |formula: &Formula, at: Location, out: &mut Vec<Violation>| {
        let mut unknown = Vec::new();
        formula.for_each_atom(&mut |a| {
            if !seen.contains(a) && !unknown.contains(&a) {
                unknown.push(a);
            }
        });
        out.extend(unknown.into_iter().map(|a| Violation::UnknownAtom { atom: a.to_string(), at }));
    };
    for (i, c) in argument.constraints.iter().enumerate() {
        check_atoms(c, Location::Constraint(i), &mut violations);
    }
    for (i, p) in argument.premises.iter().enumerate() {
        check_atoms(&p.target.consequent, Location::Premise(i), &mut violations);
        check_atoms(&p.target.antecedent, Location::Premise(i), &mut violations);
        if !is_probability(&p.lower) || !is_probability(&p.upper) {
            violations.push(Violation::BoundOutOfRange { at: Location::Premise(i) });
        }
        if p.lower > p.upper {
            violations.push(Violation::InvertedBounds { at: Location::Premise(i) });
        }
    }
    check_atoms(&argument.conclusion.consequent, Location::Conclusion, &mut violations);
    check_atoms(&argument.conclusion.antecedent, Location::Conclusion, &mut violations);

    if !violations.is_empty() {
        return violations;
    }
    let budget = max_atoms.min(ATOM_LIMIT);
    if argument.atoms.len() > budget {
        violations.push(Violation::AtomBudgetExceeded { atoms: argument.atoms.len(), budget });
        return violations;
    }

    // Satisfiability checks over the constituent space.
    let bind = |f: &Formula| f.bind(&argument.atoms).expect("atoms checked above");
    let constraints: Vec<_> = argument.constraints.iter().map(bind).collect();
    let mut antecedents: Vec<(Location, BoundFormula, bool)> = argument
        .premises
        .iter()
        .enumerate()
        .map(|(i, p)| (Location::Premise(i), bind(&p.target.antecedent), false))
        .collect();
    antecedents.push((Location::Conclusion, bind(&argument.conclusion.antecedent), false));

    let mut any_world = false;
    for bits in 0..1u64 << argument.atoms.len() {
        let world = World(bits);
        if !constraints.iter().all(|c| c.holds(world)) {
            continue;
        }
        any_world = true;
        for (_, antecedent, possible) in antecedents.iter_mut() {
            *possible |= antecedent.holds(world);
        }
        if antecedents.iter().all(|(_, _, possible)| *possible) {
            break;
        }
    }
    if !any_world {
        violations.push(Violation::EmptyConstituentSpace);
        return violations;
    }
    violations.extend(
        antecedents
            .into_iter()
            .filter(|(_, _, possible)| !possible)
            .map(|(at, _, _)| Violation::ImpossibleConditioningEvent { at }),
    );
    violations
}

/// Probability mass over constituents, in constituent order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    pub atoms: Vec<String>,
    pub masses: Vec<(World, Rational)>,
}

impl Distribution {
    pub fn probability(&self, formula: &BoundFormula) -> Rational {
        self.masses
            .iter()
            .filter(|(w, _)| formula.holds(*w))
            .map(|(_, m)| m.clone())
            .sum()
    }

    pub fn total(&self) -> Rational {
        self.masses.iter().map(|(_, m)| m.clone()).sum()
    }

    /// Whether this distribution satisfies `assessment` as a coherent
    /// conditional assessment. Rows with a zero-probability conditioning
    /// event hold vacuously.
    pub fn satisfies(&self, assessment: &Assessment) -> Result<bool, ModelError> {
        let antecedent = assessment.target.antecedent.bind(&self.atoms)?;
        let joint = assessment
            .target
            .consequent
            .clone()
            .and(assessment.target.antecedent.clone())
            .bind(&self.atoms)?;
        let condition = self.probability(&antecedent);
        let joint = self.probability(&joint);
        Ok(assessment.lower.clone() * &condition <= joint && joint <= assessment.upper.clone() * &condition)
    }

    /// `p(event)` or, for conditional events, `p(consequent ∧ antecedent) / p(antecedent)`.
    /// `None` when the conditioning event has probability zero.
    pub fn conditional_probability(&self, event: &ConditionalEvent) -> Result<Option<Rational>, ModelError> {
        let antecedent = self.probability(&event.antecedent.bind(&self.atoms)?);
        if antecedent.is_zero() {
            return Ok(None);
        }
        let joint = event.consequent.clone().and(event.antecedent.clone()).bind(&self.atoms)?;
        Ok(Some(self.probability(&joint) / antecedent))
    }
}

/// Machine-readable reason for a vacuous conclusion interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VacuousReason {
    ConditioningEventForcedToZero,
}

impl VacuousReason {
    pub fn as_str(self) -> &'static str {
        match self {
            VacuousReason::ConditioningEventForcedToZero => "conditioning event forced to zero",
        }
    }
}

impl fmt::Display for VacuousReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Coherent bounds `[lower, upper]` on a conclusion, with optional witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConclusionInterval {
    pub lower: Rational,
    pub upper: Rational,
    pub vacuous_reason: Option<VacuousReason>,
    pub lower_witness: Option<Distribution>,
    pub upper_witness: Option<Distribution>,
}

impl ConclusionInterval {
    /// Bare interval without witnesses.
    pub fn new(lower: Rational, upper: Rational) -> Self {
        Self { lower, upper, vacuous_reason: None, lower_witness: None, upper_witness: None }
    }

    pub fn vacuous(reason: VacuousReason) -> Self {
        Self { vacuous_reason: Some(reason), ..Self::new(Rational::zero(), Rational::one()) }
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn contains(&self, other: &ConclusionInterval) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }

    pub fn is_well_formed(&self) -> bool {
        is_probability(&self.lower) && is_probability(&self.upper) && self.lower <= self.upper
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;

    fn ellsberg_atoms() -> Vec<Formula> {
        ["R", "B", "Y"].into_iter().map(Formula::atom).collect()
    }

    #[test]
    fn evaluation_follows_classical_semantics() {
        let world = [("R", false), ("B", true), ("Y", false)];
        let b_or_y = Formula::atom("B").or(Formula::atom("Y"));
        assert_eq!(b_or_y.evaluate(&world), Ok(true));
        assert_eq!(Formula::atom("R").evaluate(&world), Ok(false));
        assert_eq!(Formula::True.evaluate(&world), Ok(true));
        assert_eq!(Formula::False.evaluate(&world), Ok(false));
        assert_eq!(Formula::atom("R").implies(Formula::atom("Y")).evaluate(&world), Ok(true));
        assert_eq!(Formula::atom("B").implies(Formula::atom("Y")).evaluate(&world), Ok(false));
    }

    #[test]
    fn unknown_atom_is_a_vocabulary_error() {
        let world = [("R", false)];
        assert_eq!(
            Formula::atom("Q").or(Formula::True).evaluate(&world),
            Err(ModelError::UnknownAtom("Q".into()))
        );
    }

    #[test]
    fn bound_and_named_evaluation_agree() {
        let atoms: Vec<String> = ["R", "B", "Y"].map(String::from).to_vec();
        let f = Formula::exactly_one(&ellsberg_atoms());
        let bound = f.bind(&atoms).unwrap();
        let satisfying: Vec<_> = (0..8u64).map(World).filter(|w| bound.holds(*w)).collect();
        assert_eq!(satisfying.len(), 3);
        for bits in 0..8u64 {
            let world = World(bits);
            assert_eq!(f.evaluate(&world.view(&atoms)).unwrap(), bound.holds(world));
        }
    }

    #[test]
    fn exactly_one_of_single_item_is_the_item() {
        assert_eq!(Formula::exactly_one(&[Formula::atom("A")]), Formula::atom("A"));
        assert_eq!(Formula::at_most_one(&[Formula::atom("A")]), Formula::True);
    }

    #[test]
    fn validate_reports_inverted_bounds() {
        let arg = Argument::new(["A"], ConditionalEvent::unconditional(Formula::atom("A"))).with_premise(
            Assessment::interval(ConditionalEvent::unconditional(Formula::atom("A")), ratio(7, 10), ratio(3, 10)),
        );
        let violations = validate(&arg);
        assert_eq!(violations, vec![Violation::InvertedBounds { at: Location::Premise(0) }]);
        assert_eq!(violations[0].to_string(), "inverted bounds in premise 1");
    }

    #[test]
    fn validate_reports_empty_space() {
        let r = Formula::atom("R");
        let arg = Argument::new(["R"], ConditionalEvent::unconditional(r.clone()))
            .with_constraint(r.clone())
            .with_constraint(r.not());
        assert_eq!(validate(&arg), vec![Violation::EmptyConstituentSpace]);
        assert_eq!(Violation::EmptyConstituentSpace.to_string(), "empty constituent space");
    }

    #[test]
    fn validate_reports_structural_problems() {
        let arg = Argument::new(["A", "A", "not"], ConditionalEvent::unconditional(Formula::atom("Z")));
        let v = validate(&arg);
        assert!(v.contains(&Violation::DuplicateAtom("A".into())));
        assert!(v.contains(&Violation::InvalidAtomName("not".into())));
        assert!(v.contains(&Violation::UnknownAtom { atom: "Z".into(), at: Location::Conclusion }));

        let none: Vec<String> = Vec::new();
        let empty = Argument::new(none, ConditionalEvent::unconditional(Formula::True));
        assert_eq!(validate(&empty), vec![Violation::EmptyAtomList]);
    }

    #[test]
    fn validate_reports_out_of_range_and_impossible_conditions() {
        let a = Formula::atom("A");
        let arg = Argument::new(["A"], ConditionalEvent::new(a.clone(), a.clone().and(a.clone().not())))
            .with_premise(Assessment::point(ConditionalEvent::unconditional(a.clone()), ratio(6, 5)));
        assert_eq!(validate(&arg), vec![Violation::BoundOutOfRange { at: Location::Premise(0) }]);

        let arg = Argument::new(["A"], ConditionalEvent::new(a.clone(), a.clone().and(a.clone().not())));
        assert_eq!(validate(&arg), vec![Violation::ImpossibleConditioningEvent { at: Location::Conclusion }]);
    }

    #[test]
    fn atom_budget_is_enforced() {
        let atoms: Vec<String> = (0..5).map(|i| format!("A{i}")).collect();
        let arg = Argument::new(atoms, ConditionalEvent::unconditional(Formula::True));
        assert_eq!(validate_with_budget(&arg, 4), vec![Violation::AtomBudgetExceeded { atoms: 5, budget: 4 }]);
        assert!(validate_with_budget(&arg, 5).is_empty());
    }

    #[test]
    fn distribution_checks_conditional_rows() {
        let atoms: Vec<String> = ["T", "H"].map(String::from).to_vec();
        let tw = |t, h| World::from_values(&[t, h]);
        let d = Distribution {
            atoms: atoms.clone(),
            masses: vec![
                (tw(true, true), ratio(9, 20)),
                (tw(true, false), ratio(1, 20)),
                (tw(false, true), ratio(1, 4)),
                (tw(false, false), ratio(1, 4)),
            ],
        };
        let h_given_t = ConditionalEvent::new(Formula::atom("H"), Formula::atom("T"));
        assert!(d.satisfies(&Assessment::point(h_given_t.clone(), ratio(9, 10))).unwrap());
        assert!(!d.satisfies(&Assessment::point(h_given_t.clone(), ratio(8, 10))).unwrap());
        assert_eq!(d.conditional_probability(&h_given_t).unwrap(), Some(ratio(9, 10)));
        assert_eq!(
            d.conditional_probability(&ConditionalEvent::unconditional(Formula::atom("H"))).unwrap(),
            Some(ratio(7, 10))
        );
    }
}
