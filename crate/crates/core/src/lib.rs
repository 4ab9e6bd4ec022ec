//! Probabilistic argument strength.
//!
//! Arguments are premises (interval probability assessments on conditional
//! events) plus a conditional conclusion, over a finite set of propositional
//! atoms. The solver checks the premises for coherence, propagates them to
//! best-possible bounds on the conclusion with exact rational linear
//! programming, and [`strength`] turns those bounds into a single score.
//!
//! ```
//! use argstrength::{parse_argument, propagate_bounds, strength, ratio};
//!
//! let arg = parse_argument(
//!     "atoms: T, H\n\
//!      premise: P(H | T) = 0.9\n\
//!      premise: P(T) = 0.8\n\
//!      conclusion: P(H)\n",
//! ).unwrap();
//! let interval = propagate_bounds(&arg).unwrap();
//! assert_eq!((interval.lower.clone(), interval.upper.clone()), (ratio(18, 25), ratio(23, 25)));
//! assert_eq!(strength(&interval).unwrap().value, ratio(82, 125));
//! ```

pub mod dsl;
pub mod ellsberg;
pub mod model;
pub mod numeric;
pub mod solver;
pub mod strength;

pub use dsl::{parse_argument, parse_argument_with_budget, parse_formula, render_argument, render_formula, ParseError};
pub use model::{
    validate, validate_with_budget, Argument, Assessment, ConclusionInterval, ConditionalEvent, Distribution, Formula,
    Location, ModelError, VacuousReason, Violation, World, DEFAULT_MAX_ATOMS,
};
pub use numeric::{int, parse_rational, ratio, render_rational, round_half_up, Rational};
pub use solver::{
    analyze, brute_force_bounds, check_coherence, propagate_bounds, propagate_bounds_with, Analysis, CoherenceStatus,
    CoherenceVerdict, SolverConfig, SolverError,
};
pub use strength::{compare, rank, strength, Preference, PreferenceOrder, StrengthScore};
