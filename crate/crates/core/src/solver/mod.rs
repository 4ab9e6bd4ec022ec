//! Constituent enumeration, coherence checking and bound propagation.

mod coherence;
mod constituents;
pub mod lp;
mod oracle;
mod premises;
mod propagate;

pub use coherence::{check_coherence, CoherenceStatus, CoherenceVerdict, ZeroLayer};
pub use constituents::{enumerate_constituents, ConstituentSpace};
pub use lp::{solve_lp, LinearConstraint, LinearProgram, LpError, Optimum, Relation, Sense};
pub use oracle::{
    brute_force_bounds, brute_force_bounds_with_cap, grid_size, GridBounds, OracleError, DEFAULT_GRID_CAP,
};
pub use premises::{build_premise_constraints, BoundSide, PremiseRow};
pub use propagate::{analyze, propagate_bounds, propagate_bounds_with, Analysis};

use crate::model::{ModelError, Violation, DEFAULT_MAX_ATOMS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_atoms: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { max_atoms: DEFAULT_MAX_ATOMS }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("constraints admit no constituent (empty space)")]
    EmptySpace,
    #[error("invalid argument: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("premises are incoherent")]
    Incoherent(Box<CoherenceVerdict>),
    #[error("internal solver error: {0}")]
    Internal(String),
}
