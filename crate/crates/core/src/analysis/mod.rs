//! Bounded exhaustive search: model and formula enumeration, a brute-force
//! countermodel oracle, frame definability sweeps and bounded
//! expressivity checks.
//!
//! Every "there is no formula" or "defines" verdict here is relative to
//! the stated bound (formula size or frame size).

mod definability;
mod enumerate;
mod expressivity;
pub mod figures;
mod formulas;

use thiserror::Error;

use crate::semantics::SemanticsError;
use crate::syntax::SyntaxError;

pub use definability::{
    check_definability, frame_class, parse_validity_set, DefinabilityReport, DefinabilityVerdict, Disagreement,
    Validity, FRAME_CLASSES,
};
pub use enumerate::{enumerate_frames, enumerate_models, find_countermodel, MAX_FRAME_WORLDS};
pub use expressivity::{check_indistinguishability, values_at, Criterion, IndistinguishabilityReport, Separation};
pub use formulas::enumerate_formulas;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("bound exceeded: {worlds} worlds, frame enumeration is limited to {limit}")]
    TooManyWorlds { worlds: usize, limit: usize },
    #[error("{0}")]
    InvalidInput(String),
}
