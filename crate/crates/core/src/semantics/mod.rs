//! Four-valued Kripke models and the two support relations `⊨⁺` and `⊨⁻`.
//!
//! A model assigns each (world, variable) pair one of the values
//! [`FourValue::T`], [`FourValue::B`], [`FourValue::N`], [`FourValue::F`],
//! i.e. independent truth and falsity support. `▲` and `□` quantify over
//! the successors `R(w)` of the evaluation world.
//!
//! Frame-level validity enumerates every valuation of the variables that
//! occur in the checked formulas, bounded by [`Limits`].

mod eval;
mod frame;
mod model;
mod validity;
mod value;

use thiserror::Error;

pub(crate) use eval::Program;
pub use eval::{eval, eval_all, supports_false, supports_true, tri_status_by_cases};
pub use frame::{frame_property, Frame, FrameProperty};
pub use model::{Model, ModelFile, PointedModel};
pub(crate) use validity::{model_from_valuation, search_frame, Check};
pub use validity::{
    dual_model, first_failure, formula_countermodel_on_frame, formula_valid_on_frame, sequent_countermodel_on_frame,
    sequent_holds, sequent_holds_non_falsity, sequent_valid_on_frame, Limits, DEFAULT_MAX_CELLS,
};
pub use value::FourValue;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("a frame needs at least one world")]
    NoWorlds,
    #[error("duplicate world `{0}`")]
    DuplicateWorld(String),
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("bound exceeded: {cells} world-variable cells, limit {limit}")]
    BoundExceeded { cells: usize, limit: usize },
}
