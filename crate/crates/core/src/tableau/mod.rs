//! Labelled analytic-cut tableaux for the `▲`-language.
//!
//! A branch holds labelled formulas `w:φ;v` with `v ∈ {t, f, t̄, f̄}` and
//! relation atoms `w R w′`. It is closed when some `w:φ;v` and `w:φ;v̄`
//! both occur. A sequent `φ ⊢ χ` is proved when every branch from
//! `{w0:φ;t, w0:χ;t̄}` closes; otherwise the first complete open branch
//! yields a countermodel.
//!
//! Search strategy: rules are tried in the order propositional, `▲`
//! propagation, cut, world creation, and branches are explored depth-first
//! with the left alternative first. Cuts are restricted to the decisions a
//! realising model needs (see [`saturation_step`]).
//!
//! Termination: a world created at `w` receives only the immediate
//! subformula of a `▲`-formula labelled at `w`, and its only incoming edge
//! is from `w`, so `▲`-depth strictly drops along creation. Each creating
//! rule fires at most once per (world, formula), and every other rule only
//! adds missing labels for subformulas at existing worlds.

mod branch;
mod extract;
mod label;
mod prover;
mod rules;
mod table;
mod tree;

use thiserror::Error;

pub use branch::Branch;
pub use extract::{check_realisation, extract_countermodel};
pub use label::{Item, LabelledFormula, RelAtom, ValueLabel};
pub use prover::{contraposed_root_items, prove, prove_from, root_items, Proof, Refutation, Stats, TableauResult};
pub use rules::{is_complete, saturation_step, Rule};
pub use tree::{NodeStatus, ProofNode, ProofTree, StepRecord};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("the prover only handles the ▲-language, found `{0}`")]
    NotTriLanguage(String),
    #[error("invalid world label `{0}`")]
    InvalidWorld(String),
    #[error("a closed branch has no countermodel")]
    ClosedBranch,
    #[error("extracted model does not realise `{0}`")]
    Realisation(String),
}
