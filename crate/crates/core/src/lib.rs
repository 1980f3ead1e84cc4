//! Paraconsistent non-contingency logic over four-valued Kripke models.
//!
//! - [`syntax`]: formulas and sequents, parser and printer.
//! - [`semantics`]: models, evaluation, validity on finite frames.
//! - [`tableau`]: proof search and countermodel extraction.
//! - [`analysis`]: bounded model search, definability and expressivity checks.

pub mod analysis;
pub mod semantics;
pub mod syntax;
pub mod tableau;

pub use semantics::{Frame, FourValue, Model, PointedModel};
pub use syntax::{parse_formula, parse_sequent, Formula, Sequent};
