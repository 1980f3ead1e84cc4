//! Formulas and sequents of the `▲`- and `□`-languages: surface syntax,
//! parsing, printing, and structural utilities.
//!
//! Surface syntax (ASCII / glyph):
//!
//! | operator | ASCII | glyph |
//! |----------|-------|-------|
//! | negation | `~`   | `¬`   |
//! | conjunction | `&` | `∧` |
//! | disjunction | `\|` | `∨` |
//! | non-contingency | `#` | `▲` |
//! | contingency (`¬▲`) | `@` | `▽` |
//! | necessity | `[]` | `□` |
//! | possibility (`¬□¬`) | `<>` | `◇` |
//! | turnstile | `\|-` | `⊢` |

mod formula;
mod lexer;
mod parser;
mod render;

use thiserror::Error;

pub use formula::{is_variable_name, Formula, Language, Sequent};
pub use parser::{parse_formula, parse_sequent};

/// Parse failure with the byte offset of the offending input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("empty formula at byte {offset}")]
    Empty { offset: usize },
    #[error("invalid character `{found}` at byte {offset}")]
    InvalidCharacter { offset: usize, found: char },
    #[error("incomplete operator at byte {offset} (expected {operator})")]
    IncompleteOperator { offset: usize, operator: &'static str },
    #[error("unexpected {found} at byte {offset}, expected {expected}")]
    UnexpectedToken { offset: usize, found: String, expected: &'static str },
    #[error("unexpected end of input at byte {offset}")]
    UnexpectedEnd { offset: usize },
    #[error("unbalanced parenthesis at byte {offset}")]
    UnbalancedParen { offset: usize },
    #[error("sequent has no turnstile `|-`")]
    MissingTurnstile,
    #[error("duplicate turnstile at byte {offset}")]
    DuplicateTurnstile { offset: usize },
}

impl SyntaxError {
    pub fn offset(&self) -> Option<usize> {
        match *self {
            SyntaxError::Empty { offset }
            | SyntaxError::InvalidCharacter { offset, .. }
            | SyntaxError::IncompleteOperator { offset, .. }
            | SyntaxError::UnexpectedToken { offset, .. }
            | SyntaxError::UnexpectedEnd { offset }
            | SyntaxError::UnbalancedParen { offset }
            | SyntaxError::DuplicateTurnstile { offset } => Some(offset),
            SyntaxError::MissingTurnstile => None,
        }
    }
}
