use std::collections::HashMap;

use crate::syntax::Formula;

pub(crate) type FId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Shape {
    Atom,
    Not(FId),
    And(FId, FId),
    Or(FId, FId),
    Tri(FId),
}

/// Interned subformulas of the formulas a tableau starts from. Rules only
/// ever produce subformulas, so the table is fixed for a whole search.
#[derive(Debug, Default)]
pub(crate) struct FormulaTable {
    shapes: Vec<Shape>,
    formulas: Vec<Formula>,
    ids: HashMap<Formula, FId>,
}

impl FormulaTable {
    /// Interns `f` and its subformulas. `None` if `f` contains `□`.
    pub(crate) fn intern(&mut self, f: &Formula) -> Option<FId> {
        if let Some(&id) = self.ids.get(f) {
            return Some(id);
        }
        let shape = match f {
            Formula::Atom(_) => Shape::Atom,
            Formula::Not(a) => Shape::Not(self.intern(a)?),
            Formula::And(a, b) => Shape::And(self.intern(a)?, self.intern(b)?),
            Formula::Or(a, b) => Shape::Or(self.intern(a)?, self.intern(b)?),
            Formula::Tri(a) => Shape::Tri(self.intern(a)?),
            Formula::Nec(_) => return None,
        };
        let id = self.shapes.len();
        self.shapes.push(shape);
        self.formulas.push(f.clone());
        self.ids.insert(f.clone(), id);
        Some(id)
    }

    pub(crate) fn shape(&self, id: FId) -> Shape {
        self.shapes[id]
    }

    pub(crate) fn formula(&self, id: FId) -> &Formula {
        &self.formulas[id]
    }

    pub(crate) fn id(&self, f: &Formula) -> Option<FId> {
        self.ids.get(f).copied()
    }

    pub(crate) fn len(&self) -> usize {
        self.shapes.len()
    }
}
