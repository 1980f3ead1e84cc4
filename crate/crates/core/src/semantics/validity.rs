use std::ops::ControlFlow;

use super::eval::Program;
use super::{Frame, FourValue, Model, PointedModel, SemanticsError};
use crate::syntax::{Formula, Sequent};

/// Default cap on `|W|·|Var|` for exhaustive valuation enumeration.
pub const DEFAULT_MAX_CELLS: usize = 12;

/// Bound on the valuation space searched by frame-level checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest allowed `|W|·|Var|`; the search visits `4^cells` valuations.
    pub max_cells: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_cells: DEFAULT_MAX_CELLS }
    }
}

impl Limits {
    pub(crate) fn check(&self, worlds: usize, vars: usize) -> Result<(), SemanticsError> {
        let cells = worlds * vars;
        if cells > self.max_cells {
            return Err(SemanticsError::BoundExceeded { cells, limit: self.max_cells });
        }
        Ok(())
    }
}

/// Calls `visit` on every valuation of `cells` atoms, in base-4 counting
/// order over `T, B, N, F` with the last cell varying fastest.
pub(crate) fn for_each_valuation<R>(
    cells: usize,
    mut visit: impl FnMut(&[FourValue]) -> ControlFlow<R>,
) -> Option<R> {
    let mut digits = vec![0u8; cells];
    let mut vals = vec![FourValue::ALL[0]; cells];
    loop {
        if let ControlFlow::Break(r) = visit(&vals) {
            return Some(r);
        }
        let mut i = cells;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < 4 {
                vals[i] = FourValue::ALL[digits[i] as usize];
                break;
            }
            digits[i] = 0;
            vals[i] = FourValue::ALL[0];
        }
    }
}

pub(crate) fn model_from_valuation(frame: &Frame, vars: &[String], valuation: &[FourValue]) -> Model {
    let n = frame.len();
    let mut model = Model::new(frame.clone());
    for (v, var) in vars.iter().enumerate() {
        for w in 0..n {
            model.set_at(w, var, valuation[v * n + w]);
        }
    }
    model
}

/// What has to hold at a world for a model to pass.
#[derive(Clone, Copy)]
pub(crate) enum Check {
    /// premise true ⇒ conclusion true
    Truth(usize, usize),
    /// premise not false ⇒ conclusion not false
    NonFalsity(usize, usize),
    /// formula true
    Formula(usize),
}

impl Check {
    /// First world where the check fails.
    pub(crate) fn failure(self, n: usize, values: &[FourValue]) -> Option<usize> {
        let at = |node: usize, w: usize| values[node * n + w];
        (0..n).find(|&w| match self {
            Check::Truth(a, b) => at(a, w).supports_truth() && !at(b, w).supports_truth(),
            Check::NonFalsity(a, b) => !at(a, w).supports_falsity() && at(b, w).supports_falsity(),
            Check::Formula(a) => !at(a, w).supports_truth(),
        })
    }
}

/// Searches all valuations of `program`'s variables on `frame` for the
/// first failing world.
///
/// Only the variables occurring in the checked formulas are enumerated:
/// evaluation is structural, so other atoms cannot change any value.
pub(crate) fn search_frame(
    frame: &Frame,
    program: &Program,
    check: Check,
    limits: Limits,
) -> Result<Option<PointedModel>, SemanticsError> {
    let n = frame.len();
    limits.check(n, program.vars().len())?;
    let mut scratch = Vec::new();
    let found = for_each_valuation(n * program.vars().len(), |valuation| {
        program.run(frame, valuation, &mut scratch);
        match check.failure(n, &scratch) {
            Some(w) => ControlFlow::Break((valuation.to_vec(), w)),
            None => ControlFlow::Continue(()),
        }
    });
    Ok(found.map(|(valuation, w)| {
        let model = model_from_valuation(frame, program.vars(), &valuation);
        PointedModel { model, world: frame.world_name(w).to_owned() }
    }))
}

fn sequent_program(s: &Sequent) -> (Program, usize, usize) {
    let mut program = Program::new();
    let a = program.add(&s.premise);
    let b = program.add(&s.conclusion);
    (program, a, b)
}

/// Truth preservation at every world of `m`.
pub fn sequent_holds(m: &Model, s: &Sequent) -> bool {
    first_failure(m, s).is_none()
}

/// First world of `m` where the premise is true and the conclusion is not.
pub fn first_failure(m: &Model, s: &Sequent) -> Option<String> {
    let (program, a, b) = sequent_program(s);
    let mut out = Vec::new();
    program.run(m.frame(), &program.valuation_of(m), &mut out);
    Check::Truth(a, b).failure(m.frame().len(), &out).map(|w| m.frame().world_name(w).to_owned())
}

/// Non-falsity preservation at every world of `m`.
pub fn sequent_holds_non_falsity(m: &Model, s: &Sequent) -> bool {
    let (program, a, b) = sequent_program(s);
    let mut out = Vec::new();
    program.run(m.frame(), &program.valuation_of(m), &mut out);
    Check::NonFalsity(a, b).failure(m.frame().len(), &out).is_none()
}

pub fn sequent_valid_on_frame(fr: &Frame, s: &Sequent) -> Result<bool, SemanticsError> {
    sequent_countermodel_on_frame(fr, s, Limits::default()).map(|w| w.is_none())
}

/// First model on `fr` (in enumeration order) refuting `s`, pointed at the
/// first failing world.
pub fn sequent_countermodel_on_frame(
    fr: &Frame,
    s: &Sequent,
    limits: Limits,
) -> Result<Option<PointedModel>, SemanticsError> {
    let (program, a, b) = sequent_program(s);
    search_frame(fr, &program, Check::Truth(a, b), limits)
}

/// Formula validity: true at every world of every model on `fr`.
pub fn formula_valid_on_frame(fr: &Frame, f: &Formula) -> Result<bool, SemanticsError> {
    formula_countermodel_on_frame(fr, f, Limits::default()).map(|w| w.is_none())
}

pub fn formula_countermodel_on_frame(
    fr: &Frame,
    f: &Formula,
    limits: Limits,
) -> Result<Option<PointedModel>, SemanticsError> {
    let mut program = Program::new();
    let a = program.add(f);
    search_frame(fr, &program, Check::Formula(a), limits)
}

/// Swaps B and N at every (world, variable); T and F are kept.
pub fn dual_model(m: &Model) -> Model {
    m.map_values(FourValue::dual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_sequent};

    fn seq(s: &str) -> Sequent {
        parse_sequent(s).unwrap()
    }

    #[test]
    fn valuation_order_is_base_four() {
        let mut seen = Vec::new();
        for_each_valuation::<()>(2, |v| {
            seen.push(format!("{}{}", v[0], v[1]));
            ControlFlow::Continue(())
        });
        assert_eq!(seen.len(), 16);
        assert_eq!(&seen[..5], ["TT", "TB", "TN", "TF", "BT"]);
        assert_eq!(seen[15], "FF");
    }

    #[test]
    fn reflexive_point_validates_excluded_middle_under_tri() {
        let reflexive = Frame::from_indices(1, [(0, 0)]);
        let irreflexive = Frame::from_indices(1, []);
        let s = seq("#(p | ~p) |- p | ~p");
        assert!(sequent_valid_on_frame(&reflexive, &s).unwrap());
        let witness = sequent_countermodel_on_frame(&irreflexive, &s, Limits::default()).unwrap().unwrap();
        assert_eq!(witness.model.value("w0", "p").unwrap(), FourValue::N);
    }

    #[test]
    fn single_edge_validates_contingency_sequent() {
        let single_edge = Frame::from_indices(2, [(0, 1)]);
        assert!(sequent_valid_on_frame(&single_edge, &seq("@p |- ##p")).unwrap());
    }

    #[test]
    fn formula_validity() {
        let empty = Frame::from_indices(2, []);
        let tri_p = parse_formula("#p").unwrap();
        assert!(formula_valid_on_frame(&empty, &tri_p).unwrap());
        let loop_frame = Frame::from_indices(1, [(0, 0)]);
        let w = formula_countermodel_on_frame(&loop_frame, &tri_p, Limits::default()).unwrap().unwrap();
        assert_eq!(w.model.value("w0", "p").unwrap(), FourValue::N);
        let lem = parse_formula("p | ~p").unwrap();
        assert!(!formula_valid_on_frame(&empty, &lem).unwrap());
    }

    #[test]
    fn glut_does_not_explode() {
        let m = Model::new(Frame::from_indices(1, [(0, 0)])).with("w0", "p", FourValue::B);
        assert!(!sequent_holds(&m, &seq("p & ~p |- q")));
        assert!(sequent_holds(&m, &seq("p & q |- p")));
    }

    #[test]
    fn bound_guard() {
        let frame = Frame::from_indices(3, []);
        let tight = Limits { max_cells: 2 };
        assert!(sequent_countermodel_on_frame(&frame, &seq("p |- p"), tight).is_err());
        assert!(Limits { max_cells: 3 }.check(3, 1).is_ok());
        let s5 = seq("p & q & r & s & t |- p");
        assert_eq!(
            sequent_valid_on_frame(&frame, &s5),
            Err(SemanticsError::BoundExceeded { cells: 15, limit: 12 })
        );
    }

    #[test]
    fn dual_swaps_non_classical_values() {
        let m = Model::new(Frame::from_indices(1, []))
            .with("w0", "p", FourValue::B)
            .with("w0", "q", FourValue::T);
        let d = dual_model(&m);
        assert_eq!(d.value("w0", "p").unwrap(), FourValue::N);
        assert_eq!(d.value("w0", "q").unwrap(), FourValue::T);
        assert_eq!(dual_model(&d), m);
    }
}
