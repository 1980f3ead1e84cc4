use std::collections::HashMap;

use super::{Frame, FourValue, Model, SemanticsError};
use crate::syntax::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Node {
    Var(usize),
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
    Tri(usize),
    Nec(usize),
}

/// A set of formulas compiled into one shared DAG.
///
/// Equal subformulas get one node, so each (world, subformula) value is
/// computed once per valuation. Nodes are stored children-first and
/// evaluation is a single forward pass.
#[derive(Clone, Debug, Default)]
pub(crate) struct Program {
    nodes: Vec<Node>,
    node_ids: HashMap<Node, usize>,
    vars: Vec<String>,
    var_ids: HashMap<String, usize>,
}

impl Program {
    pub(crate) fn new() -> Program {
        Program::default()
    }

    /// Adds `f` and returns its node id.
    pub(crate) fn add(&mut self, f: &Formula) -> usize {
        let node = match f {
            Formula::Atom(name) => {
                let next = self.vars.len();
                let id = *self.var_ids.entry(name.clone()).or_insert(next);
                if id == next {
                    self.vars.push(name.clone());
                }
                Node::Var(id)
            }
            Formula::Not(a) => Node::Not(self.add(a)),
            Formula::And(a, b) => Node::And(self.add(a), self.add(b)),
            Formula::Or(a, b) => Node::Or(self.add(a), self.add(b)),
            Formula::Tri(a) => Node::Tri(self.add(a)),
            Formula::Nec(a) => Node::Nec(self.add(a)),
        };
        self.intern(node)
    }

    fn intern(&mut self, node: Node) -> usize {
        if let Some(&id) = self.node_ids.get(&node) {
            return id;
        }
        self.nodes.push(node);
        self.node_ids.insert(node, self.nodes.len() - 1);
        self.nodes.len() - 1
    }

    pub(crate) fn vars(&self) -> &[String] {
        &self.vars
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Valuation array for `model`, laid out variable-major.
    pub(crate) fn valuation_of(&self, model: &Model) -> Vec<FourValue> {
        let n = model.frame().len();
        self.vars
            .iter()
            .flat_map(|var| (0..n).map(move |w| model.value_at(w, var)))
            .collect()
    }

    /// Fills `out[node * n + w]` with the value of every node at every
    /// world. `valuation[var * n + w]` gives the atoms.
    pub(crate) fn run(&self, frame: &Frame, valuation: &[FourValue], out: &mut Vec<FourValue>) {
        let n = frame.len();
        debug_assert_eq!(valuation.len(), self.vars.len() * n);
        out.clear();
        out.resize(self.nodes.len() * n, FourValue::N);
        for (id, node) in self.nodes.iter().enumerate() {
            let base = id * n;
            for w in 0..n {
                let value = match *node {
                    Node::Var(v) => valuation[v * n + w],
                    Node::Not(a) => out[a * n + w].negate(),
                    Node::And(a, b) => out[a * n + w].and(out[b * n + w]),
                    Node::Or(a, b) => out[a * n + w].or(out[b * n + w]),
                    Node::Tri(a) => tri_value(frame.successors(w).iter().map(|&u| out[a * n + u])),
                    Node::Nec(a) => nec_value(frame.successors(w).iter().map(|&u| out[a * n + u])),
                };
                out[base + w] = value;
            }
        }
    }
}

/// Value of `▲φ` given the values of `φ` at the successors.
///
/// Truth needs (t₁) agreement of all successors on both supports and (t₂)
/// every successor supporting truth or falsity. Falsity needs one of (f₁)
/// disagreement on truth, (f₂) disagreement on falsity, or (f₃) one
/// successor supporting truth and one supporting falsity.
pub(crate) fn tri_value(successors: impl Iterator<Item = FourValue>) -> FourValue {
    let (mut any_t, mut all_t, mut any_f, mut all_f, mut all_decided) = (false, true, false, true, true);
    for v in successors {
        let (t, f) = (v.supports_truth(), v.supports_falsity());
        any_t |= t;
        all_t &= t;
        any_f |= f;
        all_f &= f;
        all_decided &= t || f;
    }
    let t1 = (all_t || !any_t) && (all_f || !any_f);
    let f1 = any_t && !all_t;
    let f2 = any_f && !all_f;
    let f3 = any_t && any_f;
    FourValue::new(t1 && all_decided, f1 || f2 || f3)
}

pub(crate) fn nec_value(successors: impl Iterator<Item = FourValue>) -> FourValue {
    let (mut all_t, mut any_f) = (true, false);
    for v in successors {
        all_t &= v.supports_truth();
        any_f |= v.supports_falsity();
    }
    FourValue::new(all_t, any_f)
}

fn eval_index(m: &Model, w: usize, f: &Formula) -> FourValue {
    let mut program = Program::new();
    let root = program.add(f);
    let mut out = Vec::new();
    program.run(m.frame(), &program.valuation_of(m), &mut out);
    out[root * m.frame().len() + w]
}

/// `(M,w ⊨⁺ f, M,w ⊨⁻ f)` as a value.
pub fn eval(m: &Model, world: &str, f: &Formula) -> Result<FourValue, SemanticsError> {
    let w = m.frame().world_index_checked(world)?;
    Ok(eval_index(m, w, f))
}

/// Value of `f` at every world, in frame order.
pub fn eval_all(m: &Model, f: &Formula) -> Vec<FourValue> {
    let mut program = Program::new();
    let root = program.add(f);
    let n = m.frame().len();
    let mut out = Vec::new();
    program.run(m.frame(), &program.valuation_of(m), &mut out);
    out[root * n..(root + 1) * n].to_vec()
}

/// `M,w ⊨⁺ f`
pub fn supports_true(m: &Model, world: &str, f: &Formula) -> Result<bool, SemanticsError> {
    eval(m, world, f).map(FourValue::supports_truth)
}

/// `M,w ⊨⁻ f`
pub fn supports_false(m: &Model, world: &str, f: &Formula) -> Result<bool, SemanticsError> {
    eval(m, world, f).map(FourValue::supports_falsity)
}

/// Value of `▲f` at `world` by the case split on successor values:
/// uniformly classical (or no successors) gives T, all B gives B, all N
/// gives N, and two successors with different values give F.
pub fn tri_status_by_cases(m: &Model, world: &str, f: &Formula) -> Result<FourValue, SemanticsError> {
    let w = m.frame().world_index_checked(world)?;
    let values = eval_all(m, f);
    let succ: Vec<FourValue> = m.frame().successors(w).iter().map(|&u| values[u]).collect();
    let Some(&first) = succ.first() else {
        return Ok(FourValue::T);
    };
    if succ.iter().any(|&v| v != first) {
        return Ok(FourValue::F);
    }
    Ok(match first {
        FourValue::B => FourValue::B,
        FourValue::N => FourValue::N,
        _ => FourValue::T,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn glut_successor() -> Model {
        Model::from_json(
            r#"{"worlds": ["w0","w1"], "rel": [["w0","w0"],["w0","w1"]],
                "val": {"w0": {"p": "T"}, "w1": {"p": "B"}}}"#,
        )
        .unwrap()
    }

    #[test]
    fn tri_is_false_when_successors_differ() {
        let m = glut_successor();
        assert!(!supports_true(&m, "w0", &f("#p")).unwrap());
        assert!(supports_false(&m, "w0", &f("#p")).unwrap());
        assert_eq!(tri_status_by_cases(&m, "w0", &f("p")).unwrap(), FourValue::F);
    }

    #[test]
    fn dead_end_makes_tri_true() {
        let m = Model::new(Frame::from_indices(1, [])).with("w0", "p", FourValue::B);
        assert_eq!(eval(&m, "w0", &f("#p")).unwrap(), FourValue::T);
        assert_eq!(tri_status_by_cases(&m, "w0", &f("p")).unwrap(), FourValue::T);
        assert_eq!(eval(&m, "w0", &f("[]p")).unwrap(), FourValue::T);
    }

    #[test]
    fn uniform_non_classical_successors() {
        let frame = Frame::from_indices(2, [(0, 0), (0, 1)]);
        let glut = Model::new(frame.clone()).with("w0", "p", FourValue::B).with("w1", "p", FourValue::B);
        let gap = Model::new(frame);
        assert_eq!(eval(&glut, "w0", &f("#p")).unwrap(), FourValue::B);
        assert_eq!(eval(&gap, "w0", &f("#p")).unwrap(), FourValue::N);
        assert_eq!(tri_status_by_cases(&glut, "w0", &f("p")).unwrap(), FourValue::B);
        assert_eq!(tri_status_by_cases(&gap, "w0", &f("p")).unwrap(), FourValue::N);
    }

    #[test]
    fn classical_disagreement_is_false_not_true() {
        let m = Model::new(Frame::from_indices(3, [(0, 1), (0, 2)]))
            .with("w1", "p", FourValue::T)
            .with("w2", "p", FourValue::F);
        assert_eq!(eval(&m, "w0", &f("#p")).unwrap(), FourValue::F);
    }

    #[test]
    fn box_clauses() {
        let m = Model::new(Frame::from_indices(2, [(0, 0), (0, 1), (1, 0), (1, 1)]))
            .with("w0", "p", FourValue::T);
        let v = eval(&m, "w0", &f("[]p | []~p")).unwrap();
        assert!(!v.supports_truth());
        assert_eq!(eval(&m, "w0", &f("[]p")).unwrap(), FourValue::N);
    }

    #[test]
    fn unknown_world_is_an_error() {
        let m = glut_successor();
        assert_eq!(eval(&m, "w7", &f("p")), Err(SemanticsError::UnknownWorld("w7".into())));
    }

    #[test]
    fn shared_subformulas_compile_once() {
        let mut program = Program::new();
        program.add(&f("#p & #p | ~#p"));
        // p, #p, #p & #p, ~#p, or
        assert_eq!(program.len(), 5);
        assert_eq!(program.vars(), ["p"]);
    }
}
