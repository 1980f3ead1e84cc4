use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::formulas::enumerate_formulas;
use super::AnalysisError;
use crate::semantics::{FourValue, PointedModel, Program};
use crate::syntax::{Formula, Language};

/// What counts as a formula telling two pointed models apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Any difference in value.
    Value,
    /// `b`'s classical values are not reproduced by `a`: `b` is `F` and
    /// `a` is not, or `b` is `T` and `a` is not.
    Transfer,
    /// The formula is `B` at either designated world.
    Glut,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Criterion::Value => "value",
            Criterion::Transfer => "transfer",
            Criterion::Glut => "glut",
        }
    }

    pub fn separates(self, a: FourValue, b: FourValue) -> bool {
        match self {
            Criterion::Value => a != b,
            Criterion::Transfer => (b == FourValue::F && a != FourValue::F) || (b == FourValue::T && a != FourValue::T),
            Criterion::Glut => a == FourValue::B || b == FourValue::B,
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "value" => Ok(Criterion::Value),
            "transfer" => Ok(Criterion::Transfer),
            "glut" => Ok(Criterion::Glut),
            other => Err(format!("unknown criterion `{other}` (expected value, transfer or glut)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub formula: Formula,
    pub value_a: FourValue,
    pub value_b: FourValue,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndistinguishabilityReport {
    pub model_a: PointedModel,
    pub model_b: PointedModel,
    pub language: Language,
    pub vars: Vec<String>,
    pub max_size: usize,
    pub criterion: Criterion,
    pub formulas_checked: usize,
    /// The first separating formula in enumeration order.
    pub separation: Option<Separation>,
    pub elapsed_secs: f64,
}

impl IndistinguishabilityReport {
    pub fn separated(&self) -> bool {
        self.separation.is_some()
    }
}

impl fmt::Display for IndistinguishabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} formulas of the {} language over {{{}}} with at most {} nodes, criterion {}",
            self.formulas_checked,
            self.language.name(),
            self.vars.join(", "),
            self.max_size,
            self.criterion
        )?;
        match &self.separation {
            None => write!(f, "NOT SEPARATED (bounded check)"),
            Some(s) => write!(f, "SEPARATED by {}: {} at a, {} at b", s.formula.render(), s.value_a, s.value_b),
        }
    }
}

/// Values of `formulas` at the designated world of `m`.
pub fn values_at(m: &PointedModel, formulas: &[Formula]) -> Vec<FourValue> {
    let mut program = Program::new();
    let ids: Vec<usize> = formulas.iter().map(|f| program.add(f)).collect();
    let n = m.model.frame().len();
    let w = m.model.frame().world_index(&m.world).expect("designated world exists");
    let mut out = Vec::new();
    program.run(m.model.frame(), &program.valuation_of(&m.model), &mut out);
    ids.into_iter().map(|id| out[id * n + w]).collect()
}

/// Scans every formula of `language` over `vars` up to `max_size` nodes
/// for one that separates `a` from `b` under `criterion`.
pub fn check_indistinguishability(
    a: &PointedModel,
    b: &PointedModel,
    language: Language,
    vars: &[String],
    max_size: usize,
    criterion: Criterion,
) -> Result<IndistinguishabilityReport, AnalysisError> {
    if vars.is_empty() {
        return Err(AnalysisError::InvalidInput("at least one variable is needed".into()));
    }
    let start = Instant::now();
    let formulas = enumerate_formulas(language, vars, max_size);
    let values_a = values_at(a, &formulas);
    let values_b = values_at(b, &formulas);
    let separation = formulas
        .iter()
        .zip(values_a.iter().zip(&values_b))
        .find(|(_, (&va, &vb))| criterion.separates(va, vb))
        .map(|(f, (&value_a, &value_b))| Separation { formula: f.clone(), value_a, value_b });
    Ok(IndistinguishabilityReport {
        model_a: a.clone(),
        model_b: b.clone(),
        language,
        vars: vars.to_vec(),
        max_size,
        criterion,
        formulas_checked: formulas.len(),
        separation,
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}
