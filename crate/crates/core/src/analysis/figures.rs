//! Bundled example models and frames, and the checks that reproduce the
//! claims made about them.

use serde::Serialize;

use super::{
    check_definability, check_indistinguishability, enumerate_formulas, frame_class, values_at, Criterion, FRAME_CLASSES,
};
use crate::semantics::{
    eval, formula_valid_on_frame, frame_property, sequent_holds, sequent_valid_on_frame, Frame, FourValue,
    FrameProperty, ModelFile, PointedModel,
};
use crate::syntax::{parse_formula, parse_sequent, Formula, Language};
use crate::tableau::{check_realisation, prove, Branch, Item, TableauResult, ValueLabel};

macro_rules! bundle {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../data/", $name, ".json")))),*]
    };
}

/// `(name, JSON)` for every bundled model and frame.
pub const BUNDLED: &[(&str, &str)] = bundle![
    "glut_successor",
    "witnesses",
    "stock_network",
    "stock_network_no_store_edge",
    "uniform_glut",
    "uniform_gap",
    "failed_proof_model",
    "classical_point",
    "classical_gap_cluster",
    "glut_cluster",
    "dead_end_frame",
    "reflexive_point_frame",
    "transitive_glut_chain",
    "single_edge_frame",
    "glut_gap_point",
    "collapse_glut",
    "collapse_gap",
];

pub fn bundled_json(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, json)| *json)
}

fn file(name: &str) -> ModelFile {
    ModelFile::from_json(bundled_json(name).expect("bundled name")).expect("bundled files parse")
}

/// A bundled model, pointed at its designated world.
pub fn bundled_model(name: &str) -> PointedModel {
    PointedModel::from_file(&file(name), None).expect("bundled models are pointed")
}

pub fn bundled_frame(name: &str) -> Frame {
    file(name).frame().expect("bundled frames are well formed")
}

/// The leftmost open branch of the failed attempt on
/// `q ∨ ¬q ⊢ ▲(q ∨ ¬q)`, written out entry by entry (the `w0` cut on
/// `q ∨ ¬q` is left out, so the branch says nothing about `q` at `w0`).
pub fn failed_proof_branch() -> Branch {
    use ValueLabel::*;
    let lf = |w: &str, f: &str, v| Item::labelled(w, parse_formula(f).expect("literal formulas parse"), v);
    Branch::from_items([
        lf("w0", "q | ~q", T),
        lf("w0", "#(q | ~q)", NotT),
        lf("w0", "#(q | ~q)", F),
        Item::rel("w0", "w1"),
        Item::rel("w0", "w2"),
        lf("w1", "q | ~q", T),
        lf("w1", "q | ~q", F),
        lf("w1", "q", F),
        lf("w1", "~q", F),
        lf("w1", "q", T),
        lf("w2", "q | ~q", NotT),
        lf("w2", "q", NotT),
        lf("w2", "~q", NotT),
        lf("w2", "q", NotF),
    ])
    .expect("literal branch is well formed")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FigureCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<(bool, String), String>;

fn value(m: &PointedModel, world: Option<&str>, f: &str) -> Result<FourValue, String> {
    let f = parse_formula(f).map_err(|e| e.to_string())?;
    eval(&m.model, world.unwrap_or(&m.world), &f).map_err(|e| e.to_string())
}

fn expect_values(m: &PointedModel, world: Option<&str>, expected: &[(&str, FourValue)]) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for &(f, want) in expected {
        let got = value(m, world, f)?;
        ok &= got == want;
        parts.push(format!("{f} = {got}"));
    }
    Ok((ok, format!("at {}: {}", world.unwrap_or(&m.world), parts.join(", "))))
}

fn p() -> Vec<String> {
    vec!["p".to_owned()]
}

const EXPRESSIVITY_SIZE: usize = 9;

type Check = (&'static str, fn() -> Outcome);

fn checks() -> Vec<Check> {
    vec![
        ("true everywhere, false somewhere: #p is F", || {
            expect_values(&bundled_model("glut_successor"), None, &[("#p", FourValue::F)])
        }),
        ("testimonies with anomalies: #p and #s are F", || {
            expect_values(&bundled_model("witnesses"), None, &[("#p", FourValue::F), ("#s", FourValue::F)])
        }),
        ("stock network: #p and #r are F, and T once the store is unreachable", || {
            let full = bundled_model("stock_network");
            let cut = bundled_model("stock_network_no_store_edge");
            let derived = full.model.frame().without_edge("wc", "ws").map_err(|e| e.to_string())?;
            let (a, da) = expect_values(&full, None, &[("#p", FourValue::F), ("#r", FourValue::F)])?;
            let (b, db) = expect_values(&cut, None, &[("#p", FourValue::T), ("#r", FourValue::T)])?;
            Ok((a && b && &derived == cut.model.frame(), format!("{da}; without the edge {db}")))
        }),
        ("uniform successors: #p is B over gluts and N over gaps", || {
            let (a, da) = expect_values(&bundled_model("uniform_glut"), None, &[("#p", FourValue::B)])?;
            let (b, db) = expect_values(&bundled_model("uniform_gap"), None, &[("#p", FourValue::N)])?;
            Ok((a && b, format!("{da}; {db}")))
        }),
        ("#p |- #~p has a closed tableau", || {
            let result = prove(&parse_sequent("#p |- #~p").expect("parses")).map_err(|e| e.to_string())?;
            let stats = result.stats();
            Ok((result.is_proved(), format!("{} closed branches", stats.closed_branches)))
        }),
        ("q | ~q |- #(q | ~q) is refuted by its extracted countermodel", || {
            let s = parse_sequent("q | ~q |- #(q | ~q)").expect("parses");
            let TableauResult::Refuted(r) = prove(&s).map_err(|e| e.to_string())? else {
                return Ok((false, "unexpectedly proved".into()));
            };
            let m = &r.countermodel;
            let premise = eval(&m.model, &m.world, &s.premise).map_err(|e| e.to_string())?;
            let conclusion = eval(&m.model, &m.world, &s.conclusion).map_err(|e| e.to_string())?;
            Ok((
                premise.supports_truth() && !conclusion.supports_truth(),
                format!("{} worlds, premise {premise}, conclusion {conclusion}", m.model.frame().len()),
            ))
        }),
        ("the hand-built model realises the failed proof's open branch", || {
            let m = bundled_model("failed_proof_model");
            let branch = failed_proof_branch();
            let refutes = !sequent_holds(&m.model, &parse_sequent("q | ~q |- #(q | ~q)").expect("parses"));
            Ok((
                check_realisation(&m.model, &branch) && refutes && !branch.is_closed(),
                format!("{} branch entries", branch.len()),
            ))
        }),
        ("no box formula transfers the classical values of #p", || {
            let a = bundled_model("classical_point");
            let b = bundled_model("classical_gap_cluster");
            let tri = [value(&a, None, "#p")?, value(&b, None, "#p")?];
            let report =
                check_indistinguishability(&a, &b, Language::Box, &p(), EXPRESSIVITY_SIZE, Criterion::Transfer)
                    .map_err(|e| e.to_string())?;
            Ok((
                !report.separated() && tri == [FourValue::T, FourValue::F],
                format!("#p is {} vs {}; {} formulas checked", tri[0], tri[1], report.formulas_checked),
            ))
        }),
        ("no tri formula is B where []p is", || {
            let m = bundled_model("glut_cluster");
            let boxed = value(&m, None, "[]p")?;
            let report =
                check_indistinguishability(&m, &m, Language::Tri, &p(), EXPRESSIVITY_SIZE, Criterion::Glut)
                    .map_err(|e| e.to_string())?;
            Ok((
                !report.separated() && boxed == FourValue::B,
                format!("[]p is {boxed}; {} formulas checked", report.formulas_checked),
            ))
        }),
        ("#p is valid on a dead end but not on a reflexive point", || {
            let tri = parse_formula("#p").expect("parses");
            let dead = formula_valid_on_frame(&bundled_frame("dead_end_frame"), &tri).map_err(|e| e.to_string())?;
            let refl =
                formula_valid_on_frame(&bundled_frame("reflexive_point_frame"), &tri).map_err(|e| e.to_string())?;
            Ok((dead && !refl, format!("dead end: {dead}, reflexive point: {refl}")))
        }),
        ("#p |- ##p fails on a transitive frame", || {
            let m = bundled_model("transitive_glut_chain");
            let s = parse_sequent("#p |- ##p").expect("parses");
            let transitive = frame_property(m.model.frame(), FrameProperty::Transitive);
            let (ok, detail) = expect_values(&m, None, &[("#p", FourValue::B), ("##p", FourValue::F)])?;
            Ok((ok && transitive && !sequent_holds(&m.model, &s), detail))
        }),
        ("@p |- ##p is valid on a frame that is not euclidean", || {
            let frame = bundled_frame("single_edge_frame");
            let valid = sequent_valid_on_frame(&frame, &parse_sequent("@p |- ##p").expect("parses"))
                .map_err(|e| e.to_string())?;
            let euclidean = frame_property(&frame, FrameProperty::Euclidean);
            Ok((valid && !euclidean, format!("valid: {valid}, euclidean: {euclidean}")))
        }),
        ("frame classes are defined up to three worlds", || {
            let mut ok = true;
            let mut parts = Vec::new();
            for name in FRAME_CLASSES {
                let (property, set) = frame_class(name).expect("known class");
                let report = check_definability(property, &set, 3).map_err(|e| e.to_string())?;
                ok &= report.defines();
                parts.push(format!("{name}: {}", if report.defines() { "defines" } else { "refuted" }));
            }
            Ok((ok, parts.join(", ")))
        }),
        ("a glut-gap point refutes every phi |- q with q absent from phi", || {
            let m = bundled_model("glut_gap_point");
            let formulas = enumerate_formulas(Language::Tri, &p(), EXPRESSIVITY_SIZE);
            let all_b = values_at(&m, &formulas).iter().all(|&v| v == FourValue::B);
            let q = value(&m, None, "q")?;
            Ok((all_b && !q.supports_truth(), format!("{} formulas are B, q is {q}", formulas.len())))
        }),
        ("all-glut and all-gap valuations collapse every formula", || {
            let vars = vec!["p".to_owned(), "q".to_owned()];
            let mut formulas = enumerate_formulas(Language::Tri, &vars, 6);
            formulas.extend(enumerate_formulas(Language::Box, &vars, 6).into_iter().filter(Formula::contains_nec));
            let glut = values_at(&bundled_model("collapse_glut"), &formulas).iter().all(|&v| v == FourValue::B);
            let gap = values_at(&bundled_model("collapse_gap"), &formulas).iter().all(|&v| v == FourValue::N);
            Ok((glut && gap, format!("{} formulas", formulas.len())))
        }),
    ]
}

/// Runs every bundled check, in a fixed order.
pub fn run_figure_checks() -> Vec<FigureCheck> {
    checks()
        .into_iter()
        .map(|(name, check)| match check() {
            Ok((passed, detail)) => FigureCheck { name, passed, detail },
            Err(error) => FigureCheck { name, passed: false, detail: format!("error: {error}") },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_bundled_file_loads() {
        for (name, json) in BUNDLED {
            let file = ModelFile::from_json(json).unwrap_or_else(|e| panic!("{name}: {e}"));
            if file.designated.is_some() {
                bundled_model(name);
            } else {
                bundled_frame(name);
            }
        }
    }

    #[test]
    fn failed_proof_branch_leaves_q_open_at_the_root() {
        // reading q off the branch gives N at w0, which falsifies the root entry
        let err = crate::tableau::extract_countermodel(&failed_proof_branch()).unwrap_err();
        assert_eq!(err, crate::tableau::TableauError::Realisation("w0: q | ~q; t".into()));
    }

    #[test]
    fn all_checks_pass() {
        for check in run_figure_checks() {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }
}
