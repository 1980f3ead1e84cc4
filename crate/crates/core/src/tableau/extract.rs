use super::branch::{Branch, Raw};
use super::label::ValueLabel;
use super::TableauError;
use crate::semantics::{Frame, FourValue, Model, PointedModel, Program};
use crate::syntax::Formula;

/// The model read off a branch: its worlds, its relation atoms, and
/// `w ∈ v⁺(p)` (`v⁻(p)`) iff `w:p;t` (`w:p;f`) is on it. Variables
/// without such entries are `N`. Pointed at the root world.
///
/// Fails if the branch is closed or if the model does not realise it.
pub fn extract_countermodel(b: &Branch) -> Result<PointedModel, TableauError> {
    if b.is_closed() {
        return Err(TableauError::ClosedBranch);
    }
    let model = branch_model(b);
    if let Some(item) = first_unrealised(&model, b) {
        return Err(TableauError::Realisation(item));
    }
    Ok(PointedModel::new(model, b.root()).expect("root is a world of the branch"))
}

fn branch_model(b: &Branch) -> Model {
    let frame = Frame::new(b.worlds().iter().cloned(), b.relations()).expect("branch worlds are distinct");
    let mut atoms: Vec<(usize, String, FourValue)> = Vec::new();
    for &raw in b.order() {
        if let Raw::Label(w, f, v) = raw {
            if let Formula::Atom(p) = b.table().formula(f) {
                atoms.push((w, p.clone(), FourValue::new(v == ValueLabel::T, v == ValueLabel::F)));
            }
        }
    }
    let mut model = Model::new(frame);
    for (w, p, support) in atoms {
        let old = model.value_at(w, &p);
        let merged = FourValue::new(
            old.supports_truth() || support.supports_truth(),
            old.supports_falsity() || support.supports_falsity(),
        );
        model.set_at(w, &p, merged);
    }
    model
}

/// Every labelled formula on `b` holds in `m`: `t`/`f` entries are
/// supported, `t̄`/`f̄` entries are not. Worlds of `b` missing from `m`
/// make the check fail.
pub fn check_realisation(m: &Model, b: &Branch) -> bool {
    first_unrealised(m, b).is_none()
}

fn first_unrealised(m: &Model, b: &Branch) -> Option<String> {
    let mut program = Program::new();
    let mut checks = Vec::new();
    for &raw in b.order() {
        if let Raw::Label(w, f, v) = raw {
            let node = program.add(b.table().formula(f));
            checks.push((raw, w, node, v));
        }
    }
    let mut world_index = Vec::with_capacity(b.world_count());
    for name in b.worlds() {
        match m.frame().world_index(name) {
            Some(i) => world_index.push(i),
            None => return Some(format!("world {name}")),
        }
    }
    let n = m.frame().len();
    let mut values = Vec::new();
    program.run(m.frame(), &program.valuation_of(m), &mut values);
    for (raw, w, node, v) in checks {
        let value = values[node * n + world_index[w]];
        let holds = match v {
            ValueLabel::T => value.supports_truth(),
            ValueLabel::F => value.supports_falsity(),
            ValueLabel::NotT => !value.supports_truth(),
            ValueLabel::NotF => !value.supports_falsity(),
        };
        if !holds {
            return Some(b.to_item(raw).to_string());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;
    use crate::tableau::Item;
    use ValueLabel::*;

    fn lf(w: &str, f: &str, v: ValueLabel) -> Item {
        Item::labelled(w, parse_formula(f).unwrap(), v)
    }

    #[test]
    fn single_entry() {
        let b = Branch::from_items([lf("w0", "p", T)]).unwrap();
        let m = extract_countermodel(&b).unwrap();
        assert_eq!(m.world, "w0");
        assert_eq!(m.model.frame().edge_count(), 0);
        assert_eq!(m.model.value("w0", "p").unwrap(), FourValue::T);
    }

    #[test]
    fn reflexive_glut() {
        let b = Branch::from_items([lf("w0", "p", T), lf("w0", "p", F), Item::rel("w0", "w0")]).unwrap();
        let m = extract_countermodel(&b).unwrap();
        assert!(m.model.frame().has_edge(0, 0));
        assert_eq!(m.model.value("w0", "p").unwrap(), FourValue::B);
    }

    #[test]
    fn realisation_failures() {
        let b = Branch::from_items([lf("w0", "p", T)]).unwrap();
        let gap = Model::new(Frame::from_indices(1, []));
        assert!(!check_realisation(&gap, &b));
        let elsewhere = Model::new(Frame::new(["v"], vec![]).unwrap());
        assert!(!check_realisation(&elsewhere, &b));
        // complex formulas are not read off directly
        let unrealised = Branch::from_items([lf("w0", "p | q", T)]).unwrap();
        assert!(matches!(extract_countermodel(&unrealised), Err(TableauError::Realisation(_))));
    }

    #[test]
    fn closed_branches_have_no_model() {
        let b = Branch::from_items([lf("w0", "p", T), lf("w0", "p", NotT)]).unwrap();
        assert_eq!(extract_countermodel(&b), Err(TableauError::ClosedBranch));
    }
}
