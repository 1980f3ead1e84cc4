use crate::syntax::{Formula, Language};

/// All formulas of `language` over `vars` with at most `max_size` nodes.
///
/// Ordered by size; within a size: atoms, negations, the modality, then
/// conjunctions and disjunctions by left-operand size. Each formula is
/// produced once.
pub fn enumerate_formulas(language: Language, vars: &[String], max_size: usize) -> Vec<Formula> {
    let mut by_size: Vec<Vec<Formula>> = vec![Vec::new()];
    for size in 1..=max_size {
        let mut level = Vec::new();
        if size == 1 {
            level.extend(vars.iter().map(|v| Formula::atom(v.clone())));
        } else {
            let below = &by_size[size - 1];
            level.extend(below.iter().cloned().map(Formula::not));
            let modal = match language {
                Language::Tri => Formula::tri,
                Language::Box => Formula::nec,
            };
            level.extend(below.iter().cloned().map(modal));
            for binary in [Formula::and as fn(Formula, Formula) -> Formula, Formula::or] {
                for left in 1..size - 1 {
                    for a in &by_size[left] {
                        for b in &by_size[size - 1 - left] {
                            level.push(binary(a.clone(), b.clone()));
                        }
                    }
                }
            }
        }
        by_size.push(level);
    }
    by_size.into_iter().flatten().collect()
}
