use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::branch::{Branch, Raw};
use super::extract::extract_countermodel;
use super::label::{Item, ValueLabel};
use super::rules::{step, Rule, Step};
use super::tree::{NodeStatus, ProofNode, ProofTree, StepRecord};
use super::TableauError;
use crate::semantics::PointedModel;
use crate::syntax::Sequent;

/// Search statistics. Deterministic: no timings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub nodes: usize,
    pub rule_applications: usize,
    pub closed_branches: usize,
    pub open_branches: usize,
    pub unexplored_branches: usize,
    /// Most worlds on any explored branch.
    pub max_worlds: usize,
    pub rules: BTreeMap<String, usize>,
}

#[derive(Clone, Debug)]
pub struct Proof {
    pub tree: ProofTree,
    pub stats: Stats,
}

#[derive(Clone, Debug)]
pub struct Refutation {
    pub tree: ProofTree,
    pub stats: Stats,
    /// The first complete open branch in depth-first order.
    pub branch: Branch,
    /// Realises `branch`, pointed at its root world.
    pub countermodel: PointedModel,
}

#[derive(Clone, Debug)]
pub enum TableauResult {
    Proved(Proof),
    Refuted(Refutation),
}

impl TableauResult {
    pub fn is_proved(&self) -> bool {
        matches!(self, TableauResult::Proved(_))
    }

    pub fn tree(&self) -> &ProofTree {
        match self {
            TableauResult::Proved(p) => &p.tree,
            TableauResult::Refuted(r) => &r.tree,
        }
    }

    pub fn stats(&self) -> &Stats {
        match self {
            TableauResult::Proved(p) => &p.stats,
            TableauResult::Refuted(r) => &r.stats,
        }
    }

    pub fn countermodel(&self) -> Option<&PointedModel> {
        match self {
            TableauResult::Proved(_) => None,
            TableauResult::Refuted(r) => Some(&r.countermodel),
        }
    }
}

/// `{w0:φ;t, w0:χ;t̄}`
pub fn root_items(s: &Sequent) -> Vec<Item> {
    vec![
        Item::labelled("w0", s.premise.clone(), ValueLabel::T),
        Item::labelled("w0", s.conclusion.clone(), ValueLabel::NotT),
    ]
}

/// `{w0:φ;f̄, w0:χ;f}`, the root of the contraposed tree.
pub fn contraposed_root_items(s: &Sequent) -> Vec<Item> {
    vec![
        Item::labelled("w0", s.premise.clone(), ValueLabel::NotF),
        Item::labelled("w0", s.conclusion.clone(), ValueLabel::F),
    ]
}

/// Proves `φ ⊢ χ` by searching for a closed tree from `{w0:φ;t, w0:χ;t̄}`.
pub fn prove(s: &Sequent) -> Result<TableauResult, TableauError> {
    prove_from(root_items(s))
}

/// Runs the search from arbitrary initial items.
pub fn prove_from(items: impl IntoIterator<Item = Item>) -> Result<TableauResult, TableauError> {
    let items: Vec<Item> = items.into_iter().collect();
    let mut branch = Branch::from_items(items.iter().cloned())?;
    let initial: Vec<Raw> = branch.order().to_vec();
    let mut search = Search::default();
    let first = StepRecord { rule: Rule::Root, added: items_of(&branch, &initial) };
    let root = search.explore(&mut branch, first);
    let tree = ProofTree { root };
    let mut stats = search.stats;
    stats.nodes = tree.nodes().count();
    Ok(match search.open {
        None => TableauResult::Proved(Proof { tree, stats }),
        Some(branch) => {
            let countermodel = extract_countermodel(&branch)?;
            TableauResult::Refuted(Refutation { tree, stats, branch, countermodel })
        }
    })
}

fn items_of(b: &Branch, raws: &[Raw]) -> Vec<Item> {
    raws.iter().map(|&r| b.to_item(r)).collect()
}

#[derive(Default)]
struct Search {
    stats: Stats,
    open: Option<Branch>,
}

impl Search {
    fn record(&mut self, rule: Rule) {
        self.stats.rule_applications += 1;
        *self.stats.rules.entry(rule.name().to_owned()).or_default() += 1;
    }

    /// Depth-first, left alternative first; stops at the first complete
    /// open branch and leaves the remaining alternatives unexplored.
    fn explore(&mut self, b: &mut Branch, first: StepRecord) -> ProofNode {
        let mut steps = vec![first];
        loop {
            self.stats.max_worlds = self.stats.max_worlds.max(b.world_count());
            if let Some(clash) = b.clash() {
                self.stats.closed_branches += 1;
                return ProofNode { steps, status: NodeStatus::Closed { clash }, children: vec![] };
            }
            match step(b) {
                None => {
                    self.stats.open_branches += 1;
                    self.open = Some(b.clone());
                    return ProofNode { steps, status: NodeStatus::Open, children: vec![] };
                }
                Some(Step::Extend { rule, added }) => {
                    self.record(rule);
                    steps.push(StepRecord { rule, added: items_of(b, &added) });
                }
                Some(Step::Split { rule, shared, left, right }) => {
                    self.record(rule);
                    if !shared.is_empty() {
                        steps.push(StepRecord { rule, added: items_of(b, &shared) });
                    }
                    let mut children = Vec::with_capacity(2);
                    let mut right_branch = b.clone();
                    for (side, branch) in [(left, &mut *b), (right, &mut right_branch)] {
                        if self.open.is_some() {
                            self.stats.unexplored_branches += 1;
                            let record = StepRecord { rule, added: items_of(branch, &side) };
                            children.push(ProofNode { steps: vec![record], status: NodeStatus::Unexplored, children: vec![] });
                            continue;
                        }
                        let added = branch.apply(&side);
                        let record = StepRecord { rule, added: items_of(branch, &added) };
                        children.push(self.explore(branch, record));
                    }
                    return ProofNode { steps, status: NodeStatus::Branching, children };
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{supports_true, FourValue};
    use crate::syntax::parse_sequent;

    fn run(s: &str) -> TableauResult {
        prove(&parse_sequent(s).unwrap()).unwrap()
    }

    #[test]
    fn small_examples() {
        assert!(run("#p |- #~p").is_proved());
        assert!(run("p & q |- p").is_proved());
        assert!(run("p |- p | q").is_proved());
        assert!(!run("p |- q").is_proved());
        assert!(!run("#p |- p").is_proved());
    }

    #[test]
    fn glut_countermodel() {
        let result = run("p & ~p |- q");
        let m = result.countermodel().unwrap();
        assert_eq!(m.model.value(&m.world, "p").unwrap(), FourValue::B);
        assert!(!m.model.value(&m.world, "q").unwrap().supports_truth());
    }

    #[test]
    fn excluded_middle_does_not_imply_non_contingency() {
        let s = parse_sequent("q | ~q |- #(q | ~q)").unwrap();
        let TableauResult::Refuted(r) = prove(&s).unwrap() else { panic!("expected a refutation") };
        let m = &r.countermodel;
        assert!(supports_true(&m.model, &m.world, &s.premise).unwrap());
        assert!(!supports_true(&m.model, &m.world, &s.conclusion).unwrap());
        assert_eq!(m.model.frame().len(), 3);
    }

    #[test]
    fn tree_json_round_trips() {
        let result = run("#p |- #~p");
        let tree = result.tree();
        assert_eq!(&ProofTree::from_json(&tree.to_json()).unwrap(), tree);
        assert_eq!(result.stats().open_branches, 0);
        assert!(result.stats().closed_branches > 1);
    }

    #[test]
    fn box_is_rejected() {
        let err = prove(&parse_sequent("[]p |- p").unwrap()).unwrap_err();
        assert!(matches!(err, TableauError::NotTriLanguage(_)));
    }

    #[test]
    fn deterministic() {
        let a = run("##p & q |- #(p | ~#q)");
        let b = run("##p & q |- #(p | ~#q)");
        assert_eq!(a.tree(), b.tree());
        assert_eq!(a.countermodel(), b.countermodel());
    }
}
