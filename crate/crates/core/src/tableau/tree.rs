use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::label::Item;
use super::rules::Rule;

/// Items added by one rule application.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub rule: Rule,
    pub added: Vec<Item>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NodeStatus {
    /// The node ends in a branching rule; see `children`.
    Branching,
    Closed { clash: (Item, Item) },
    /// Complete and open.
    Open,
    /// Not visited because an open branch was already found.
    Unexplored,
}

/// A maximal run of non-branching steps followed by its status.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofNode {
    pub steps: Vec<StepRecord>,
    pub status: NodeStatus,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<ProofNode>,
}

/// A proof tree. Each node holds the items added along a path segment;
/// branching rules produce one child per alternative, left first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTree {
    pub root: ProofNode,
}

impl ProofTree {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("proof trees always serialize")
    }

    pub fn from_json(text: &str) -> Result<ProofTree, serde_json::Error> {
        let mut de = serde_json::Deserializer::from_str(text);
        // trees can nest deeper than serde_json's default limit
        de.disable_recursion_limit();
        let tree = ProofTree::deserialize(&mut de)?;
        de.end()?;
        Ok(tree)
    }

    /// Indented text: one item per line with the rule that added it.
    pub fn render(&self, unicode: bool) -> String {
        let mut out = String::new();
        render_node(&self.root, 0, unicode, &mut out);
        out
    }

    pub fn nodes(&self) -> impl Iterator<Item = &ProofNode> {
        let mut stack = vec![&self.root];
        std::iter::from_fn(move || {
            let node = stack.pop()?;
            stack.extend(node.children.iter().rev());
            Some(node)
        })
    }

    /// Every item added anywhere in the tree.
    pub fn items(&self) -> impl Iterator<Item = &Item> {
        self.nodes().flat_map(|n| n.steps.iter().flat_map(|s| s.added.iter()))
    }
}

fn render_node(node: &ProofNode, depth: usize, unicode: bool, out: &mut String) {
    let indent = "  ".repeat(depth);
    for step in &node.steps {
        let rule = if unicode { step.rule.glyph() } else { step.rule.name() };
        for item in &step.added {
            let _ = writeln!(out, "{indent}{}    [{rule}]", item.render(unicode));
        }
    }
    match &node.status {
        NodeStatus::Branching => {
            for (i, child) in node.children.iter().enumerate() {
                let _ = writeln!(out, "{indent}{}", if i == 0 { "+-" } else { "|-" });
                render_node(child, depth + 1, unicode, out);
            }
        }
        NodeStatus::Closed { clash } => {
            let mark = if unicode { "✗" } else { "x" };
            let _ = writeln!(out, "{indent}{mark} closed: {} / {}", clash.0.render(unicode), clash.1.render(unicode));
        }
        NodeStatus::Open => {
            let mark = if unicode { "○" } else { "o" };
            let _ = writeln!(out, "{indent}{mark} open (complete)");
        }
        NodeStatus::Unexplored => {
            let _ = writeln!(out, "{indent}... unexplored");
        }
    }
}
