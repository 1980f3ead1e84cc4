use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A formula over `{¬, ∧, ∨, ▲, □}`.
///
/// Derived operators (`▽φ = ¬▲φ`, `◇φ = ¬□¬φ`) are desugared by the parser
/// and never appear as nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// Non-contingency: "the value is the same in all accessible worlds".
    Tri(Box<Formula>),
    /// Necessity of the `□`-language.
    Nec(Box<Formula>),
}

/// Which modal operator a formula may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Language {
    /// `{¬, ∧, ∨, ▲}`
    Tri,
    /// `{¬, ∧, ∨, □}`
    Box,
}

impl Language {
    pub fn name(self) -> &'static str {
        match self {
            Language::Tri => "tri",
            Language::Box => "box",
        }
    }
}

impl std::str::FromStr for Language {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tri" | "▲" => Ok(Language::Tri),
            "box" | "□" => Ok(Language::Box),
            other => Err(format!("unknown language `{other}` (expected `tri` or `box`)")),
        }
    }
}

/// Returns true if `name` is a well-formed variable name, `[a-z][a-z0-9_]*`.
pub fn is_variable_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| matches!(c, 'a'..='z' | '0'..='9' | '_'))
}

impl Formula {
    /// Panics if `name` is not a well-formed variable name.
    pub fn atom(name: impl Into<String>) -> Formula {
        let name = name.into();
        assert!(is_variable_name(&name), "invalid variable name `{name}`");
        Formula::Atom(name)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn tri(f: Formula) -> Formula {
        Formula::Tri(Box::new(f))
    }

    pub fn nec(f: Formula) -> Formula {
        Formula::Nec(Box::new(f))
    }

    /// `▽φ`, i.e. `¬▲φ`.
    pub fn nontri(f: Formula) -> Formula {
        Formula::not(Formula::tri(f))
    }

    /// `◇φ`, i.e. `¬□¬φ`.
    pub fn poss(f: Formula) -> Formula {
        Formula::not(Formula::nec(Formula::not(f)))
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::Not(f) | Formula::Tri(f) | Formula::Nec(f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Maximal nesting of modal operators (`▲` and `□` alike).
    pub fn modal_depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Not(f) => f.modal_depth(),
            Formula::Tri(f) | Formula::Nec(f) => 1 + f.modal_depth(),
            Formula::And(a, b) | Formula::Or(a, b) => a.modal_depth().max(b.modal_depth()),
        }
    }

    pub fn contains_tri(&self) -> bool {
        match self {
            Formula::Atom(_) => false,
            Formula::Tri(_) => true,
            Formula::Not(f) | Formula::Nec(f) => f.contains_tri(),
            Formula::And(a, b) | Formula::Or(a, b) => a.contains_tri() || b.contains_tri(),
        }
    }

    pub fn contains_nec(&self) -> bool {
        match self {
            Formula::Atom(_) => false,
            Formula::Nec(_) => true,
            Formula::Not(f) | Formula::Tri(f) => f.contains_nec(),
            Formula::And(a, b) | Formula::Or(a, b) => a.contains_nec() || b.contains_nec(),
        }
    }

    /// A formula without `□` belongs to the `▲`-language; one without `▲`
    /// to the `□`-language. Purely propositional formulas belong to both.
    pub fn in_language(&self, language: Language) -> bool {
        match language {
            Language::Tri => !self.contains_nec(),
            Language::Box => !self.contains_tri(),
        }
    }

    /// Immediate children, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(_) => vec![],
            Formula::Not(f) | Formula::Tri(f) | Formula::Nec(f) => vec![f],
            Formula::And(a, b) | Formula::Or(a, b) => vec![a, b],
        }
    }

    /// All subtrees, including the formula itself.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if out.insert(self.clone()) {
            for child in self.children() {
                child.collect_subformulas(out);
            }
        }
    }

    /// The variable names occurring in the formula.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit_atoms(&mut |name| {
            out.insert(name.to_owned());
        });
        out
    }

    fn visit_atoms(&self, f: &mut impl FnMut(&str)) {
        match self {
            Formula::Atom(name) => f(name),
            Formula::Not(g) | Formula::Tri(g) | Formula::Nec(g) => g.visit_atoms(f),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.visit_atoms(f);
                b.visit_atoms(f);
            }
        }
    }

    /// Canonical ASCII rendering; `parse_formula(&f.render()) == Ok(f)`.
    pub fn render(&self) -> String {
        super::render::render(self, super::render::Style::Ascii)
    }

    /// Glyph rendering with `▲ ▽ ¬ ∧ ∨ □ ◇`.
    pub fn pretty(&self) -> String {
        super::render::render(self, super::render::Style::Unicode)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for Formula {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for Formula {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        super::parse_formula(&text).map_err(serde::de::Error::custom)
    }
}

/// A formula-formula sequent `premise ⊢ conclusion`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub premise: Formula,
    pub conclusion: Formula,
}

impl Sequent {
    pub fn new(premise: Formula, conclusion: Formula) -> Sequent {
        Sequent { premise, conclusion }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut vars = self.premise.variables();
        vars.extend(self.conclusion.variables());
        vars
    }

    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut subs = self.premise.subformulas();
        subs.extend(self.conclusion.subformulas());
        subs
    }

    pub fn in_language(&self, language: Language) -> bool {
        self.premise.in_language(language) && self.conclusion.in_language(language)
    }

    /// `¬χ ⊢ ¬φ` for `φ ⊢ χ`.
    pub fn contrapose(&self) -> Sequent {
        Sequent::new(
            Formula::not(self.conclusion.clone()),
            Formula::not(self.premise.clone()),
        )
    }

    pub fn render(&self) -> String {
        format!("{} |- {}", self.premise.render(), self.conclusion.render())
    }

    pub fn pretty(&self) -> String {
        format!("{} ⊢ {}", self.premise.pretty(), self.conclusion.pretty())
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for Sequent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for Sequent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        super::parse_sequent(&text).map_err(serde::de::Error::custom)
    }
}
