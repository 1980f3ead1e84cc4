use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::syntax::Formula;

/// Value labels `t`, `f`, `t̄`, `f̄`: asserted support or non-support of
/// truth and falsity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ValueLabel {
    #[serde(rename = "t")]
    T,
    #[serde(rename = "f")]
    F,
    #[serde(rename = "tbar")]
    NotT,
    #[serde(rename = "fbar")]
    NotF,
}

impl ValueLabel {
    pub const ALL: [ValueLabel; 4] = [ValueLabel::T, ValueLabel::F, ValueLabel::NotT, ValueLabel::NotF];

    /// `t ↔ t̄`, `f ↔ f̄`
    pub const fn bar(self) -> ValueLabel {
        match self {
            ValueLabel::T => ValueLabel::NotT,
            ValueLabel::NotT => ValueLabel::T,
            ValueLabel::F => ValueLabel::NotF,
            ValueLabel::NotF => ValueLabel::F,
        }
    }

    /// `t ↔ f`, `t̄ ↔ f̄`
    pub const fn neg(self) -> ValueLabel {
        match self {
            ValueLabel::T => ValueLabel::F,
            ValueLabel::F => ValueLabel::T,
            ValueLabel::NotT => ValueLabel::NotF,
            ValueLabel::NotF => ValueLabel::NotT,
        }
    }

    /// Whether the label asserts support (`t`, `f`) rather than its absence.
    pub const fn is_positive(self) -> bool {
        matches!(self, ValueLabel::T | ValueLabel::F)
    }

    /// Whether the label is about truth (`t`, `t̄`) rather than falsity.
    pub const fn is_truth(self) -> bool {
        matches!(self, ValueLabel::T | ValueLabel::NotT)
    }

    pub(crate) const fn bit(self) -> u8 {
        match self {
            ValueLabel::T => 1,
            ValueLabel::F => 2,
            ValueLabel::NotT => 4,
            ValueLabel::NotF => 8,
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            ValueLabel::T => "t",
            ValueLabel::F => "f",
            ValueLabel::NotT => "-t",
            ValueLabel::NotF => "-f",
        }
    }

    pub fn glyph(self) -> &'static str {
        match self {
            ValueLabel::T => "t",
            ValueLabel::F => "f",
            ValueLabel::NotT => "t\u{304}",
            ValueLabel::NotF => "f\u{304}",
        }
    }
}

impl fmt::Display for ValueLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ascii())
    }
}

impl FromStr for ValueLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "t" => Ok(ValueLabel::T),
            "f" => Ok(ValueLabel::F),
            "-t" | "tbar" | "t\u{304}" => Ok(ValueLabel::NotT),
            "-f" | "fbar" | "f\u{304}" => Ok(ValueLabel::NotF),
            other => Err(format!("unknown value label `{other}`")),
        }
    }
}

/// `w : φ ; v`
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabelledFormula {
    pub world: String,
    pub formula: Formula,
    pub value: ValueLabel,
}

impl LabelledFormula {
    pub fn new(world: impl Into<String>, formula: Formula, value: ValueLabel) -> LabelledFormula {
        LabelledFormula { world: world.into(), formula, value }
    }
}

/// `w R w′`
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RelAtom {
    pub source: String,
    pub target: String,
}

/// One entry of a branch.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Item {
    Labelled(LabelledFormula),
    Rel(RelAtom),
}

impl Item {
    pub fn labelled(world: impl Into<String>, formula: Formula, value: ValueLabel) -> Item {
        Item::Labelled(LabelledFormula::new(world, formula, value))
    }

    pub fn rel(source: impl Into<String>, target: impl Into<String>) -> Item {
        Item::Rel(RelAtom { source: source.into(), target: target.into() })
    }

    pub fn render(&self, unicode: bool) -> String {
        match self {
            Item::Labelled(l) if unicode => {
                format!("{}: {}; {}", l.world, l.formula.pretty(), l.value.glyph())
            }
            Item::Labelled(l) => format!("{}: {}; {}", l.world, l.formula.render(), l.value.ascii()),
            Item::Rel(r) => format!("{} R {}", r.source, r.target),
        }
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}
