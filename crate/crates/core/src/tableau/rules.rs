use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::branch::{Branch, Raw, WId};
use super::label::ValueLabel::{self, F, NotF, NotT, T};
use super::table::{FId, Shape};

/// Rule names as they appear in proof trees. `Root` marks the initial items.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Root,
    NotT,
    NotF,
    NotTBar,
    NotFBar,
    AndT,
    AndF,
    AndTBar,
    AndFBar,
    OrT,
    OrF,
    OrTBar,
    OrFBar,
    Cut,
    TriT,
    TriTPrime,
    TriF,
    TriB,
    TriBPlus,
    TriN,
    TriNPlus,
}

const NAMES: [(Rule, &str, &str); 21] = [
    (Rule::Root, "root", "root"),
    (Rule::NotT, "~t", "¬t"),
    (Rule::NotF, "~f", "¬f"),
    (Rule::NotTBar, "~-t", "¬t\u{304}"),
    (Rule::NotFBar, "~-f", "¬f\u{304}"),
    (Rule::AndT, "&t", "∧t"),
    (Rule::AndF, "&f", "∧f"),
    (Rule::AndTBar, "&-t", "∧t\u{304}"),
    (Rule::AndFBar, "&-f", "∧f\u{304}"),
    (Rule::OrT, "|t", "∨t"),
    (Rule::OrF, "|f", "∨f"),
    (Rule::OrTBar, "|-t", "∨t\u{304}"),
    (Rule::OrFBar, "|-f", "∨f\u{304}"),
    (Rule::Cut, "cut", "vv\u{304}"),
    (Rule::TriT, "#T", "▲T"),
    (Rule::TriTPrime, "#'T", "▲′T"),
    (Rule::TriF, "#F", "▲F"),
    (Rule::TriB, "#B", "▲B"),
    (Rule::TriBPlus, "#B+", "▲B⁺"),
    (Rule::TriN, "#N", "▲N"),
    (Rule::TriNPlus, "#N+", "▲N⁺"),
];

impl Rule {
    pub fn name(self) -> &'static str {
        NAMES[self as usize].1
    }

    pub fn glyph(self) -> &'static str {
        NAMES[self as usize].2
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NAMES
            .iter()
            .find(|(_, ascii, glyph)| *ascii == s || *glyph == s)
            .map(|(rule, ..)| *rule)
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Rule {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Result of one saturation step on a branch.
pub(crate) enum Step {
    /// The branch was extended in place by `added`.
    Extend { rule: Rule, added: Vec<Raw> },
    /// `shared` was added in place; the branch now forks into `left` and
    /// `right`, which are not yet applied.
    Split { rule: Rule, shared: Vec<Raw>, left: Vec<Raw>, right: Vec<Raw> },
}

const TRUTH: u8 = T.bit() | NotT.bit();
const FALSITY: u8 = F.bit() | NotF.bit();

fn label(w: WId, f: FId, v: ValueLabel) -> Raw {
    Raw::Label(w, f, v)
}

/// Applies the highest-priority applicable rule instance, or returns `None`
/// if the branch is closed or complete.
///
/// Priority: propositional rules, modal propagation (`▲T`, `▲′T`, `▲B`,
/// `▲N`), cuts, then world creation (`▲B⁺`, `▲N⁺`, `▲F`). Within a tier,
/// entries are scanned in the order they were added.
pub(crate) fn step(b: &mut Branch) -> Option<Step> {
    if b.is_closed() {
        return None;
    }
    if let Some((rule, items)) = propositional(b).or_else(|| propagation(b)) {
        let added = b.apply(&items);
        debug_assert!(!added.is_empty());
        return Some(Step::Extend { rule, added });
    }
    if let Some(raw) = cut(b) {
        let Raw::Label(w, f, v) = raw else { unreachable!() };
        return Some(Step::Split { rule: Rule::Cut, shared: vec![], left: vec![raw], right: vec![label(w, f, v.bar())] });
    }
    creation(b)
}

fn missing(b: &Branch, candidates: impl IntoIterator<Item = Raw>) -> Vec<Raw> {
    let mut out: Vec<Raw> = Vec::new();
    for c in candidates {
        if !b.contains_raw(c) && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn propositional(b: &Branch) -> Option<(Rule, Vec<Raw>)> {
    for &raw in b.order() {
        let Raw::Label(w, f, v) = raw else { continue };
        let has = |g: FId, u: ValueLabel| b.has(w, g, u);
        let (rule, candidates): (Rule, Vec<Raw>) = match (b.table().shape(f), v) {
            (Shape::Atom | Shape::Tri(_), _) => continue,
            (Shape::Not(a), _) => {
                let rule = match v {
                    T => Rule::NotT,
                    F => Rule::NotF,
                    NotT => Rule::NotTBar,
                    NotF => Rule::NotFBar,
                };
                (rule, vec![label(w, a, v.neg())])
            }
            (Shape::And(a, c), T) => (Rule::AndT, vec![label(w, a, T), label(w, c, T)]),
            (Shape::And(a, c), NotF) => (Rule::AndFBar, vec![label(w, a, NotF), label(w, c, NotF)]),
            (Shape::Or(a, c), F) => (Rule::OrF, vec![label(w, a, F), label(w, c, F)]),
            (Shape::Or(a, c), NotT) => (Rule::OrTBar, vec![label(w, a, NotT), label(w, c, NotT)]),
            // two-premise rules: the minor premise on one side yields the other
            (Shape::And(a, c), F) => (Rule::AndF, minor(a, c, NotF, F, w, &has)),
            (Shape::And(a, c), NotT) => (Rule::AndTBar, minor(a, c, T, NotT, w, &has)),
            (Shape::Or(a, c), T) => (Rule::OrT, minor(a, c, NotT, T, w, &has)),
            (Shape::Or(a, c), NotF) => (Rule::OrFBar, minor(a, c, F, NotF, w, &has)),
        };
        let new = missing(b, candidates);
        if !new.is_empty() {
            return Some((rule, new));
        }
    }
    None
}

fn minor(a: FId, c: FId, premise: ValueLabel, conclusion: ValueLabel, w: WId, has: &impl Fn(FId, ValueLabel) -> bool) -> Vec<Raw> {
    let mut out = Vec::new();
    if has(a, premise) {
        out.push(label(w, c, conclusion));
    }
    if has(c, premise) {
        out.push(label(w, a, conclusion));
    }
    out
}

fn both(mask: u8, u: ValueLabel, v: ValueLabel) -> bool {
    mask & u.bit() != 0 && mask & v.bit() != 0
}

/// Labelled `▲`-formulas in branch order: (world, `▲φ`, `φ`).
fn tri_entries(b: &Branch) -> impl Iterator<Item = (WId, FId, FId)> + '_ {
    b.order().iter().filter_map(|&raw| match raw {
        Raw::Label(w, f, _) => match b.table().shape(f) {
            Shape::Tri(a) => Some((w, f, a)),
            _ => None,
        },
        Raw::Rel(..) => None,
    })
}

fn propagation(b: &Branch) -> Option<(Rule, Vec<Raw>)> {
    for (w, f, a) in tri_entries(b) {
        let m = b.mask(w, f);
        let succ = b.succ(w);
        if both(m, T, NotF) {
            for &j in succ {
                for v in ValueLabel::ALL {
                    if b.has(j, a, v) {
                        let new = missing(b, [label(j, a, v.bar().neg())]);
                        if !new.is_empty() {
                            return Some((Rule::TriT, new));
                        }
                    }
                }
            }
            for &j1 in succ {
                for (u, v) in [(T, NotF), (F, NotT)] {
                    if !both(b.mask(j1, a), u, v) {
                        continue;
                    }
                    for &j2 in succ.iter().filter(|&&j2| j2 != j1) {
                        let new = missing(b, [label(j2, a, u), label(j2, a, v)]);
                        if !new.is_empty() {
                            return Some((Rule::TriTPrime, new));
                        }
                    }
                }
            }
        }
        for (u, v, rule) in [(T, F, Rule::TriB), (NotT, NotF, Rule::TriN)] {
            if both(m, u, v) {
                for &j in succ {
                    let new = missing(b, [label(j, a, u), label(j, a, v)]);
                    if !new.is_empty() {
                        return Some((rule, new));
                    }
                }
            }
        }
    }
    None
}

/// Next analytic cut, as its left (positive) alternative.
///
/// Cuts are made only where a realising model needs a decision:
/// both dimensions of every labelled `▲φ`; `φ` at each successor of a
/// world with `▲φ;t;f̄`; and the left conjunct or disjunct when a
/// two-premise rule has no minor premise on either side.
fn cut(b: &Branch) -> Option<Raw> {
    for &raw in b.order() {
        let Raw::Label(w, f, v) = raw else { continue };
        let undecided = |g: FId, dim: u8| b.mask(w, g) & dim == 0;
        match (b.table().shape(f), v) {
            (Shape::Tri(a), _) => {
                if undecided(f, TRUTH) {
                    return Some(label(w, f, T));
                }
                if undecided(f, FALSITY) {
                    return Some(label(w, f, F));
                }
                if both(b.mask(w, f), T, NotF) {
                    if let Some(&j) = b.succ(w).iter().find(|&&j| b.mask(j, a) == 0) {
                        return Some(label(j, a, T));
                    }
                }
            }
            (Shape::And(a, c), F) | (Shape::Or(a, c), NotF) if undecided(a, FALSITY) && undecided(c, FALSITY) => {
                return Some(label(w, a, F));
            }
            (Shape::And(a, c), NotT) | (Shape::Or(a, c), T) if undecided(a, TRUTH) && undecided(c, TRUTH) => {
                return Some(label(w, a, T));
            }
            _ => {}
        }
    }
    None
}

/// World-creating rules. Each fires at most once per (world, `▲φ`) and is
/// skipped when existing successors already witness its conclusion.
fn creation(b: &mut Branch) -> Option<Step> {
    let entries: Vec<(WId, FId, FId)> = tri_entries(b).collect();
    for (w, f, a) in entries {
        let m = b.mask(w, f);
        for (u, v, rule) in [(T, F, Rule::TriBPlus), (NotT, NotF, Rule::TriNPlus)] {
            if both(m, u, v) && !b.fired(rule, w, f) && !b.succ(w).iter().any(|&j| both(b.mask(j, a), u, v)) {
                b.fire(rule, w, f);
                let k = b.fresh_world();
                let added = b.apply(&[Raw::Rel(w, k), label(k, a, u), label(k, a, v)]);
                return Some(Step::Extend { rule, added });
            }
        }
        if both(m, NotT, F) && !b.fired(Rule::TriF, w, f) && !falsity_witness(b, w, a) {
            b.fire(Rule::TriF, w, f);
            let k1 = b.fresh_world();
            let k2 = b.fresh_world();
            let shared = b.apply(&[Raw::Rel(w, k1), Raw::Rel(w, k2)]);
            return Some(Step::Split {
                rule: Rule::TriF,
                shared,
                left: vec![label(k1, a, T), label(k2, a, NotT)],
                right: vec![label(k1, a, F), label(k2, a, NotF)],
            });
        }
    }
    None
}

/// Two successors already disagree on truth or on falsity of `φ`.
fn falsity_witness(b: &Branch, w: WId, a: FId) -> bool {
    let succ = b.succ(w);
    [(T, NotT), (F, NotF)]
        .into_iter()
        .any(|(u, v)| succ.iter().any(|&j| b.has(j, a, u)) && succ.iter().any(|&j| b.has(j, a, v)))
}

/// One saturation step: the extended branch, the two alternatives of a
/// branching rule, or nothing if `b` is closed or complete.
pub fn saturation_step(b: &Branch) -> Vec<Branch> {
    let mut next = b.clone();
    match step(&mut next) {
        None => vec![],
        Some(Step::Extend { .. }) => vec![next],
        Some(Step::Split { left, right, .. }) => {
            let mut l = next.clone();
            l.apply(&left);
            let mut r = next;
            r.apply(&right);
            vec![l, r]
        }
    }
}

/// Open and no rule applies.
pub fn is_complete(b: &Branch) -> bool {
    !b.is_closed() && step(&mut b.clone()).is_none()
}
