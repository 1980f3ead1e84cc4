use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use super::label::{Item, ValueLabel};
use super::rules::Rule;
use super::table::{FId, FormulaTable};
use super::TableauError;
use crate::syntax::Formula;

pub(crate) type WId = usize;

/// A branch entry in interned form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Raw {
    Label(WId, FId, ValueLabel),
    Rel(WId, WId),
}

/// One tableau branch: labelled formulas and relation atoms in the order
/// they were added, plus the bookkeeping the search needs.
#[derive(Clone, Debug)]
pub struct Branch {
    table: Arc<FormulaTable>,
    names: Vec<String>,
    name_ids: HashMap<String, WId>,
    // labels[w][f] is a bit set of ValueLabel::bit
    labels: Vec<Vec<u8>>,
    succ: Vec<Vec<WId>>,
    order: Vec<Raw>,
    fired: HashSet<(Rule, WId, FId)>,
    fresh: usize,
    clash: Option<(WId, FId, ValueLabel)>,
}

impl Branch {
    pub(crate) fn empty(table: Arc<FormulaTable>) -> Branch {
        Branch {
            table,
            names: Vec::new(),
            name_ids: HashMap::new(),
            labels: Vec::new(),
            succ: Vec::new(),
            order: Vec::new(),
            fired: HashSet::new(),
            fresh: 1,
            clash: None,
        }
    }

    /// Branch holding exactly `items`. The root is the first world
    /// mentioned; an empty list gives a single world `w0`.
    pub fn from_items(items: impl IntoIterator<Item = Item>) -> Result<Branch, TableauError> {
        let items: Vec<Item> = items.into_iter().collect();
        let mut table = FormulaTable::default();
        for item in &items {
            if let Item::Labelled(l) = item {
                table.intern(&l.formula).ok_or_else(|| TableauError::NotTriLanguage(l.formula.render()))?;
            }
        }
        let mut branch = Branch::empty(Arc::new(table));
        for item in &items {
            let raw = branch.intern_item(item)?;
            branch.add(raw);
        }
        if branch.names.is_empty() {
            branch.world("w0");
        }
        Ok(branch)
    }

    fn intern_item(&mut self, item: &Item) -> Result<Raw, TableauError> {
        let check = |name: &str| {
            if name.is_empty() {
                Err(TableauError::InvalidWorld(name.to_owned()))
            } else {
                Ok(())
            }
        };
        Ok(match item {
            Item::Labelled(l) => {
                check(&l.world)?;
                let f = self.table.id(&l.formula).expect("formula was interned");
                Raw::Label(self.world(&l.world), f, l.value)
            }
            Item::Rel(r) => {
                check(&r.source)?;
                check(&r.target)?;
                Raw::Rel(self.world(&r.source), self.world(&r.target))
            }
        })
    }

    pub(crate) fn world(&mut self, name: &str) -> WId {
        if let Some(&id) = self.name_ids.get(name) {
            return id;
        }
        let id = self.names.len();
        self.names.push(name.to_owned());
        self.name_ids.insert(name.to_owned(), id);
        self.labels.push(vec![0; self.table.len()]);
        self.succ.push(Vec::new());
        id
    }

    /// Next unused label `w1`, `w2`, ….
    pub(crate) fn fresh_world(&mut self) -> WId {
        loop {
            let name = format!("w{}", self.fresh);
            self.fresh += 1;
            if !self.name_ids.contains_key(&name) {
                return self.world(&name);
            }
        }
    }

    /// Adds `raw` unless present; returns whether it was new.
    pub(crate) fn add(&mut self, raw: Raw) -> bool {
        match raw {
            Raw::Label(w, f, v) => {
                let mask = &mut self.labels[w][f];
                if *mask & v.bit() != 0 {
                    return false;
                }
                *mask |= v.bit();
                if *mask & v.bar().bit() != 0 && self.clash.is_none() {
                    self.clash = Some((w, f, v));
                }
            }
            Raw::Rel(a, b) => {
                if self.succ[a].contains(&b) {
                    return false;
                }
                self.succ[a].push(b);
            }
        }
        self.order.push(raw);
        true
    }

    pub(crate) fn apply(&mut self, raws: &[Raw]) -> Vec<Raw> {
        raws.iter().copied().filter(|&r| self.add(r)).collect()
    }

    pub(crate) fn contains_raw(&self, raw: Raw) -> bool {
        match raw {
            Raw::Label(w, f, v) => self.has(w, f, v),
            Raw::Rel(a, b) => self.succ[a].contains(&b),
        }
    }

    pub(crate) fn has(&self, w: WId, f: FId, v: ValueLabel) -> bool {
        self.labels[w][f] & v.bit() != 0
    }

    pub(crate) fn mask(&self, w: WId, f: FId) -> u8 {
        self.labels[w][f]
    }

    pub(crate) fn succ(&self, w: WId) -> &[WId] {
        &self.succ[w]
    }

    pub(crate) fn order(&self) -> &[Raw] {
        &self.order
    }

    pub(crate) fn table(&self) -> &FormulaTable {
        &self.table
    }

    pub(crate) fn fired(&self, rule: Rule, w: WId, f: FId) -> bool {
        self.fired.contains(&(rule, w, f))
    }

    pub(crate) fn fire(&mut self, rule: Rule, w: WId, f: FId) {
        self.fired.insert((rule, w, f));
    }

    pub(crate) fn to_item(&self, raw: Raw) -> Item {
        match raw {
            Raw::Label(w, f, v) => Item::labelled(self.names[w].clone(), self.table.formula(f).clone(), v),
            Raw::Rel(a, b) => Item::rel(self.names[a].clone(), self.names[b].clone()),
        }
    }

    pub(crate) fn world_count(&self) -> usize {
        self.names.len()
    }

    /// Entries in the order they were added.
    pub fn items(&self) -> Vec<Item> {
        self.order.iter().map(|&r| self.to_item(r)).collect()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn contains(&self, item: &Item) -> bool {
        match item {
            Item::Labelled(l) => match (self.name_ids.get(&l.world), self.table.id(&l.formula)) {
                (Some(&w), Some(f)) => self.has(w, f, l.value),
                _ => false,
            },
            Item::Rel(r) => match (self.name_ids.get(&r.source), self.name_ids.get(&r.target)) {
                (Some(&a), Some(&b)) => self.succ[a].contains(&b),
                _ => false,
            },
        }
    }

    /// Some `w:φ;v` and `w:φ;v̄` both occur.
    pub fn is_closed(&self) -> bool {
        self.clash.is_some()
    }

    /// The first clashing pair, in the order it arose.
    pub fn clash(&self) -> Option<(Item, Item)> {
        self.clash.map(|(w, f, v)| {
            (self.to_item(Raw::Label(w, f, v.bar())), self.to_item(Raw::Label(w, f, v)))
        })
    }

    /// World labels in order of first occurrence.
    pub fn worlds(&self) -> &[String] {
        &self.names
    }

    pub fn root(&self) -> &str {
        &self.names[0]
    }

    pub fn relations(&self) -> Vec<(String, String)> {
        self.order
            .iter()
            .filter_map(|&r| match r {
                Raw::Rel(a, b) => Some((self.names[a].clone(), self.names[b].clone())),
                Raw::Label(..) => None,
            })
            .collect()
    }

    /// Every formula carrying a label somewhere on the branch.
    pub fn formulas(&self) -> BTreeSet<Formula> {
        self.order
            .iter()
            .filter_map(|&r| match r {
                Raw::Label(_, f, _) => Some(self.table.formula(f).clone()),
                Raw::Rel(..) => None,
            })
            .collect()
    }
}
