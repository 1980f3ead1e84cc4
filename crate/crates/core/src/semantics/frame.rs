use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SemanticsError;

/// A finite Kripke frame with string world identifiers.
///
/// Worlds keep their insertion order; successor lists are sorted by that
/// order and free of duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    worlds: Vec<String>,
    index: HashMap<String, usize>,
    succ: Vec<Vec<usize>>,
}

impl Frame {
    pub fn new<W, E>(worlds: W, edges: E) -> Result<Frame, SemanticsError>
    where
        W: IntoIterator,
        W::Item: Into<String>,
        E: IntoIterator<Item = (String, String)>,
    {
        let worlds: Vec<String> = worlds.into_iter().map(Into::into).collect();
        if worlds.is_empty() {
            return Err(SemanticsError::NoWorlds);
        }
        let mut index = HashMap::with_capacity(worlds.len());
        for (i, w) in worlds.iter().enumerate() {
            if w.is_empty() {
                return Err(SemanticsError::InvalidModel("world identifiers must be nonempty".into()));
            }
            if index.insert(w.clone(), i).is_some() {
                return Err(SemanticsError::DuplicateWorld(w.clone()));
            }
        }
        let mut frame = Frame { succ: vec![Vec::new(); worlds.len()], worlds, index };
        for (a, b) in edges {
            let i = frame.require(&a)?;
            let j = frame.require(&b)?;
            frame.add_edge(i, j);
        }
        Ok(frame)
    }

    /// Frame over `w0 … w{n-1}` with edges given by index pairs.
    pub fn from_indices(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Frame {
        assert!(n > 0, "a frame needs at least one world");
        let worlds: Vec<String> = (0..n).map(|i| format!("w{i}")).collect();
        let index = worlds.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut frame = Frame { succ: vec![Vec::new(); n], worlds, index };
        for (i, j) in edges {
            frame.add_edge(i, j);
        }
        frame
    }

    fn add_edge(&mut self, i: usize, j: usize) {
        let list = &mut self.succ[i];
        if let Err(pos) = list.binary_search(&j) {
            list.insert(pos, j);
        }
    }

    fn require(&self, world: &str) -> Result<usize, SemanticsError> {
        self.world_index(world).ok_or_else(|| SemanticsError::UnknownWorld(world.to_owned()))
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    pub fn worlds(&self) -> &[String] {
        &self.worlds
    }

    pub fn world_name(&self, i: usize) -> &str {
        &self.worlds[i]
    }

    pub fn world_index(&self, world: &str) -> Option<usize> {
        self.index.get(world).copied()
    }

    pub(crate) fn world_index_checked(&self, world: &str) -> Result<usize, SemanticsError> {
        self.require(world)
    }

    /// `R(w)` as world indices.
    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.succ[i].binary_search(&j).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ.iter().enumerate().flat_map(|(i, js)| js.iter().map(move |&j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Same frame without the edge `from → to`.
    pub fn without_edge(&self, from: &str, to: &str) -> Result<Frame, SemanticsError> {
        let (i, j) = (self.require(from)?, self.require(to)?);
        let mut frame = self.clone();
        frame.succ[i].retain(|&k| k != j);
        Ok(frame)
    }

    pub fn has_property(&self, property: FrameProperty) -> bool {
        frame_property(self, property)
    }
}

/// First-order frame conditions checked by direct quantification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FrameProperty {
    Reflexive,
    Transitive,
    Symmetric,
    Euclidean,
    Serial,
    PartialFunctional,
    Coreflexive,
    EmptyRelation,
    Equivalence,
    Preorder,
}

impl FrameProperty {
    pub const ALL: [FrameProperty; 10] = [
        FrameProperty::Reflexive,
        FrameProperty::Transitive,
        FrameProperty::Symmetric,
        FrameProperty::Euclidean,
        FrameProperty::Serial,
        FrameProperty::PartialFunctional,
        FrameProperty::Coreflexive,
        FrameProperty::EmptyRelation,
        FrameProperty::Equivalence,
        FrameProperty::Preorder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrameProperty::Reflexive => "reflexive",
            FrameProperty::Transitive => "transitive",
            FrameProperty::Symmetric => "symmetric",
            FrameProperty::Euclidean => "euclidean",
            FrameProperty::Serial => "serial",
            FrameProperty::PartialFunctional => "partial_functional",
            FrameProperty::Coreflexive => "coreflexive",
            FrameProperty::EmptyRelation => "empty_relation",
            FrameProperty::Equivalence => "equivalence",
            FrameProperty::Preorder => "preorder",
        }
    }
}

impl fmt::Display for FrameProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FrameProperty {
    type Err = String;

    /// Accepts the property names and the frame-class names
    /// `T`, `S4`, `S5`, `F`, `Ver`, `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let property = match s {
            "T" => FrameProperty::Reflexive,
            "S4" => FrameProperty::Preorder,
            "S5" => FrameProperty::Equivalence,
            "F" => FrameProperty::PartialFunctional,
            "Ver" => FrameProperty::EmptyRelation,
            "1" => FrameProperty::Coreflexive,
            other => {
                let normalized = other.to_ascii_lowercase().replace('-', "_");
                FrameProperty::ALL
                    .into_iter()
                    .find(|p| p.name() == normalized)
                    .ok_or_else(|| format!("unknown frame property `{other}`"))?
            }
        };
        Ok(property)
    }
}

pub fn frame_property(frame: &Frame, property: FrameProperty) -> bool {
    let n = frame.len();
    let r = |i: usize, j: usize| frame.has_edge(i, j);
    let worlds = 0..n;
    match property {
        FrameProperty::Reflexive => worlds.into_iter().all(|x| r(x, x)),
        FrameProperty::Transitive => frame
            .edges()
            .all(|(x, y)| frame.successors(y).iter().all(|&z| r(x, z))),
        FrameProperty::Symmetric => frame.edges().all(|(x, y)| r(y, x)),
        FrameProperty::Euclidean => (0..n).all(|x| {
            let s = frame.successors(x);
            s.iter().all(|&y| s.iter().all(|&z| r(y, z)))
        }),
        FrameProperty::Serial => (0..n).all(|x| !frame.successors(x).is_empty()),
        FrameProperty::PartialFunctional => (0..n).all(|x| frame.successors(x).len() <= 1),
        FrameProperty::Coreflexive => frame.edges().all(|(x, y)| x == y),
        FrameProperty::EmptyRelation => frame.edge_count() == 0,
        FrameProperty::Equivalence => {
            frame_property(frame, FrameProperty::Reflexive)
                && frame_property(frame, FrameProperty::Symmetric)
                && frame_property(frame, FrameProperty::Transitive)
        }
        FrameProperty::Preorder => {
            frame_property(frame, FrameProperty::Reflexive)
                && frame_property(frame, FrameProperty::Transitive)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(n: usize, edges: &[(usize, usize)]) -> Frame {
        Frame::from_indices(n, edges.iter().copied())
    }

    #[test]
    fn property_examples() {
        let triangle = frame(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(triangle.has_property(FrameProperty::Transitive));
        assert!(!triangle.has_property(FrameProperty::Euclidean));

        let single_edge = frame(2, &[(0, 1)]);
        assert!(!single_edge.has_property(FrameProperty::Euclidean));
        assert!(single_edge.has_property(FrameProperty::PartialFunctional));

        let dead_end = frame(1, &[]);
        assert!(dead_end.has_property(FrameProperty::PartialFunctional));
        assert!(dead_end.has_property(FrameProperty::EmptyRelation));
        assert!(dead_end.has_property(FrameProperty::Coreflexive));
        assert!(!dead_end.has_property(FrameProperty::Serial));
    }

    #[test]
    fn equivalence_is_reflexive_euclidean() {
        // cross-check of two characterizations on every 3-world frame
        for mask in 0u32..512 {
            let edges: Vec<(usize, usize)> =
                (0..9).filter(|b| mask >> b & 1 == 1).map(|b| (b / 3, b % 3)).collect();
            let f = frame(3, &edges);
            let by_parts = f.has_property(FrameProperty::Reflexive) && f.has_property(FrameProperty::Euclidean);
            assert_eq!(f.has_property(FrameProperty::Equivalence), by_parts, "{edges:?}");
        }
    }

    #[test]
    fn class_names_parse() {
        assert_eq!("S4".parse::<FrameProperty>().unwrap(), FrameProperty::Preorder);
        assert_eq!("Ver".parse::<FrameProperty>().unwrap(), FrameProperty::EmptyRelation);
        assert_eq!("partial-functional".parse::<FrameProperty>().unwrap(), FrameProperty::PartialFunctional);
        assert!("dense".parse::<FrameProperty>().is_err());
    }

    #[test]
    fn rejects_bad_frames() {
        assert_eq!(Frame::new(Vec::<String>::new(), vec![]), Err(SemanticsError::NoWorlds));
        assert_eq!(
            Frame::new(["a", "a"], vec![]),
            Err(SemanticsError::DuplicateWorld("a".into()))
        );
        assert_eq!(
            Frame::new(["a"], vec![("a".into(), "b".into())]),
            Err(SemanticsError::UnknownWorld("b".into()))
        );
    }
}
