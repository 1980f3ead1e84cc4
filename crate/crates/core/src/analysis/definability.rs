use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::enumerate::enumerate_frames;
use super::AnalysisError;
use crate::semantics::{
    formula_countermodel_on_frame, frame_property, sequent_countermodel_on_frame, Frame, FrameProperty, Limits,
    ModelFile, PointedModel, SemanticsError,
};
use crate::syntax::{parse_formula, parse_sequent, Formula, Sequent, SyntaxError};

/// Something that can be valid on a frame: a sequent, or a formula true
/// at every world of every model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Validity {
    Sequent(Sequent),
    Formula(Formula),
}

impl Validity {
    /// A line with `|-` (or `⊢`) is a sequent, anything else a formula.
    pub fn parse(text: &str) -> Result<Validity, SyntaxError> {
        if text.contains("|-") || text.contains('⊢') {
            parse_sequent(text).map(Validity::Sequent)
        } else {
            parse_formula(text).map(Validity::Formula)
        }
    }

    pub fn countermodel_on(&self, frame: &Frame, limits: Limits) -> Result<Option<PointedModel>, SemanticsError> {
        match self {
            Validity::Sequent(s) => sequent_countermodel_on_frame(frame, s, limits),
            Validity::Formula(f) => formula_countermodel_on_frame(frame, f, limits),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Validity::Sequent(s) => s.render(),
            Validity::Formula(f) => f.render(),
        }
    }
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// One sequent or formula per line. Blank lines and lines starting with
/// `//` are skipped.
pub fn parse_validity_set(text: &str) -> Result<Vec<Validity>, SyntaxError> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with("//"))
        .map(Validity::parse)
        .collect()
}

/// Names accepted by [`frame_class`].
pub const FRAME_CLASSES: [&str; 6] = ["T", "S4", "S5", "F", "Ver", "1"];

/// A named frame class with its defining property and validity set.
pub fn frame_class(name: &str) -> Option<(FrameProperty, Vec<Validity>)> {
    let (property, lines): (FrameProperty, &[&str]) = match name {
        "T" => (FrameProperty::Reflexive, &["#(p | ~p) |- p | ~p"]),
        "S4" => (FrameProperty::Preorder, &["#p |- ##p", "#(p | ~p) |- p | ~p"]),
        "S5" => (FrameProperty::Equivalence, &["@p |- ##p", "#(p | ~p) |- p | ~p"]),
        "F" => (FrameProperty::PartialFunctional, &["@p |- #p"]),
        "Ver" => (FrameProperty::EmptyRelation, &["#p"]),
        "1" => (FrameProperty::Coreflexive, &["p | ~p |- #p"]),
        _ => return None,
    };
    let set = lines.iter().map(|l| Validity::parse(l).expect("class sets parse")).collect();
    Some((property, set))
}

/// A frame where the property and joint validity disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "direction", rename_all = "snake_case")]
pub enum Disagreement {
    /// The frame has the property but `failing` is not valid on it.
    PropertyWithoutValidity {
        #[serde(serialize_with = "frame_file")]
        frame: Frame,
        failing: Validity,
        countermodel: PointedModel,
    },
    /// Every member of the set is valid on the frame, which lacks the
    /// property.
    ValidityWithoutProperty {
        #[serde(serialize_with = "frame_file")]
        frame: Frame,
    },
}

impl Disagreement {
    pub fn frame(&self) -> &Frame {
        match self {
            Disagreement::PropertyWithoutValidity { frame, .. } | Disagreement::ValidityWithoutProperty { frame } => {
                frame
            }
        }
    }
}

fn frame_file<S: Serializer>(frame: &Frame, s: S) -> Result<S::Ok, S::Error> {
    ModelFile::from_frame(frame).serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum DefinabilityVerdict {
    Defines,
    Refuted { witness: Disagreement },
}

#[derive(Clone, Debug, Serialize)]
pub struct DefinabilityReport {
    pub property: FrameProperty,
    pub set: Vec<Validity>,
    /// Frames with `1 ..= max_size` worlds were checked.
    pub max_size: usize,
    pub frames_checked: usize,
    pub frames_with_property: usize,
    pub frames_validating: usize,
    pub verdict: DefinabilityVerdict,
    pub elapsed_secs: f64,
}

impl DefinabilityReport {
    pub fn defines(&self) -> bool {
        self.verdict == DefinabilityVerdict::Defines
    }
}

impl fmt::Display for DefinabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set: Vec<String> = self.set.iter().map(Validity::render).collect();
        writeln!(f, "property: {}", self.property)?;
        writeln!(f, "set: {{{}}}", set.join(", "))?;
        writeln!(
            f,
            "frames: {} with at most {} worlds ({} with the property, {} validating the set)",
            self.frames_checked, self.max_size, self.frames_with_property, self.frames_validating
        )?;
        match &self.verdict {
            DefinabilityVerdict::Defines => write!(f, "DEFINES (up to {} worlds)", self.max_size),
            DefinabilityVerdict::Refuted { witness } => {
                let frame = witness.frame();
                let edges: Vec<String> = frame
                    .edges()
                    .map(|(i, j)| format!("{}->{}", frame.world_name(i), frame.world_name(j)))
                    .collect();
                writeln!(f, "REFUTED")?;
                write!(f, "witness frame: {} worlds, edges [{}]", frame.len(), edges.join(", "))?;
                match witness {
                    Disagreement::PropertyWithoutValidity { failing, countermodel, .. } => write!(
                        f,
                        "\n{} holds but `{}` fails at {}",
                        self.property, failing, countermodel.world
                    ),
                    Disagreement::ValidityWithoutProperty { .. } => {
                        write!(f, "\nthe set is valid but the frame is not {}", self.property)
                    }
                }
            }
        }
    }
}

/// Compares `property` with joint validity of `set` on every frame with
/// at most `max_size` worlds. The witness, if any, is the first
/// disagreeing frame in enumeration order.
pub fn check_definability(
    property: FrameProperty,
    set: &[Validity],
    max_size: usize,
) -> Result<DefinabilityReport, AnalysisError> {
    if set.is_empty() {
        return Err(AnalysisError::InvalidInput("the sequent set is empty".into()));
    }
    if max_size == 0 {
        return Err(AnalysisError::InvalidInput("max size must be at least 1".into()));
    }
    let start = Instant::now();
    let limits = Limits::default();
    let mut frames = Vec::new();
    for n in 1..=max_size {
        frames.extend(enumerate_frames(n)?);
    }
    let rows = frames
        .par_iter()
        .map(|fr| -> Result<_, SemanticsError> {
            let has = frame_property(fr, property);
            for v in set {
                if let Some(m) = v.countermodel_on(fr, limits)? {
                    return Ok((has, Some((v.clone(), m))));
                }
            }
            Ok((has, None))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let frames_with_property = rows.iter().filter(|(has, _)| *has).count();
    let frames_validating = rows.iter().filter(|(_, fail)| fail.is_none()).count();
    let witness = frames.iter().zip(rows).find_map(|(frame, (has, fail))| match (has, fail) {
        (true, Some((failing, countermodel))) => {
            Some(Disagreement::PropertyWithoutValidity { frame: frame.clone(), failing, countermodel })
        }
        (false, None) => Some(Disagreement::ValidityWithoutProperty { frame: frame.clone() }),
        _ => None,
    });
    Ok(DefinabilityReport {
        property,
        set: set.to_vec(),
        max_size,
        frames_checked: frames.len(),
        frames_with_property,
        frames_validating,
        verdict: match witness {
            None => DefinabilityVerdict::Defines,
            Some(witness) => DefinabilityVerdict::Refuted { witness },
        },
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}
