use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{Frame, FourValue, SemanticsError};
use crate::syntax::is_variable_name;

/// A frame with a four-valued valuation. A variable that was never set at a
/// world has value `N` there.
#[derive(Clone, Debug)]
pub struct Model {
    frame: Frame,
    // variable -> value per world index
    valuation: BTreeMap<String, Vec<FourValue>>,
}

impl PartialEq for Model {
    fn eq(&self, other: &Self) -> bool {
        if self.frame != other.frame {
            return false;
        }
        let vars: BTreeSet<&String> = self.valuation.keys().chain(other.valuation.keys()).collect();
        vars.into_iter().all(|v| {
            (0..self.frame.len()).all(|w| self.value_at(w, v) == other.value_at(w, v))
        })
    }
}

impl Eq for Model {}

impl Model {
    /// Model on `frame` with every variable `N` everywhere.
    pub fn new(frame: Frame) -> Model {
        Model { frame, valuation: BTreeMap::new() }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn set(&mut self, world: &str, var: &str, value: FourValue) -> Result<(), SemanticsError> {
        let w = self.frame.world_index_checked(world)?;
        if !is_variable_name(var) {
            return Err(SemanticsError::InvalidVariable(var.to_owned()));
        }
        self.set_at(w, var, value);
        Ok(())
    }

    pub(crate) fn set_at(&mut self, w: usize, var: &str, value: FourValue) {
        let n = self.frame.len();
        self.valuation.entry(var.to_owned()).or_insert_with(|| vec![FourValue::N; n])[w] = value;
    }

    /// Builder-style [`Model::set`]; panics on unknown worlds.
    pub fn with(mut self, world: &str, var: &str, value: FourValue) -> Model {
        self.set(world, var, value).expect("valid world and variable");
        self
    }

    pub fn value(&self, world: &str, var: &str) -> Result<FourValue, SemanticsError> {
        let w = self.frame.world_index_checked(world)?;
        Ok(self.value_at(w, var))
    }

    pub fn value_at(&self, w: usize, var: &str) -> FourValue {
        self.valuation.get(var).map_or(FourValue::N, |vals| vals[w])
    }

    /// Variables mentioned by the valuation (possibly `N` everywhere).
    pub fn variables(&self) -> BTreeSet<String> {
        self.valuation.keys().cloned().collect()
    }

    /// `{p | w ∈ v⁺(p)}`
    pub fn vplus(&self, world: &str) -> Result<BTreeSet<String>, SemanticsError> {
        let w = self.frame.world_index_checked(world)?;
        Ok(self.supported(w, FourValue::supports_truth))
    }

    /// `{p | w ∈ v⁻(p)}`
    pub fn vminus(&self, world: &str) -> Result<BTreeSet<String>, SemanticsError> {
        let w = self.frame.world_index_checked(world)?;
        Ok(self.supported(w, FourValue::supports_falsity))
    }

    fn supported(&self, w: usize, pick: fn(FourValue) -> bool) -> BTreeSet<String> {
        self.valuation
            .iter()
            .filter(|(_, vals)| pick(vals[w]))
            .map(|(var, _)| var.clone())
            .collect()
    }

    /// Applies `f` to every stored value.
    pub(crate) fn map_values(&self, f: impl Fn(FourValue) -> FourValue) -> Model {
        let valuation = self
            .valuation
            .iter()
            .map(|(var, vals)| (var.clone(), vals.iter().map(|&v| f(v)).collect()))
            .collect();
        Model { frame: self.frame.clone(), valuation }
    }

    /// Same valuation restricted to a frame with the same worlds.
    pub fn with_frame(&self, frame: Frame) -> Result<Model, SemanticsError> {
        if frame.worlds() != self.frame.worlds() {
            return Err(SemanticsError::InvalidModel("replacement frame has different worlds".into()));
        }
        Ok(Model { frame, valuation: self.valuation.clone() })
    }

    pub fn to_file(&self) -> ModelFile {
        let worlds = self.frame.worlds().to_vec();
        let rel = self
            .frame
            .edges()
            .map(|(i, j)| (worlds[i].clone(), worlds[j].clone()))
            .collect();
        let val = worlds
            .iter()
            .enumerate()
            .map(|(w, name)| {
                let vals = self.valuation.iter().map(|(var, vals)| (var.clone(), vals[w])).collect();
                (name.clone(), vals)
            })
            .collect();
        ModelFile { worlds, rel, val, designated: None }
    }

    pub fn from_file(file: &ModelFile) -> Result<Model, SemanticsError> {
        let frame = file.frame()?;
        let mut model = Model::new(frame);
        for (world, vals) in &file.val {
            for (var, &value) in vals {
                model.set(world, var, value)?;
            }
        }
        Ok(model)
    }

    pub fn from_json(text: &str) -> Result<Model, SemanticsError> {
        Model::from_file(&ModelFile::from_json(text)?)
    }

    pub fn to_json(&self) -> String {
        self.to_file().to_json()
    }
}

/// A model with a designated world.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedModel {
    pub model: Model,
    pub world: String,
}

impl PointedModel {
    pub fn new(model: Model, world: impl Into<String>) -> Result<PointedModel, SemanticsError> {
        let world = world.into();
        model.frame().world_index_checked(&world)?;
        Ok(PointedModel { model, world })
    }

    pub fn to_file(&self) -> ModelFile {
        ModelFile { designated: Some(self.world.clone()), ..self.model.to_file() }
    }

    pub fn to_json(&self) -> String {
        self.to_file().to_json()
    }

    /// Requires a `"designated"` field unless `default_world` is given.
    pub fn from_file(file: &ModelFile, default_world: Option<&str>) -> Result<PointedModel, SemanticsError> {
        let model = Model::from_file(file)?;
        let world = file
            .designated
            .as_deref()
            .or(default_world)
            .ok_or_else(|| SemanticsError::InvalidModel("missing \"designated\" world".into()))?;
        PointedModel::new(model, world)
    }
}

impl Serialize for Model {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_file().serialize(serializer)
    }
}

impl Serialize for PointedModel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_file().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Model {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = ModelFile::deserialize(deserializer)?;
        Model::from_file(&file).map_err(serde::de::Error::custom)
    }
}

/// On-disk JSON layout shared by models, frames and countermodels:
///
/// ```json
/// {"worlds": ["w0","w1"], "rel": [["w0","w1"]],
///  "val": {"w0": {"p": "T"}, "w1": {"p": "B"}}, "designated": "w0"}
/// ```
///
/// `val` and `designated` are optional; omitted variables are `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub worlds: Vec<String>,
    #[serde(default)]
    pub rel: Vec<(String, String)>,
    #[serde(default)]
    pub val: BTreeMap<String, BTreeMap<String, FourValue>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub designated: Option<String>,
}

impl ModelFile {
    pub fn from_json(text: &str) -> Result<ModelFile, SemanticsError> {
        serde_json::from_str(text).map_err(|e| SemanticsError::InvalidModel(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model files always serialize")
    }

    /// The frame part; `val` is ignored.
    pub fn frame(&self) -> Result<Frame, SemanticsError> {
        Frame::new(self.worlds.iter().cloned(), self.rel.iter().cloned())
    }

    pub fn from_frame(frame: &Frame) -> ModelFile {
        Model::new(frame.clone()).to_file()
    }
}
