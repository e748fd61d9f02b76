//! JSON forms: `{"kind":"d2","cut":"1","inclusive":true,"M":[0,1]}` and
//! `{"segment":{"cut":"1","inclusive":true},"level":[0,1]}`.

use serde::{Deserialize, Serialize};

use super::{Char2Module, F4Submodule, FinalSegment};
use crate::char2_hahn::{Dyadic, F4};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SegmentRepr {
    cut: Option<Dyadic>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inclusive: Option<bool>,
}

impl From<&FinalSegment> for SegmentRepr {
    fn from(s: &FinalSegment) -> SegmentRepr {
        match s {
            FinalSegment::Empty => SegmentRepr { cut: None, inclusive: None },
            FinalSegment::From { cut, inclusive } => {
                SegmentRepr { cut: Some(cut.clone()), inclusive: Some(*inclusive) }
            }
        }
    }
}

impl TryFrom<SegmentRepr> for FinalSegment {
    type Error = Error;
    fn try_from(r: SegmentRepr) -> Result<FinalSegment> {
        match (r.cut, r.inclusive) {
            (None, None) => Ok(FinalSegment::Empty),
            (None, Some(_)) => Err(Error::InvalidSegment("an empty segment takes no `inclusive` flag".into())),
            (Some(_), None) => Err(Error::InvalidSegment("a cut needs an `inclusive` flag".into())),
            (Some(cut), Some(inclusive)) => Ok(FinalSegment::From { cut, inclusive }),
        }
    }
}

impl Serialize for FinalSegment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SegmentRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinalSegment {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FinalSegment::try_from(SegmentRepr::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl Serialize for F4Submodule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elems().serialize(s)
    }
}

impl<'de> Deserialize<'de> for F4Submodule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let elems = Vec::<F4>::deserialize(d)?;
        F4Submodule::from_elems(&elems).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleRepr {
    kind: String,
    cut: Option<Dyadic>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inclusive: Option<bool>,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    level: Option<F4Submodule>,
}

impl Char2Module {
    fn to_repr(&self) -> ModuleRepr {
        match self {
            Char2Module::D1(s) => {
                let r = SegmentRepr::from(s);
                ModuleRepr { kind: "d1".into(), cut: r.cut, inclusive: r.inclusive, level: None }
            }
            Char2Module::D2(d) => {
                ModuleRepr { kind: "d2".into(), cut: Some(d.cut.clone()), inclusive: Some(true), level: Some(d.level) }
            }
        }
    }

    fn from_repr(r: ModuleRepr) -> Result<Char2Module> {
        match r.kind.as_str() {
            "d1" if r.level.is_some() => Err(Error::InvalidSubmodule("d1 takes no `M`".into())),
            "d1" => Ok(Char2Module::D1(SegmentRepr { cut: r.cut, inclusive: r.inclusive }.try_into()?)),
            "d2" => {
                let (Some(cut), Some(level)) = (r.cut, r.level) else {
                    return Err(Error::InvalidSegment("d2 needs `cut` and `M`".into()));
                };
                if r.inclusive == Some(false) {
                    return Err(Error::InvalidSegment("d2 needs a segment with a minimum".into()));
                }
                Char2Module::d2(cut, level)
            }
            k => Err(Error::InvalidSegment(format!("unknown module kind `{k}`"))),
        }
    }

    /// Parses the JSON form, keeping the domain error on invalid data.
    pub fn parse_json(text: &str) -> Result<Char2Module> {
        let r: ModuleRepr = serde_json::from_str(text)?;
        Char2Module::from_repr(r)
    }
}

impl Serialize for Char2Module {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Char2Module {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Char2Module::from_repr(ModuleRepr::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// The data `Φ` attaches to a module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Classifier {
    pub segment: FinalSegment,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<F4Submodule>,
}

impl Classifier {
    pub fn parse_json(text: &str) -> Result<Classifier> {
        Ok(serde_json::from_str(text)?)
    }
}
