//! Pair documents: the JSON interchange format plus the built-in named
//! pairs that can stand in for a file anywhere a pair is expected.

use std::io::Read;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use sandglass::bounds::staircase::{
    reference_rectangle, staircase_16, BoundKind, Rectangle, StaircasePoint,
};
use sandglass::constructions::{
    aharoni_counterexample, canonical_pair, hexad_pair, ConstructError,
};
use sandglass::sets::{GroundSet, RecoveringPair, SetError, SetSystem, SubsetMask};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("bad pair name {spec:?}: {detail}")]
    Builtin { spec: String, detail: String },
    #[error("bad staircase data: {0}")]
    Staircase(String),
}

/// Free-form identification block, carried through unchanged.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

/// One member set: an explicit 1-based element list, or the compact hex
/// form of its mask.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SetRepr {
    Elements(Vec<usize>),
    Hex(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDocument {
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<SetRepr>,
    #[serde(rename = "B")]
    pub b: Vec<SetRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

impl PairDocument {
    pub fn from_pair(pair: &RecoveringPair, name: Option<&str>) -> Self {
        let list = |family: &SetSystem| {
            family
                .members()
                .iter()
                .map(|m| SetRepr::Elements(m.elements()))
                .collect()
        };
        PairDocument {
            n: pair.ground().size(),
            a: list(pair.a_family()),
            b: list(pair.b_family()),
            meta: name.map(|n| Meta {
                name: Some(n.to_string()),
                provenance: Some(format!("sandglass {}", env!("CARGO_PKG_VERSION"))),
            }),
        }
    }

    /// Decodes into an unverified pair; membership and range checks happen
    /// here, the recovering property is the caller's business.
    pub fn to_pair(&self) -> Result<RecoveringPair, DocumentError> {
        let ground = GroundSet::new(self.n)?;
        let family = |sets: &[SetRepr]| -> Result<SetSystem, SetError> {
            let members = sets
                .iter()
                .map(|s| match s {
                    SetRepr::Elements(elements) => SubsetMask::from_elements(ground, elements),
                    SetRepr::Hex(hex) => SubsetMask::from_hex(ground, hex),
                })
                .collect::<Result<Vec<_>, _>>()?;
            SetSystem::new(ground, members)
        };
        Ok(RecoveringPair::new(family(&self.a)?, family(&self.b)?)?)
    }
}

/// Resolves a pair source: a built-in name, `-` for standard input, or a
/// file path.
pub fn load_document(source: &str) -> Result<PairDocument, DocumentError> {
    match source {
        "hexad" => Ok(PairDocument::from_pair(&hexad_pair(), Some("hexad"))),
        "aharoni-counterexample" => Ok(PairDocument::from_pair(
            &aharoni_counterexample(),
            Some("aharoni-counterexample"),
        )),
        "-" => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| DocumentError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            Ok(serde_json::from_str(&text)?)
        }
        _ if source.starts_with("canonical:") => canonical_document(source),
        path => {
            let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
                path: path.into(),
                source,
            })?;
            Ok(serde_json::from_str(&text)?)
        }
    }
}

/// `canonical:<n>` or `canonical:<n>:<e1,e2,...>`; without an explicit
/// core the lower half `1..=n/2` is used.
fn canonical_document(spec: &str) -> Result<PairDocument, DocumentError> {
    let bad = |detail: &str| DocumentError::Builtin {
        spec: spec.to_string(),
        detail: detail.to_string(),
    };
    let rest = &spec["canonical:".len()..];
    let (n_part, core_part) = match rest.split_once(':') {
        Some((n, c)) => (n, Some(c)),
        None => (rest, None),
    };
    let n: usize = n_part
        .parse()
        .map_err(|_| bad("ground size must be an integer"))?;
    let ground = GroundSet::new(n)?;
    let elements: Vec<usize> = match core_part {
        None => (1..=n / 2).collect(),
        Some("") => Vec::new(),
        Some(list) => list
            .split(',')
            .map(|piece| piece.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad("core must be a comma-separated element list"))?,
    };
    let core = SubsetMask::from_elements(ground, &elements)?;
    let pair = canonical_pair(ground, &core)?;
    Ok(PairDocument::from_pair(&pair, Some(spec)))
}

/// Staircase data for `bounds certify`: rational coordinates as
/// `[numerator, denominator]` pairs, with an optional enclosing rectangle.
#[derive(Debug, Serialize, Deserialize)]
pub struct StaircaseDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rectangle: Option<RectangleRepr>,
    pub points: Vec<PointRepr>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RectangleRepr {
    pub u: [[i64; 2]; 2],
    pub t: [[i64; 2]; 2],
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PointRepr {
    pub u: [i64; 2],
    pub t: [i64; 2],
    pub kind: String,
}

fn ratio(pair: [i64; 2]) -> Result<num_rational::Rational64, DocumentError> {
    if pair[1] == 0 {
        return Err(DocumentError::Staircase("zero denominator".into()));
    }
    Ok(num_rational::Rational64::new(pair[0], pair[1]))
}

impl StaircaseDocument {
    pub fn decode(&self) -> Result<(Vec<StaircasePoint>, Rectangle), DocumentError> {
        let rect = match &self.rectangle {
            None => reference_rectangle(),
            Some(repr) => Rectangle::new(
                ratio(repr.u[0])?,
                ratio(repr.u[1])?,
                ratio(repr.t[0])?,
                ratio(repr.t[1])?,
            )
            .map_err(|e| DocumentError::Staircase(e.to_string()))?,
        };
        let points = self
            .points
            .iter()
            .map(|p| {
                let kind = match p.kind.as_str() {
                    "first" => BoundKind::First,
                    "second" => BoundKind::Second,
                    other => {
                        return Err(DocumentError::Staircase(format!(
                            "unknown bound kind {other:?}"
                        )))
                    }
                };
                Ok(StaircasePoint {
                    u: ratio(p.u)?,
                    t: ratio(p.t)?,
                    kind,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((points, rect))
    }
}

/// Resolves a staircase dataset: the built-in name or a file path.
pub fn load_staircase(dataset: &str) -> Result<(Vec<StaircasePoint>, Rectangle), DocumentError> {
    if dataset == "paper-staircase-16" {
        return Ok((staircase_16(), reference_rectangle()));
    }
    let text = std::fs::read_to_string(dataset).map_err(|source| DocumentError::Io {
        path: dataset.into(),
        source,
    })?;
    let doc: StaircaseDocument = serde_json::from_str(&text)?;
    doc.decode()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn built_in_documents_round_trip() {
        for name in ["hexad", "aharoni-counterexample", "canonical:4:1,2"] {
            let doc = load_document(name).unwrap();
            let text = serde_json::to_string(&doc).unwrap();
            let back: PairDocument = serde_json::from_str(&text).unwrap();
            assert_eq!(back, doc);
            assert!(doc.to_pair().is_ok());
        }
    }

    #[test]
    fn hex_and_element_forms_decode_identically() {
        let elements = PairDocument {
            n: 6,
            a: vec![SetRepr::Elements(vec![4, 5, 6])],
            b: vec![SetRepr::Elements(vec![1, 2])],
            meta: None,
        };
        let hex = PairDocument {
            n: 6,
            a: vec![SetRepr::Hex("0x38".into())],
            b: vec![SetRepr::Hex("0x3".into())],
            meta: None,
        };
        let left = elements.to_pair().unwrap();
        let right = hex.to_pair().unwrap();
        assert_eq!(left.a_family().members(), right.a_family().members());
        assert_eq!(left.b_family().members(), right.b_family().members());
    }

    #[test]
    fn canonical_specs() {
        assert_eq!(load_document("canonical:4").unwrap().to_pair().unwrap().pair_size(), 16);
        assert_eq!(load_document("canonical:3:").unwrap().to_pair().unwrap().pair_size(), 8);
        assert!(matches!(
            load_document("canonical:x"),
            Err(DocumentError::Builtin { .. })
        ));
        assert!(matches!(
            load_document("canonical:4:9"),
            Err(DocumentError::Set(_))
        ));
    }

    #[test]
    fn out_of_range_elements_are_rejected() {
        let doc = PairDocument {
            n: 3,
            a: vec![SetRepr::Elements(vec![4])],
            b: vec![SetRepr::Elements(vec![1])],
            meta: None,
        };
        assert!(doc.to_pair().is_err());
    }
}
