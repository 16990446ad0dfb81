use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{AffineIsometry, IsometryGroup, Matrix2};
use crate::lattice::{ModelTag, Point};
use crate::{Error, Result};

/// Where a model's group comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupSource {
    /// The matrices as published for the model.
    #[serde(rename = "paper")]
    Published,
    /// Found by exhaustive search.
    #[serde(rename = "search")]
    Search,
    /// Supplied by the caller.
    #[serde(rename = "custom")]
    Custom,
}

impl GroupSource {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupSource::Published => "paper",
            GroupSource::Search => "search",
            GroupSource::Custom => "custom",
        }
    }
}

impl fmt::Display for GroupSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(GroupSource::Published),
            "search" => Ok(GroupSource::Search),
            "custom" => Ok(GroupSource::Custom),
            _ => Err(Error::Parse {
                what: "group source",
                input: s.to_string(),
                reason: "expected paper, search or custom".into(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelledElement {
    pub label: &'static str,
    #[serde(serialize_with = "serialize_display")]
    pub element: AffineIsometry,
}

fn serialize_display<S: serde::Serializer>(
    g: &AffineIsometry,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&g.to_string())
}

/// A model's published element list with its labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublishedGroup {
    pub model: ModelTag,
    pub elements: Vec<LabelledElement>,
    pub generators: Vec<&'static str>,
    /// Rotation angles listed alongside the matrices, as `(label, multiple of π)`.
    pub listed_rotation_angles: Vec<(&'static str, Ratio<i64>)>,
}

impl PublishedGroup {
    pub fn get(&self, label: &str) -> Option<AffineIsometry> {
        self.elements
            .iter()
            .find(|e| e.label == label)
            .map(|e| e.element)
    }

    pub fn element(&self, label: &str) -> AffineIsometry {
        self.get(label)
            .unwrap_or_else(|| panic!("no element labelled {label}"))
    }

    pub fn generator_elements(&self) -> Vec<AffineIsometry> {
        self.generators.iter().map(|l| self.element(l)).collect()
    }

    pub fn group(&self) -> IsometryGroup {
        IsometryGroup::from_elements(self.elements.iter().map(|e| e.element))
    }
}

fn lin(label: &'static str, m11: i64, m12: i64, m21: i64, m22: i64) -> LabelledElement {
    LabelledElement {
        label,
        element: AffineIsometry::from_rows(m11, m12, m21, m22),
    }
}

fn per_t(label: &'static str, m: [i64; 4], tau: (i64, i64)) -> LabelledElement {
    LabelledElement {
        label,
        element: AffineIsometry::new(
            Matrix2::new(m[0], m[1], m[2], m[3]),
            Point::ORIGIN,
            tau.into(),
        )
        .expect("unimodular literal"),
    }
}

/// The published element list of a named model. The simple walk has none.
pub fn published_group(model: ModelTag) -> Result<PublishedGroup> {
    let (elements, generators, angles) = match model {
        ModelTag::ReverseKreweras => (
            vec![
                lin("g0", 1, 0, 0, 1),
                lin("g1", -1, 1, 0, 1),
                lin("g2", 1, 0, 1, -1),
                lin("g3", -1, 1, -1, 0),
                lin("g4", 0, -1, 1, -1),
                lin("g5", 0, -1, -1, 0),
            ],
            vec!["g1", "g2"],
            vec![],
        ),
        ModelTag::Kreweras => (
            vec![
                lin("g0", 1, 0, 0, 1),
                lin("g1", -1, -1, 0, 1),
                lin("g2", 1, 0, -1, -1),
                lin("g3", -1, -1, 1, 0),
                lin("g4", 0, 1, -1, -1),
                lin("g5", 0, 1, 1, 0),
            ],
            vec!["g1", "g2"],
            vec![],
        ),
        ModelTag::Gessel => (
            vec![
                lin("g0", 1, 0, 0, 1),
                lin("g1", 1, 0, -2, -1),
                lin("g2", -1, -1, 0, 1),
                lin("g3", 1, 1, 0, -1),
                lin("g4", -1, 0, 2, 1),
                lin("g5", -1, 0, 0, -1),
                lin("g6", 1, 1, -2, -1),
                lin("g7", -1, -1, 2, 1),
            ],
            vec!["g1", "g2", "g3", "g4"],
            vec![
                ("g5", Ratio::new(1, 2)),
                ("g6", Ratio::new(1, 4)),
                ("g7", Ratio::new(5, 4)),
            ],
        ),
        ModelTag::MishnaRechnitzer => (
            vec![
                per_t("T123", [1, 0, 0, 1], (0, 0)),
                per_t("T213", [0, 1, 1, 0], (0, 0)),
                per_t("T132", [1, -1, 0, -1], (0, 1)),
                per_t("T321", [-1, 0, -1, 1], (1, 0)),
                per_t("T312", [-1, 1, -1, 0], (1, 0)),
                per_t("T231", [0, -1, 1, -1], (0, 1)),
            ],
            vec!["T213", "T132", "T321"],
            vec![],
        ),
        ModelTag::Simple | ModelTag::Custom => {
            return Err(Error::NoPublishedGroup(model.to_string()))
        }
    };
    Ok(PublishedGroup {
        model,
        elements,
        generators,
        listed_rotation_angles: angles,
    })
}

/// `{e, x ↦ −x, y ↦ −y, −I}`: the reflection group of the two axes.
pub fn axis_reflection_group() -> IsometryGroup {
    IsometryGroup::from_elements([
        AffineIsometry::from_rows(-1, 0, 0, 1),
        AffineIsometry::from_rows(1, 0, 0, -1),
        AffineIsometry::from_rows(-1, 0, 0, -1),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isometry::{generate_group, GroupCaps};

    #[test]
    fn published_groups_close() {
        for (m, n) in [
            (ModelTag::ReverseKreweras, 6),
            (ModelTag::Kreweras, 6),
            (ModelTag::Gessel, 8),
            (ModelTag::MishnaRechnitzer, 6),
        ] {
            let p = published_group(m).unwrap();
            let g = p.group();
            assert!(g.is_finite(), "{m}");
            assert_eq!(g.order(), n);
            let generated = generate_group(&p.generator_elements(), GroupCaps::default());
            assert_eq!(generated.order(), n, "{m}");
        }
        assert!(matches!(
            published_group(ModelTag::Simple),
            Err(Error::NoPublishedGroup(_))
        ));
    }

    #[test]
    fn source_names() {
        assert_eq!(
            "paper".parse::<GroupSource>().unwrap(),
            GroupSource::Published
        );
        assert_eq!(GroupSource::Search.to_string(), "search");
        assert!("book".parse::<GroupSource>().is_err());
        assert_eq!(axis_reflection_group().order(), 4);
    }
}
