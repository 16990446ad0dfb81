use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{LaurentPoly, Point, RationalPoint};
use crate::{Error, Result};

/// The curated walk models plus a tag for user-supplied step sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelTag {
    ReverseKreweras,
    Kreweras,
    Gessel,
    MishnaRechnitzer,
    Simple,
    Custom,
}

impl ModelTag {
    /// The five models with built-in step sets, in report order.
    pub const NAMED: [ModelTag; 5] = [
        ModelTag::ReverseKreweras,
        ModelTag::Kreweras,
        ModelTag::Gessel,
        ModelTag::MishnaRechnitzer,
        ModelTag::Simple,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ModelTag::ReverseKreweras => "reverse-kreweras",
            ModelTag::Kreweras => "kreweras",
            ModelTag::Gessel => "gessel",
            ModelTag::MishnaRechnitzer => "mishna-rechnitzer",
            ModelTag::Simple => "simple",
            ModelTag::Custom => "custom",
        }
    }
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModelTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModelTag::NAMED
            .iter()
            .copied()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::UnknownModel {
                given: s.to_string(),
                valid: ModelTag::NAMED.map(ModelTag::as_str).join(", "),
            })
    }
}

/// An ordered list of distinct lattice steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StepSet {
    steps: Vec<Point>,
    model: ModelTag,
}

impl StepSet {
    /// Builds a step set; steps must be pairwise distinct. Long steps are
    /// accepted, see [`StepSet::is_short`].
    pub fn new(steps: Vec<Point>, model: ModelTag) -> Result<Self> {
        for (i, s) in steps.iter().enumerate() {
            if steps[..i].contains(s) {
                return Err(Error::DuplicateStep(s.x, s.y));
            }
        }
        Ok(StepSet { steps, model })
    }

    pub fn custom(steps: Vec<Point>) -> Result<Self> {
        StepSet::new(steps, ModelTag::Custom)
    }

    pub fn named(model: ModelTag) -> Self {
        let raw: &[(i64, i64)] = match model {
            ModelTag::ReverseKreweras => &[(1, 0), (0, 1), (-1, -1)],
            ModelTag::Kreweras => &[(-1, 0), (0, -1), (1, 1)],
            ModelTag::Gessel => &[(-1, 0), (1, 0), (-1, -1), (1, 1)],
            ModelTag::MishnaRechnitzer => &[(-1, 1), (1, -1), (1, 1)],
            ModelTag::Simple => &[(1, 0), (-1, 0), (0, 1), (0, -1)],
            ModelTag::Custom => &[],
        };
        StepSet {
            steps: raw.iter().map(|&p| Point::from(p)).collect(),
            model,
        }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        Ok(StepSet::named(name.parse()?))
    }

    /// Parses the `"a,b;c,d;..."` text format. Whitespace is ignored and an
    /// empty string yields the empty set.
    pub fn parse(text: &str) -> Result<Self> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let steps = cleaned
            .split(';')
            .filter(|chunk| !chunk.is_empty())
            .map(|chunk| {
                chunk.parse::<Point>().map_err(|_| Error::Parse {
                    what: "step set",
                    input: text.to_string(),
                    reason: format!("`{chunk}` is not an integer pair `a,b`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        StepSet::custom(steps)
    }

    pub fn steps(&self) -> &[Point] {
        &self.steps
    }

    pub fn model(&self) -> ModelTag {
        self.model
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.steps.contains(&p)
    }

    pub fn index_of(&self, p: Point) -> Option<usize> {
        self.steps.iter().position(|&s| s == p)
    }

    /// Every step is a nearest-neighbour step (`a² + b² ≤ 2`).
    pub fn is_short(&self) -> bool {
        self.steps.iter().all(|s| s.norm_sq() <= 2)
    }

    /// Largest `|a|` and `|b|` over the steps.
    pub fn max_step(&self) -> (i64, i64) {
        self.steps
            .iter()
            .fold((0, 0), |(mx, my), s| (mx.max(s.x.abs()), my.max(s.y.abs())))
    }

    pub fn negated(&self) -> StepSet {
        StepSet {
            steps: self.steps.iter().map(|&s| -s).collect(),
            model: ModelTag::Custom,
        }
    }

    /// `Σ x^a y^b` over the steps.
    pub fn generating_function(&self) -> LaurentPoly {
        self.steps.iter().fold(LaurentPoly::zero(), |acc, &s| {
            &acc + &LaurentPoly::monomial(s)
        })
    }

    /// Componentwise mean of the steps.
    pub fn barycenter(&self) -> Result<RationalPoint> {
        if self.steps.is_empty() {
            return Err(Error::EmptyStepSet);
        }
        let n = self.steps.len() as i64;
        let sum = self.steps.iter().fold(Point::ORIGIN, |acc, &s| acc + s);
        Ok(RationalPoint::new(
            Ratio::new(sum.x, n),
            Ratio::new(sum.y, n),
        ))
    }

    /// Expected displacement after `t` steps.
    pub fn drift(&self, t: u32) -> Result<RationalPoint> {
        Ok(self.barycenter()?.scale(t as i64))
    }
}

impl fmt::Display for StepSet {
    /// Renders in the `"a,b;c,d"` input format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| format!("{},{}", s.x, s.y))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[(i64, i64)]) -> Vec<Point> {
        raw.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn named_sets_in_published_order() {
        assert_eq!(
            StepSet::by_name("kreweras").unwrap().steps(),
            pts(&[(-1, 0), (0, -1), (1, 1)])
        );
        assert_eq!(
            StepSet::by_name("gessel").unwrap().steps(),
            pts(&[(-1, 0), (1, 0), (-1, -1), (1, 1)])
        );
        assert_eq!(
            StepSet::by_name("reverse-kreweras").unwrap().steps(),
            pts(&[(1, 0), (0, 1), (-1, -1)])
        );
        assert_eq!(
            StepSet::by_name("mishna-rechnitzer").unwrap().steps(),
            pts(&[(-1, 1), (1, -1), (1, 1)])
        );
        for m in ModelTag::NAMED {
            assert!(StepSet::named(m).is_short());
        }
    }

    #[test]
    fn unknown_name_lists_valid_tags() {
        let err = StepSet::by_name("foo").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("foo"));
        assert!(msg.contains("gessel") && msg.contains("mishna-rechnitzer"));
    }

    #[test]
    fn parse_custom_format() {
        let s = StepSet::parse(" 1,0 ; 0,1;-1,-1 ").unwrap();
        assert_eq!(s.steps(), StepSet::named(ModelTag::ReverseKreweras).steps());
        assert_eq!(s.model(), ModelTag::Custom);
        assert_eq!(s.to_string(), "1,0;0,1;-1,-1");
        assert!(StepSet::parse("").unwrap().is_empty());
        assert!(StepSet::parse("1,0;x,1").is_err());
        assert_eq!(
            StepSet::parse("1,0;1,0").unwrap_err(),
            Error::DuplicateStep(1, 0)
        );
    }

    #[test]
    fn long_steps_are_accepted_but_flagged() {
        let s = StepSet::parse("2,0;-1,0").unwrap();
        assert!(!s.is_short());
        assert_eq!(s.max_step(), (2, 0));
    }

    #[test]
    fn step_generating_functions() {
        let kbar = StepSet::named(ModelTag::ReverseKreweras).generating_function();
        // x + y + x̄ȳ
        assert_eq!(kbar.num_terms(), 3);
        for p in [(1, 0), (0, 1), (-1, -1)] {
            assert_eq!(kbar.coeff(p.into()), 1.into());
        }
        let mr = StepSet::named(ModelTag::MishnaRechnitzer).generating_function();
        assert_eq!(mr.num_terms(), 3);
        for p in [(-1, 1), (1, -1), (1, 1)] {
            assert_eq!(mr.coeff(p.into()), 1.into());
        }
        assert!(StepSet::custom(vec![])
            .unwrap()
            .generating_function()
            .is_zero());
    }

    #[test]
    fn barycenters() {
        let third = Ratio::new(1, 3);
        let mr = StepSet::named(ModelTag::MishnaRechnitzer);
        assert_eq!(mr.barycenter().unwrap(), RationalPoint::new(third, third));
        assert_eq!(
            mr.drift(10).unwrap(),
            RationalPoint::new(Ratio::new(10, 3), Ratio::new(10, 3))
        );
        let zero = RationalPoint::new(0.into(), 0.into());
        assert_eq!(
            StepSet::named(ModelTag::Kreweras).barycenter().unwrap(),
            zero
        );
        assert_eq!(StepSet::named(ModelTag::Gessel).barycenter().unwrap(), zero);
        assert_eq!(
            StepSet::custom(vec![]).unwrap().barycenter(),
            Err(Error::EmptyStepSet)
        );
    }

    #[test]
    fn kreweras_is_reverse_kreweras_negated() {
        let k = StepSet::named(ModelTag::Kreweras);
        let kbar = StepSet::named(ModelTag::ReverseKreweras);
        let bk = k.barycenter().unwrap();
        let bkbar = kbar.barycenter().unwrap();
        assert_eq!(bk.x, -bkbar.x);
        assert_eq!(bk.y, -bkbar.y);
        let mut neg: Vec<Point> = kbar.negated().steps().to_vec();
        let mut orig: Vec<Point> = k.steps().to_vec();
        neg.sort();
        orig.sort();
        assert_eq!(neg, orig);
    }
}
