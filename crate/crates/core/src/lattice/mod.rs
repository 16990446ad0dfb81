//! Lattice points, step sets, Laurent polynomials and the quarter-plane
//! region classification.

mod laurent;
mod steps;

pub use laurent::LaurentPoly;
pub use steps::{ModelTag, StepSet};

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point of the integer lattice `Z × Z`. Ordered lexicographically by `(x, y)`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn norm_inf(self) -> i64 {
        self.x.abs().max(self.y.abs())
    }

    pub fn norm_sq(self) -> i64 {
        self.x * self.x + self.y * self.y
    }

    pub fn scale(self, k: i64) -> Point {
        Point::new(self.x * k, self.y * k)
    }

    pub fn classify(self) -> QuadrantRegion {
        classify_point(self)
    }
}

impl From<[i64; 2]> for Point {
    fn from([x, y]: [i64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [i64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl std::str::FromStr for Point {
    type Err = Error;

    /// Parses `"a,b"`, whitespace ignored.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: &str| Error::Parse {
            what: "point",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (a, b) = cleaned
            .split_once(',')
            .ok_or_else(|| err("expected `a,b`"))?;
        let x = a.parse::<i64>().map_err(|e| err(&e.to_string()))?;
        let y = b.parse::<i64>().map_err(|e| err(&e.to_string()))?;
        Ok(Point::new(x, y))
    }
}

/// The free generating function of `t`-step walks from `start`:
/// `x^a y^b · λ(S)^t`, whose coefficient at `b` counts free walks `start → b`.
pub fn free_gf_slice(steps: &StepSet, start: Point, t: u32) -> LaurentPoly {
    steps.generating_function().pow(t).shift(start)
}

/// A point with exact rational coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub x: Ratio<i64>,
    pub y: Ratio<i64>,
}

impl RationalPoint {
    pub fn new(x: Ratio<i64>, y: Ratio<i64>) -> Self {
        RationalPoint { x, y }
    }

    pub fn scale(self, k: i64) -> RationalPoint {
        RationalPoint::new(self.x * k, self.y * k)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Where a point sits relative to the open quarter plane `{x > 0, y > 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadrantRegion {
    Interior,
    /// `y = 0`, `x > 0`.
    XBoundary,
    /// `x = 0`, `y > 0`.
    YBoundary,
    /// The origin lies on both boundary rays.
    BothBoundaries,
    Exterior,
}

pub fn classify_point(p: Point) -> QuadrantRegion {
    match (p.x.signum(), p.y.signum()) {
        (1, 1) => QuadrantRegion::Interior,
        (0, 0) => QuadrantRegion::BothBoundaries,
        (1, 0) => QuadrantRegion::XBoundary,
        (0, 1) => QuadrantRegion::YBoundary,
        _ => QuadrantRegion::Exterior,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn classify_examples() {
        assert_eq!(classify_point(Point::new(3, 2)), QuadrantRegion::Interior);
        assert_eq!(
            classify_point(Point::new(0, 0)),
            QuadrantRegion::BothBoundaries
        );
        assert_eq!(classify_point(Point::new(-1, 2)), QuadrantRegion::Exterior);
        assert_eq!(classify_point(Point::new(4, 0)), QuadrantRegion::XBoundary);
        assert_eq!(classify_point(Point::new(0, 7)), QuadrantRegion::YBoundary);
        assert_eq!(classify_point(Point::new(0, -1)), QuadrantRegion::Exterior);
    }

    #[test]
    fn free_slices() {
        let kbar = StepSet::named(ModelTag::ReverseKreweras);
        assert_eq!(
            free_gf_slice(&kbar, Point::ORIGIN, 1),
            kbar.generating_function()
        );
        // (1,0) then (-1,-1), in either order
        assert_eq!(
            free_gf_slice(&kbar, Point::ORIGIN, 2).coeff(Point::new(0, -1)),
            2.into()
        );
        let g = StepSet::named(ModelTag::Gessel);
        assert_eq!(
            free_gf_slice(&g, Point::new(1, 1), 0),
            LaurentPoly::monomial(Point::new(1, 1))
        );
    }

    #[test]
    fn free_slice_totals() {
        for m in ModelTag::NAMED {
            let s = StepSet::named(m);
            for t in 0..=10u32 {
                let total = free_gf_slice(&s, Point::ORIGIN, t).coefficient_sum();
                assert_eq!(total, num_bigint::BigInt::from(s.len()).pow(t), "{m} t={t}");
            }
        }
    }

    #[test]
    fn parse_point() {
        assert_eq!(" 2 , -3 ".parse::<Point>().unwrap(), Point::new(2, -3));
        assert!("2".parse::<Point>().is_err());
        assert!("a,b".parse::<Point>().is_err());
    }

    proptest! {
        #[test]
        fn classification_partitions_the_lattice(x in -50i64..50, y in -50i64..50) {
            let p = Point::new(x, y);
            let tag = classify_point(p);
            let interior = x > 0 && y > 0;
            let on_x = y == 0 && x >= 0;
            let on_y = x == 0 && y >= 0;
            let expected = match (interior, on_x, on_y) {
                (true, _, _) => QuadrantRegion::Interior,
                (false, true, true) => QuadrantRegion::BothBoundaries,
                (false, true, false) => QuadrantRegion::XBoundary,
                (false, false, true) => QuadrantRegion::YBoundary,
                (false, false, false) => QuadrantRegion::Exterior,
            };
            prop_assert_eq!(tag, expected);
        }
    }
}
