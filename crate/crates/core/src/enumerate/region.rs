use std::fmt;

use crate::lattice::Point;
use num_rational::Ratio;

/// Strict half-plane `a·x + b·y > c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HalfPlane {
    pub a: i64,
    pub b: i64,
    pub c: Ratio<i64>,
}

impl HalfPlane {
    pub fn new(a: i64, b: i64, c: Ratio<i64>) -> Self {
        HalfPlane { a, b, c }
    }

    pub fn contains(&self, p: Point) -> bool {
        Ratio::from_integer(self.a * p.x + self.b * p.y) > self.c
    }
}

fn linear_term(out: &mut String, coeff: i64, var: &str) {
    if coeff == 0 {
        return;
    }
    let mag = coeff.abs();
    if out.is_empty() {
        if coeff < 0 {
            out.push('-');
        }
    } else {
        out.push_str(if coeff < 0 { " - " } else { " + " });
    }
    if mag != 1 {
        out.push_str(&mag.to_string());
    }
    out.push_str(var);
}

impl fmt::Display for HalfPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lhs = String::new();
        linear_term(&mut lhs, self.a, "x");
        linear_term(&mut lhs, self.b, "y");
        if lhs.is_empty() {
            lhs.push('0');
        }
        write!(f, "{lhs} > {}", self.c)
    }
}

/// The set every partial sum of a walk must stay in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Region {
    Free,
    /// `x > 0` and `y > 0`, start included.
    OpenQuadrant,
    /// `x ≥ 0` and `y ≥ 0`. Alternate boundary convention, never the default.
    ClosedQuadrant,
    /// Intersection of strict half-planes, e.g. one chamber of an arrangement.
    Sector(Vec<HalfPlane>),
}

impl Region {
    pub fn admits(&self, p: Point) -> bool {
        match self {
            Region::Free => true,
            Region::OpenQuadrant => p.x > 0 && p.y > 0,
            Region::ClosedQuadrant => p.x >= 0 && p.y >= 0,
            Region::Sector(hs) => hs.iter().all(|h| h.contains(p)),
        }
    }

    pub fn is_free(&self) -> bool {
        matches!(self, Region::Free)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Region::Free => "free",
            Region::OpenQuadrant => "open-quadrant",
            Region::ClosedQuadrant => "closed-quadrant",
            Region::Sector(_) => "sector",
        }
    }

    /// Label plus the defining inequalities.
    pub fn describe(&self) -> String {
        match self {
            Region::Free => "free".into(),
            Region::OpenQuadrant => "x > 0, y > 0".into(),
            Region::ClosedQuadrant => "x >= 0, y >= 0".into(),
            Region::Sector(hs) => hs
                .iter()
                .map(|h| h.to_string())
                .collect::<Vec<_>>()
                .join(", "),
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sector_description() {
        let r = Region::Sector(vec![
            HalfPlane::new(1, -1, 0.into()),
            HalfPlane::new(0, 2, Ratio::new(1, 2)),
        ]);
        assert_eq!(r.describe(), "x - y > 0, 2y > 1/2");
        assert!(r.admits(Point::new(3, 1)));
        assert!(!r.admits(Point::new(3, 0)));
        assert_eq!(Region::OpenQuadrant.describe(), "x > 0, y > 0");
    }
}
